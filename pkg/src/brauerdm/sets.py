"""Valley sets: finite subsets of {1, 2, ...} stored as frozensets."""
from __future__ import annotations


def valley_set(elements=()) -> frozenset:
    s = frozenset(int(e) for e in elements)
    if any(e < 1 for e in s):
        raise ValueError(f"valley set elements must be positive: {sorted(s)}")
    return s


def toggle_one(a) -> frozenset:
    return frozenset(a) ^ {1}


def parse_set(text: str) -> frozenset:
    """Parse "1,3,5,6" (or "{1,3,5,6}", or "-" for the empty set)."""
    text = text.strip().strip("{}")
    if text in ("", "-"):
        return frozenset()
    return valley_set(int(t) for t in text.replace(" ", ",").split(",") if t)


def format_set(a) -> str:
    """Brace form used on the command line: {1,3,5,6}."""
    return "{" + ",".join(map(str, sorted(a))) + "}"


def short_label(a) -> str:
    """Compact digit-string label, e.g. 1356; elements >= 10 force a dotted form."""
    if not a:
        return "-"
    items = sorted(a)
    if items[-1] < 10:
        return "".join(map(str, items))
    return ".".join(map(str, items))


def set_key(a):
    """Deterministic ordering key: by size, then by sorted elements."""
    return (len(a), sorted(a))
