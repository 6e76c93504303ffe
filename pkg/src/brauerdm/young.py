"""Young diagram combinatorics: partitions, boxes, charges, skews and rims.

Boxes use 1-based (row, col) coordinates; the content of a box is col - row.
"""
from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from numbers import Integral

from .errors import NonIntegerDelta, NotContained, ParityError

Box = namedtuple("Box", "row col")


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Serializes as dot-joined parts, with the empty partition written "-".

    >>> Partition([4, 2, 1]).conjugate()
    Partition(3.2.1.1)
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", "", "0", "()"):
            return cls()
        return cls(int(p) for p in text.split("."))

    @property
    def degree(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def boxes(self) -> set:
        return {Box(r, c) for r, row in enumerate(self, 1) for c in range(1, row + 1)}

    def part(self, i: int) -> int:
        """Length of row i (1-based); zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __str__(self):
        return ".".join(map(str, self)) if self else "-"

    def __repr__(self):
        return f"Partition({self})"


EMPTY = Partition()


def as_partition(lam) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    return Partition(lam)


def check_delta(delta) -> int:
    """Return delta as an int, rejecting non-integer parameters."""
    if isinstance(delta, bool):
        raise NonIntegerDelta("delta must be an integer")
    if isinstance(delta, Integral):
        return int(delta)
    try:
        as_int = int(delta)
    except (TypeError, ValueError):
        raise NonIntegerDelta(f"delta={delta!r} is not an integer") from None
    if as_int != delta:
        raise NonIntegerDelta(
            f"delta={delta} is not an integer: B_n(delta) is then semisimple over C "
            "and every decomposition matrix is the identity"
        )
    return as_int


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def content(box: Box) -> int:
    return box.col - box.row


def charge(delta: int, box: Box) -> int:
    """The delta-charge delta - 1 - 2*content(box)."""
    return delta - 1 - 2 * content(box)


def removable_boxes(lam) -> list[Box]:
    lam = as_partition(lam)
    return [Box(i, lam[i - 1]) for i in range(1, len(lam) + 1)
            if lam.part(i) > lam.part(i + 1)]


def addable_boxes(lam) -> list[Box]:
    lam = as_partition(lam)
    return [Box(i, lam.part(i) + 1) for i in range(1, len(lam) + 2)
            if i == 1 or lam.part(i - 1) > lam.part(i)]


def remove_box(lam, i: int) -> Partition:
    """lam - e_i: shorten row i by one."""
    lam = as_partition(lam)
    parts = list(lam)
    parts[i - 1] -= 1
    return Partition(parts)


def add_box(lam, i: int) -> Partition:
    lam = as_partition(lam)
    parts = list(lam) + [0]
    parts[i - 1] += 1
    return Partition(parts)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition
    boxes: frozenset

    def __len__(self):
        return len(self.boxes)


def skew(lam, mu) -> SkewShape:
    lam, mu = as_partition(lam), as_partition(mu)
    if not lam.contains(mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    return SkewShape(lam, mu, frozenset(lam.boxes() - mu.boxes()))


def is_rim(boxes) -> bool:
    """True iff the dual graph of the boxes (side-sharing adjacency) is a simple path."""
    boxes = set(boxes)
    if len(boxes) <= 1:
        return True
    degree = {}
    for r, c in boxes:
        degree[(r, c)] = sum((r + dr, c + dc) in boxes
                             for dr, dc in ((1, 0), (-1, 0), (0, 1), (0, -1)))
    if any(d > 2 for d in degree.values()):
        return False
    if sum(d == 1 for d in degree.values()) != 2:
        return False
    # connected with max degree 2 and two leaves is a path
    start = next(iter(boxes))
    seen, stack = {start}, [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in boxes and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(boxes)


def is_skew_shape(boxes) -> bool:
    """True iff the boxes equal lam/mu for some partitions mu within lam.

    Equivalently: each row is an interval and, over consecutive rows, both
    interval ends are weakly decreasing (empty rows in between are allowed
    only where the shape splits into pieces).
    """
    rows = {}
    for r, c in boxes:
        rows.setdefault(r, []).append(c)
    spans = []
    for r in sorted(rows):
        cols = sorted(rows[r])
        if cols[-1] - cols[0] + 1 != len(cols):
            return False
        spans.append((r, cols[0], cols[-1]))
    for (r1, s1, e1), (r2, s2, e2) in zip(spans, spans[1:]):
        if r2 == r1 + 1 and (s2 > s1 or e2 > e1):
            return False
        if r2 > r1 + 1 and e2 >= s1:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order, (n) first."""

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def enumerate_lambda_n(n: int) -> list[Partition]:
    """Labels of the cell modules of B_n: partitions of n, n-2, ..., down to 0 or 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    for size in range(n, -1, -2):
        out.extend(partitions_of(size))
    return out


def hook_lengths(lam) -> list[int]:
    lam = as_partition(lam)
    conj = lam.conjugate()
    return [lam[r - 1] - c + conj[c - 1] - r + 1
            for r in range(1, len(lam) + 1) for c in range(1, lam[r - 1] + 1)]


def num_standard_tableaux(lam) -> int:
    lam = as_partition(lam)
    return factorial(lam.degree) // prod(hook_lengths(lam))


def double_factorial(m: int) -> int:
    """m!! with (-1)!! = 1."""
    return prod(range(m, 0, -2)) if m > 0 else 1


def dim_delta(n: int, lam) -> int:
    """Dimension of the cell module Delta_n(lam): C(n,l) (n-l-1)!! f^lam."""
    lam = as_partition(lam)
    l = lam.degree
    if n < l or (n - l) % 2:
        raise ParityError(f"{lam} is not in Lambda^{n}")
    return comb(n, l) * double_factorial(n - l - 1) * num_standard_tableaux(lam)
