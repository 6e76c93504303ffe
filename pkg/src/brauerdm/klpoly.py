"""The graph G_even on even subsets of {1, 2, ...} and parabolic KL rows on it.

An alpha-edge joins a lower set containing alpha (but not alpha+1) to the set
with alpha replaced by alpha+1; a 12-edge joins a set missing both 1 and 2 to
its union with {1, 2}. The empty set is the unique bottom vertex.

Rows of the parabolic Kazhdan-Lusztig array are built up the graph from the
root row {(): 1}; every entry is expected to come out as a single power v^i,
and that exponent is what a row stores.
"""
from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InternalError
from .sets import short_label
from .tlcube import hypercube

TWELVE = "12"

GeEdge = namedtuple("GeEdge", "lower upper label")


def _label_key(label):
    return (0, 0) if label == TWELVE else (1, label)


def s_neighbor(d, label):
    """The vertex joined to ``d`` by an edge with this label, and whether it lies above.

    Returns None when ``d`` has no such edge (at most one exists per label).
    """
    d = frozenset(d)
    if label == TWELVE:
        if 1 not in d and 2 not in d:
            return d | {1, 2}, True
        if 1 in d and 2 in d:
            return d - {1, 2}, False
        return None
    alpha = label
    if alpha in d and alpha + 1 not in d:
        return (d - {alpha}) | {alpha + 1}, True
    if alpha + 1 in d and alpha not in d:
        return (d - {alpha + 1}) | {alpha}, False
    return None


def ge_neighbors(a) -> list[GeEdge]:
    """All G_even edges incident to ``a``, up-edges and down-edges, ordered by label."""
    a = frozenset(a)
    if len(a) % 2:
        raise ValueError(f"G_even vertices have even order, got {sorted(a)}")
    top = max(a, default=0)
    edges = []
    for label in [TWELVE] + list(range(1, top + 1)):
        nb = s_neighbor(a, label)
        if nb is None:
            continue
        other, above = nb
        edges.append(GeEdge(a, other, label) if above else GeEdge(other, a, label))
    return edges


def ge_down_edges(a) -> list[GeEdge]:
    a = frozenset(a)
    return [e for e in ge_neighbors(a) if e.upper == a]


def ge_up_edges(a) -> list[GeEdge]:
    a = frozenset(a)
    return [e for e in ge_neighbors(a) if e.lower == a]


def ge_edge_label(lower, upper):
    """Label of the G_even edge lower -> upper, or None if there is none."""
    lower, upper = frozenset(lower), frozenset(upper)
    gone, new = lower - upper, upper - lower
    if not gone and new == {1, 2}:
        return TWELVE
    if len(gone) == 1 and len(new) == 1:
        (alpha,), (beta,) = gone, new
        if beta == alpha + 1:
            return alpha
    return None


@lru_cache(maxsize=None)
def height(a) -> int:
    """Distance of ``a`` from the empty set in G_even (the graph is graded)."""
    a = frozenset(a)
    if not a:
        return 0
    return height(ge_down_edges(a)[0].lower) + 1


def even_subsets(m: int) -> list[frozenset]:
    """Even-order subsets of {1..m}, ordered by height then elements."""
    out = [frozenset(c) for k in range(0, m + 1, 2) for c in combinations(range(1, m + 1), k)]
    return sorted(out, key=lambda s: (height(s), sorted(s)))


# Laurent polynomials in v are dicts {exponent: coefficient}.

def _shift(poly, k):
    return {e + k: c for e, c in poly.items()}


def _add(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


@dataclass(frozen=True)
class PolyRow:
    """Row of the parabolic KL array: p_owner(d) = v ** entries[d]."""
    owner: frozenset
    entries: dict

    def polynomial(self, d) -> dict:
        e = self.entries.get(frozenset(d))
        return {} if e is None else {e: 1}

    def __str__(self):
        items = sorted(self.entries.items(), key=lambda kv: (kv[1], [-x for x in sorted(kv[0], reverse=True)]))
        return " ".join(f"{short_label(d)}:{e}" for d, e in items)


@lru_cache(maxsize=None)
def _raw_row(a: frozenset) -> tuple:
    """Memoized row along the default (first) incoming edge, as a tuple of items."""
    if not a:
        return ((a, ((0, 1),)),)
    edge = ge_down_edges(a)[0]
    row = _recurse(a, edge)
    return tuple((d, tuple(sorted(p.items()))) for d, p in row.items())


def _row_dict(a):
    return {d: dict(p) for d, p in _raw_row(frozenset(a))}


def _recurse(a, edge):
    """One step of the recursion from p_B to p_A along the edge (B, A=a)."""
    p_b = _row_dict(edge.lower)
    s = edge.label
    candidates = set(p_b)
    for d in p_b:
        nb = s_neighbor(d, s)
        if nb is not None:
            candidates.add(nb[0])
    row = {}
    for d in candidates:
        nb = s_neighbor(d, s)
        if nb is None:
            continue  # reflected point leaves the dominant region: no term
        d2, above = nb
        term = _add(_shift(p_b.get(d, {}), 1 if above else -1), p_b.get(d2, {}))
        if term:
            row[d] = term
    # the correction p_A -= sum_{D<A} p'_A(D)(0) p_D must be empty here
    for d, p in row.items():
        if d != a and p.get(0):
            raise InternalError(
                f"non-zero constant term at {sorted(d)} in row {sorted(a)}: "
                "subtraction step would fire"
            )
    return row


def _finalize(a, row) -> PolyRow:
    entries = {}
    for d, p in row.items():
        if len(p) != 1:
            raise InternalError(f"entry {sorted(d)} of row {sorted(a)} is not a monomial: {p}")
        (e, c), = p.items()
        if c != 1 or e < 0:
            raise InternalError(f"entry {sorted(d)} of row {sorted(a)} is {c}*v^{e}")
        entries[d] = e
    if entries.get(a) != 0:
        raise InternalError(f"diagonal entry of row {sorted(a)} is not 1")
    return PolyRow(a, entries)


def kl_row(a, via=None) -> PolyRow:
    """Parabolic KL row p_a, computed from p_B along the edge (B, a).

    ``via`` picks the lower end B of the incoming edge; by default the first
    down-edge of ``a`` is used (the result does not depend on this choice).
    """
    a = frozenset(a)
    if len(a) % 2:
        raise ValueError(f"rows are indexed by even sets, got {sorted(a)}")
    if via is None:
        return _finalize(a, _row_dict(a))
    via = frozenset(via)
    for edge in ge_down_edges(a):
        if edge.lower == via:
            return _finalize(a, _recurse(a, edge))
    raise ValueError(f"{sorted(via)} -> {sorted(a)} is not an edge of G_even")


def kl_equals_cube(a) -> bool:
    """Check the closed form: p_a(b) = v^depth(b) over the hypercube h^a."""
    a = frozenset(a)
    return kl_row(a).entries == hypercube(a).vertices


def poly_table(m: int):
    """Exponent table over the even subsets of {1..m}.

    Returns (labels, grid) with grid[i][j] the exponent of p_{labels[i]}(labels[j])
    or None where the polynomial vanishes.
    """
    labels = even_subsets(m)
    grid = []
    for a in labels:
        row = kl_row(a).entries
        grid.append([row.get(b) for b in labels])
    return labels, grid
