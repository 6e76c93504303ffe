"""Verification batteries run by ``brauerdm verify`` and ``brauerdm selftest``.

Each check yields Result records; nothing here prints.
"""
from __future__ import annotations

from collections import namedtuple
from itertools import combinations

from .decomp import CONVENTIONS, blocks, decomp_matrix, decomp_row, is_unitriangular, row_labels
from .klpoly import ge_down_edges, kl_equals_cube, kl_row
from .oracle import dim_identity_report
from .tlcube import arc_apply, gamma_lower, hypercube, tl_diagram, to_binary
from .valley import (e_delta, is_mibs, is_mibs_geometric, o_delta, o_delta_inverse, reg, s_delta, singularity)
from .young import (Partition, add_box, addable_boxes, charge, dim_delta, double_factorial, enumerate_lambda_n,
                    partitions_of, remove_box, removable_boxes, skew)

Result = namedtuple("Result", "name ok detail")

SUITES = ("dims", "blocks", "kl", "mibs", "all")
DIM_DELTAS = (-1, 0, 1, 2, 3)
BLOCK_DELTAS = tuple(range(-2, 5))
MIBS_DELTAS = tuple(range(-3, 5))


def _bad(name, failures, limit=5):
    return Result(name, not failures, f"failures {failures[:limit]}" if failures else "")


def lambda_upto(max_size: int) -> list:
    """All partitions of size at most max_size."""
    return [lam for k in range(max_size + 1) for lam in partitions_of(k)]


# dimensions

def dim_identity_checks(deltas, max_n):
    for delta in deltas:
        for n in range(max_n + 1):
            rep = dim_identity_report(delta, n, "module")
            bad = [c["label"] for c in rep["columns"] if not c["ok"]]
            yield Result(f"dims delta={delta} n={n}", rep["pass"], f"failing columns {bad}" if bad else "")


def brauer_dimension_checks(max_n):
    for n in range(max_n + 1):
        total = sum(dim_delta(n, lam) ** 2 for lam in enumerate_lambda_n(n))
        yield Result(f"dim B_{n}", total == double_factorial(2 * n - 1), f"{total}")


def restriction_checks(max_n):
    """dim Delta_n(lam) = sum over lam - box and lam + box of dim Delta_{n-1}."""
    for n in range(1, max_n + 1):
        bad = []
        for lam in enumerate_lambda_n(n):
            nbrs = [remove_box(lam, b.row) for b in removable_boxes(lam)]
            if lam.degree < n:
                nbrs += [add_box(lam, b.row) for b in addable_boxes(lam)]
            if dim_delta(n, lam) != sum(dim_delta(n - 1, mu) for mu in nbrs):
                bad.append(str(lam))
        yield _bad(f"restriction n={n}", bad)


# blocks and decomposition matrices

def mibs_closure(delta, labels) -> list:
    """Classes of the symmetric-transitive closure of is_mibs on ``labels``."""
    parent = {lam: lam for lam in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lam in labels:
        for mu in labels:
            if mu != lam and lam.contains(mu) and is_mibs(delta, lam, mu):
                parent[find(lam)] = find(mu)
    classes = {}
    for lam in labels:
        classes.setdefault(find(lam), set()).add(lam)
    return sorted((frozenset(c) for c in classes.values()), key=lambda c: sorted(c))


def block_partition_checks(deltas, max_n):
    for delta in deltas:
        for n in range(max_n + 1):
            by_orbit = {frozenset(b.members) for b in blocks(delta, n).blocks}
            by_mibs = set(mibs_closure(delta, row_labels(delta, n)))
            yield Result(f"blocks delta={delta} n={n}", by_orbit == by_mibs,
                         "" if by_orbit == by_mibs else "block partitions differ")


def unitriangular_checks(deltas, max_n):
    for delta in deltas:
        for n in range(max_n + 1):
            for conv in CONVENTIONS:
                yield Result(f"unitriangular delta={delta} n={n} {conv}",
                             is_unitriangular(decomp_matrix(delta, n, conv)), "")


def globalization_checks(deltas, max_n):
    """decomp_matrix(delta, n) is decomp_matrix(delta, n + 2) restricted to Lambda^n.

    At delta = 0, n = 0 the empty label is simple for B_0 only; rows are then
    compared on the labels both matrices share.
    """
    for delta in deltas:
        for n in range(max_n + 1):
            small = decomp_matrix(delta, n)
            big = decomp_matrix(delta, n + 2).restrict(n)
            shared = [lam for lam in small.row_labels if lam in big.row_labels]
            ok = big.col_labels == small.col_labels and big.row_labels == shared
            ok = ok and all(small.row(lam) == big.row(lam) for lam in shared)
            if not (delta == 0 and n == 0):
                ok = ok and shared == small.row_labels
            yield Result(f"globalization delta={delta} n={n}", ok, "")


# G_even, KL rows and TL diagrams

def kl_checks(m):
    for k in range(0, m + 1, 2):
        for a in combinations(range(1, m + 1), k):
            a = frozenset(a)
            ok = kl_equals_cube(a)
            if ok:
                row = kl_row(a)
                ok = all(kl_row(a, via=e.lower).entries == row.entries for e in ge_down_edges(a))
            yield Result(f"kl {sorted(a)}", ok, "")


def tl1_checks(m):
    """For an adjacent 01-arc {alpha, alpha+1} of a, the TL diagram of a is that of
    <alpha>a with parts {alpha} u X, {alpha+1} u Y replaced by {alpha, alpha+1}, X u Y."""
    bad = []
    count = 0
    for k in range(m + 1):
        for a in combinations(range(1, m + 1), k):
            a = frozenset(a)
            for arc in gamma_lower(a):
                if arc.kind != "01":
                    continue
                count += 1
                b = arc_apply(a, arc)
                length = max(arc.j, max(a, default=0), max(b, default=0))
                before = tl_diagram(to_binary(b), length).parts()
                after = tl_diagram(to_binary(a), length).parts()
                pa = next(p for p in before if arc.i in p)
                pb = next(p for p in before if arc.j in p)
                rest = (pa | pb) - {arc.i, arc.j}
                expected = (before - {pa, pb}) | {frozenset((arc.i, arc.j))}
                if rest:
                    expected |= {frozenset(rest)}
                if pa == pb or after != expected:
                    bad.append((sorted(a), arc.i))
    yield _bad(f"TL arc replacement, {count} arcs over subsets of 1..{m}", bad)


# MiBS combinatorics

def mibs_agreement_checks(deltas, labels):
    for delta in deltas:
        bad = []
        for lam in labels:
            for mu in labels:
                if mu != lam and lam.contains(mu) and is_mibs(delta, lam, mu) != is_mibs_geometric(delta, lam, mu):
                    bad.append((str(lam), str(mu)))
        yield _bad(f"mibs oracle agreement delta={delta}", bad)


def singularity_step_checks(deltas, max_size):
    """Removing a rim-end box of lam/alpha.lam raises singularity by 1 iff the skew has 2 boxes."""
    for delta in deltas:
        bad, count = [], 0
        for lam in lambda_upto(max_size):
            for edge in ge_down_edges(o_delta(delta, lam)):
                mu = o_delta_inverse(delta, lam, edge.lower)
                cells = skew(lam, mu).boxes
                inside = [b for b in removable_boxes(lam) if b in cells]
                top = max(abs(charge(delta, b)) for b in inside)
                step = 1 if len(cells) == 2 else 0
                for b in inside:
                    if abs(charge(delta, b)) == top:
                        count += 1
                        if s_delta(delta, remove_box(lam, b.row)) != s_delta(delta, lam) + step:
                            bad.append((str(lam), str(mu), b))
        yield _bad(f"singularity step delta={delta} ({count} cases)", bad)


def equal_singularity_checks(deltas, max_size):
    """s(lam) = s(lam - e_i) forces o(lam) = o(lam - e_i)."""
    for delta in deltas:
        bad, count = [], 0
        for lam in lambda_upto(max_size):
            for b in removable_boxes(lam):
                lower = remove_box(lam, b.row)
                if s_delta(delta, lower) == s_delta(delta, lam):
                    count += 1
                    if o_delta(delta, lower) != o_delta(delta, lam):
                        bad.append((str(lam), b))
        yield _bad(f"equal singularity keeps valley set delta={delta} ({count} cases)", bad)


# suites

def dims_suite(max_n: int):
    yield from dim_identity_checks(DIM_DELTAS, max_n)
    yield from brauer_dimension_checks(max_n)
    yield from restriction_checks(max_n)


def blocks_suite(max_n: int):
    yield from block_partition_checks(BLOCK_DELTAS, max_n)
    yield from unitriangular_checks(MIBS_DELTAS, max_n)
    yield from globalization_checks(MIBS_DELTAS, max_n)


def kl_suite(max_n: int):
    yield from kl_checks(max(8, max_n))
    yield from tl1_checks(max(8, max_n))


def mibs_suite(max_n: int):
    yield from mibs_agreement_checks(MIBS_DELTAS, lambda_upto(max_n))
    yield from singularity_step_checks(MIBS_DELTAS, max_n)
    yield from equal_singularity_checks(MIBS_DELTAS, max_n)


def run_suite(name: str, max_n: int):
    if name == "all":
        for sub in SUITES[:-1]:
            yield from run_suite(sub, max_n)
        return
    yield from {"dims": dims_suite, "blocks": blocks_suite, "kl": kl_suite, "mibs": mibs_suite}[name](max_n)


def _eq(name, got, want):
    return Result(name, got == want, "" if got == want else f"got {got!r}, expected {want!r}")


def selftest():
    """Worked examples with known values."""
    P = Partition.parse
    yield _eq("o_2(-)", o_delta(2, P("-")), frozenset())
    yield _eq("o_2(3.3)", o_delta(2, P("3.3")), frozenset({1, 2}))
    yield _eq("o_0(3.3.3.1)", o_delta(0, P("3.3.3.1")), frozenset({1, 2}))
    yield _eq("o_0(4.3.3.1)", o_delta(0, P("4.3.3.1")), frozenset())
    yield _eq("o_2(7.7.6.5.3.2)", o_delta(2, P("7.7.6.5.3.2")), frozenset({1, 3, 5, 6}))
    yield _eq("e_2(7.7.6.5.3.2)", e_delta(2, P("7.7.6.5.3.2")).doubled[:8], (12, 10, 6, 2, -4, -8, -14, -16))
    big = P("13.13.13.13.13.11.11.6.4.4.2.2.2")
    sing = singularity(e_delta(1, big))
    yield _eq("5-fold singular example", sorted(sing.pairs), [(3, 13), (4, 12), (5, 11), (6, 10), (7, 9)])
    yield _eq("o_1 of the 5-fold example", o_delta(1, big), frozenset({2, 3}))
    yield _eq("binary 1356", to_binary({1, 3, 5, 6}), (1, 0, 1, 0, 1, 1))
    yield _eq("h^{34}", hypercube({3, 4}).vertices,
              {frozenset({3, 4}): 0, frozenset({2, 4}): 1, frozenset({1, 3}): 1, frozenset({1, 2}): 2})
    yield _eq("h^{1356} size", len(hypercube({1, 3, 5, 6}).vertices), 8)
    yield _eq("h^{1,7,8,10,11} size", len(hypercube({1, 7, 8, 10, 11}).vertices), 16)
    row = decomp_row(2, P("7.7.6.5.3.2"))
    yield _eq("h_2(7.7.6.5.3.2)", {str(mu): d for mu, d in row.depths.items()},
              {"7.7.6.5.3.2": 0, "7.7.5.5.2.2": 1, "7.6.6.5.3.1": 1, "6.5.2.2.1": 1,
               "7.6.5.5.2.1": 2, "6.4.2.1.1": 2, "5.5.2.2": 2, "5.4.2.1": 3})
    yield _eq("h_1(4.4.2.2)", {str(mu) for mu in decomp_row(1, P("4.4.2.2")).depths},
              {"4.4.2.2", "4.3.2.1", "3.2.1", "2.2"})
    yield _eq("o_inverse 1256", o_delta_inverse(2, P("7.7.6.5.3.2"), {1, 2, 5, 6}), P("7.7.5.5.2.2"))
    yield _eq("Reg(4,3,1,0,-1,-5,...)", [x for x, _ in reg(e_delta(0, P("4.4.3.3.3")))][:5], [8, 6, 0, -10, -12])
    yield _eq("Reg(1,-1,-3,...)", [x for x, _ in reg(e_delta(2, P("2.1")))][:3], [-6, -8, -10])
    m = decomp_matrix(0, 4, "module")
    yield _eq("P_4(2) in delta=0", {str(k) for k in m.row(P("2"))}, {"2", "-"})
    yield _eq("P_4(3.1) in delta=0", {str(k) for k in m.row(P("3.1"))}, {"3.1", "2"})
    yield _eq("kl row 34", str(kl_row({3, 4})), "34:0 24:1 13:1 12:2")
