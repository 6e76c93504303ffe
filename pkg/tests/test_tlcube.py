from itertools import combinations, product

import pytest

from brauerdm.errors import NotApplicable, PreconditionViolated
from brauerdm.klpoly import ge_edge_label
from brauerdm.sets import short_label
from brauerdm.tlcube import (Arc, arc_apply, bump01, bump10, bump_cube, cube_double, from_binary, gamma_all,
                             gamma_lower, hypercube, parse_word, tl_diagram, to_binary)
from brauerdm.valley import is_mibs_geometric, o_delta, o_delta_inverse
from brauerdm.young import Partition, partitions_of


def subsets(m):
    return [frozenset(c) for k in range(m + 1) for c in combinations(range(1, m + 1), k)]


def depths(h):
    return {short_label(v): d for v, d in h.vertices.items()}


def test_to_binary():
    assert to_binary({1, 3, 5, 6}) == (1, 0, 1, 0, 1, 1)
    assert to_binary(set()) == ()
    assert to_binary({3, 4}) == (0, 0, 1, 1)
    assert from_binary((1, 0, 1, 0, 1, 1)) == {1, 3, 5, 6}


def test_tl_diagram_examples():
    d = tl_diagram(parse_word("10011"))
    assert {(a.i, a.j) for a in d.arcs} == {(3, 4), (2, 5)} and d.singletons == (1,)
    d = tl_diagram(parse_word("101011"))
    assert {(a.i, a.j) for a in d.arcs} == {(2, 3), (4, 5), (1, 6)} and d.singletons == ()
    assert tl_diagram(()).arcs == () and tl_diagram(()).singletons == ()


def test_gamma():
    assert {(a.i, a.j) for a in gamma_lower({1, 3, 5, 6})} == {(2, 3), (4, 5)}
    assert {(a.i, a.j) for a in gamma_all({1, 3, 5, 6})} == {(2, 3), (4, 5), (1, 6)}
    assert gamma_lower({1, 2}) == [Arc(1, 2, "11")]


def test_arc_apply_examples():
    assert arc_apply({5, 6}, Arc(3, 6, "01")) == {3, 5}
    assert arc_apply({1, 4, 5, 6}, Arc(1, 6, "11")) == {4, 5}
    assert arc_apply({1, 3, 5, 6}, Arc(2, 3, "01")) == {1, 2, 5, 6}
    with pytest.raises(NotApplicable):
        arc_apply({2, 3}, Arc(2, 3, "01"))
    with pytest.raises(NotApplicable):
        arc_apply({1}, Arc(1, 2, "11"))


def test_hypercube_34():
    assert depths(hypercube({3, 4})) == {"34": 0, "24": 1, "13": 1, "12": 2}


def test_hypercube_1356():
    assert depths(hypercube({1, 3, 5, 6})) == {
        "1356": 0, "1256": 1, "1346": 1, "35": 1, "1246": 2, "25": 2, "34": 2, "24": 3}


def test_hypercube_1356_partition_labels():
    lam = Partition.parse("7.7.6.5.3.2")
    h = hypercube(o_delta(2, lam))
    labels = {short_label(v): str(o_delta_inverse(2, lam, v)).replace(".", "") for v in h.vertices}
    assert labels == {"1356": "776532", "1256": "775522", "1346": "766531", "35": "65221",
                      "1246": "765521", "25": "64211", "34": "5522", "24": "5421"}


def test_hypercube_big():
    h = hypercube({1, 7, 8, 10, 11})
    dotted = lambda v: ".".join(map(str, sorted(v)))
    layers = [sorted(dotted(v) for v in layer) for layer in h.layers()]
    assert layers == [
        ["1.7.8.10.11"],
        sorted(["1.6.8.10.11", "1.7.8.9.11", "1.5.7.10.11", "1.4.7.8.10"]),
        sorted(["1.6.8.9.11", "1.5.6.10.11", "1.5.7.9.11", "1.4.6.8.10", "1.4.7.8.9", "1.4.5.7.10"]),
        sorted(["1.5.6.9.11", "1.4.6.8.9", "1.4.5.6.10", "1.4.5.7.9"]),
        ["1.4.5.6.9"],
    ]
    assert {(g.i, g.j) for _, g in h.shoulder()} == {(6, 7), (9, 10), (5, 8), (4, 11)}


def test_bump_words():
    assert bump01((0, 1), 2) == (0, 0, 1, 1)
    assert bump10((0, 1), 2) == (0, 1, 0, 1)
    assert bump01((), 1) == (0, 1)


def test_cube_double_4322_to_4422():
    # h_1(4322) is h^{2} (untoggled); inserting 01 at 2 and doubling gives h_1(4422) = h^{34}
    h = hypercube({2})
    bumped = bump_cube(h, 2)
    assert {(g.i, g.j) for g in bumped.generators} == {(1, 4)}
    doubled = cube_double(bumped, 2)
    assert doubled.same_cube(hypercube({3, 4}))


def test_cube_double_precondition():
    with pytest.raises(PreconditionViolated):
        cube_double(hypercube({3, 4}), 1)


def _iterative_matching(bits):
    """Repeatedly pair an unmatched 0 with the next unmatched position if that is a 1."""
    free = list(range(1, len(bits) + 1))
    arcs = set()
    changed = True
    while changed:
        changed = False
        for k in range(len(free) - 1):
            i, j = free[k], free[k + 1]
            if bits[i - 1] == 0 and bits[j - 1] == 1:
                arcs.add((i, j))
                del free[k:k + 2]
                changed = True
                break
    return arcs


def test_bracket_matching_equivalence():
    for length in range(17):
        for bits in product((0, 1), repeat=length):
            d = tl_diagram(bits, length)
            assert {(a.i, a.j) for a in d.arcs if a.kind == "01"} == _iterative_matching(bits)


def test_tl_validity():
    for length in range(13):
        for bits in product((0, 1), repeat=length):
            d = tl_diagram(bits, length)
            spans = [(a.i, a.j) for a in d.arcs]
            for (i, j), (k, l) in combinations(spans, 2):
                assert not (i < k < j < l or k < i < l < j)
            for s in d.singletons:
                assert not any(i < s < j for i, j in spans)
            covered = sorted([p for a in d.arcs for p in (a.i, a.j)] + list(d.singletons))
            assert covered == list(range(1, length + 1))


def test_hypercube_multiplicity_free():
    for a in subsets(12):
        if len(a) % 2 == 0:
            h = hypercube(a)
            assert len(h.vertices) == 2 ** len(gamma_all(a))


def test_eq_hyp_lemma():
    for a in subsets(8):
        top = max(a, default=0)
        for alpha in range(1, top + 2):
            lhs = cube_double(bump_cube(hypercube(a), alpha), alpha)
            assert lhs.same_cube(hypercube(bump01(a, alpha))), (sorted(a), alpha)


def _tl_parts(bits, length):
    return tl_diagram(bits, length).parts()


def test_tl1_structure():
    for a in subsets(12):
        bits = to_binary(a)
        for arc in gamma_lower(a):
            if arc.kind != "01":
                continue
            alpha = arc.i
            b = arc_apply(a, arc)
            length = max(len(bits), len(to_binary(b)))
            before = _tl_parts(to_binary(b), length)
            after = _tl_parts(bits, length)
            part_a = next(p for p in before if alpha in p)
            part_b = next(p for p in before if alpha + 1 in p)
            assert part_a != part_b
            rest = (part_a | part_b) - {alpha, alpha + 1}
            expected = (before - {part_a, part_b}) | {frozenset({alpha, alpha + 1})}
            if rest:
                expected |= {frozenset(rest)}
            assert after == expected, (sorted(a), alpha)


def test_down_edge_consistency():
    for delta in range(-3, 5):
        for n in range(9):
            for lam in partitions_of(n):
                h = hypercube(o_delta(delta, lam))
                for lower, _ in h.shoulder():
                    if ge_edge_label(lower, h.root) is None:
                        continue
                    mu = o_delta_inverse(delta, lam, lower)
                    assert is_mibs_geometric(delta, lam, mu), (delta, lam, mu)
