"""Exhaustive and randomized structural checks of the block combinatorics."""
from functools import lru_cache

from hypothesis import given, settings, strategies as st

from brauerdm.decomp import blocks
from brauerdm.klpoly import ge_down_edges, kl_equals_cube
from brauerdm.tlcube import hypercube
from brauerdm.valley import (block_ball, default_prefix, e_delta, is_mibs, is_mibs_geometric, o_delta,
                             o_delta_inverse, s_delta, same_block, singularity, transport_f_i)
from brauerdm.young import charge, conjugate, partitions_of, remove_box, removable_boxes, skew

DELTAS = range(-3, 5)


@lru_cache(maxsize=None)
def upto(m):
    return [lam for k in range(m + 1) for lam in partitions_of(k)]


partitions = st.integers(0, 14).flatmap(lambda k: st.sampled_from(partitions_of(k)))
deltas = st.integers(-6, 8)


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).degree == lam.degree


@given(deltas, partitions)
def test_valley_roundtrip_random(delta, lam):
    a = o_delta(delta, lam)
    assert len(a) % 2 == 0
    assert o_delta_inverse(delta, lam, a) == lam
    N = default_prefix(delta, lam)
    assert o_delta(delta, lam, N + 1) == a
    assert o_delta(delta, lam, zero_sign="pos") == o_delta(delta, lam, zero_sign="neg") == a


@settings(max_examples=60)
@given(st.lists(st.integers(1, 12), unique=True).filter(lambda xs: len(xs) % 2 == 0))
def test_kl_closed_form_random(elements):
    assert kl_equals_cube(frozenset(elements))


def test_zero_sign_convention_independence():
    checked = 0
    for delta in DELTAS:
        for lam in upto(12):
            if 0 in e_delta(delta, lam).doubled:
                checked += 1
                assert o_delta(delta, lam, zero_sign="pos") == o_delta(delta, lam, zero_sign="neg")
    assert checked > 0


def test_bijectivity_within_blocks():
    for delta in DELTAS:
        for n in range(11):
            for b in blocks(delta, n).blocks:
                images = [o_delta(delta, lam) for lam in b.members]
                assert len(set(images)) == len(images)
                for lam, a in zip(b.members, images):
                    assert o_delta_inverse(delta, b.representative, a) == lam


def test_mibs_oracle_agreement():
    parts = upto(12)
    for delta in DELTAS:
        for lam in parts:
            for mu in parts:
                if mu != lam and lam.contains(mu):
                    assert is_mibs(delta, lam, mu) == is_mibs_geometric(delta, lam, mu), (delta, lam, mu)


def test_cover_property():
    parts = upto(12)
    for delta in DELTAS:
        for lam in parts:
            for mu in parts:
                if mu == lam or not lam.contains(mu) or not is_mibs(delta, lam, mu):
                    continue
                for mid in parts:
                    if mid not in (lam, mu) and lam.contains(mid) and mid.contains(mu):
                        assert not is_mibs(delta, mid, mu), (delta, lam, mid, mu)


def rim_end_boxes(delta, lam, mu):
    """Removable boxes of lam inside lam/mu with the largest charge magnitude."""
    inside = [b for b in removable_boxes(lam) if b in skew(lam, mu).boxes]
    top = max(abs(charge(delta, b)) for b in inside)
    return [b for b in inside if abs(charge(delta, b)) == top]


def test_singularity_step():
    checked = 0
    for delta in DELTAS:
        for lam in upto(12):
            for edge in ge_down_edges(o_delta(delta, lam)):
                mu = o_delta_inverse(delta, lam, edge.lower)
                size = len(skew(lam, mu))
                for box in rim_end_boxes(delta, lam, mu):
                    lower = remove_box(lam, box.row)
                    step = 1 if size == 2 else 0
                    assert s_delta(delta, lower) == s_delta(delta, lam) + step, (delta, lam, mu, box)
                    checked += 1
    assert checked > 800


def test_equal_singularity_keeps_valley_set():
    checked = 0
    for delta in DELTAS:
        for lam in upto(12):
            for box in removable_boxes(lam):
                lower = remove_box(lam, box.row)
                if s_delta(delta, lower) == s_delta(delta, lam):
                    assert o_delta(delta, lower) == o_delta(delta, lam), (delta, lam, box)
                    checked += 1
    assert checked > 3000


def test_embedding_moves_one_box():
    for delta in DELTAS:
        for lam in upto(8):
            for box in removable_boxes(lam):
                lower = remove_box(lam, box.row)
                if s_delta(delta, lower) != s_delta(delta, lam):
                    continue
                for mu in block_ball(delta, lam, 3):
                    image = transport_f_i(delta, lam, box.row, mu)
                    assert abs(image.degree - mu.degree) == 1
                    assert image.contains(mu) or mu.contains(image)
                    assert same_block(delta, lower, image)


def test_g_even_down_edges_lie_in_cube():
    for delta in DELTAS:
        for lam in upto(8):
            a = o_delta(delta, lam)
            for edge in ge_down_edges(a):
                assert edge.lower in hypercube(a).vertices


def test_singularity_pairs_are_opposite():
    for delta in DELTAS:
        for lam in upto(10):
            seq = e_delta(delta, lam)
            for i, j in singularity(seq).pairs:
                assert seq.doubled[i - 1] == -seq.doubled[j - 1] != 0
