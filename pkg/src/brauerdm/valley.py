"""Block geometry of B_n(delta): the shifted embedding, singularity and valley sets.

A partition lam is sent to the strongly descending sequence lam + rho_delta,
rho_delta = -(delta/2)(1,1,...) - (0,1,2,...). Entries are half-integers, so
they are stored doubled: entry i is 2*lam_i - delta - 2*(i-1). Only a finite
prefix is kept; past it the sequence continues with -delta - 2*(i-1).

Blocks (in the transposed labelling) are orbits of the type-D reflection group
intersected with dominant sequences; the valley set map identifies each block
with the graph G_even.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import NotContained, NotInImage, PrefixTooShort, SingularityMismatch, InternalError
from .klpoly import ge_down_edges, ge_edge_label, ge_up_edges
from .young import (Box, Partition, as_partition, charge, check_delta, is_rim, is_skew_shape,
                    remove_box, removable_boxes, skew)

PREFIX_ENV = "BRAUERDM_PREFIX_LEN"


def _tail(delta, i):
    """Doubled entry i (1-based) of rho_delta."""
    return -delta - 2 * (i - 1)


def min_prefix(delta: int, lam) -> int:
    """Shortest prefix holding every row of lam and every entry that can pair with another."""
    lam = as_partition(lam)
    n = len(lam)
    while True:
        entries = [2 * lam.part(i) + _tail(delta, i) for i in range(1, n + 1)]
        bound = delta + 2 * n  # magnitude of the first entry past the prefix
        if bound > 0 and all(abs(x) < bound for x in entries):
            return n
        n += 1


def default_prefix(delta: int, lam) -> int:
    lam = as_partition(lam)
    n = len(lam) + (lam[0] if lam else 0) + abs(delta) + 4
    override = os.environ.get(PREFIX_ENV)
    if override:
        n = max(int(override), min_prefix(delta, lam))
    return n


@dataclass(frozen=True)
class HalfIntSeq:
    """Prefix of lam + rho_delta, stored doubled."""
    doubled: tuple
    delta: int
    lam_len: int

    @property
    def N(self) -> int:
        return len(self.doubled)

    def values(self) -> tuple:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def partition(self) -> Partition:
        return Partition((x + self.delta + 2 * i) // 2 for i, x in enumerate(self.doubled))

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.values()) + ",...)"


@dataclass(frozen=True)
class SingularityData:
    pairs: frozenset
    count: int


def e_delta(delta: int, lam, N: int | None = None) -> HalfIntSeq:
    delta = check_delta(delta)
    lam = as_partition(lam)
    if N is None:
        N = default_prefix(delta, lam)
    need = min_prefix(delta, lam)
    if N < need:
        raise PrefixTooShort(f"prefix {N} too short for {lam} at delta={delta} (need {need})")
    return HalfIntSeq(tuple(2 * lam.part(i) + _tail(delta, i) for i in range(1, N + 1)),
                      delta, len(lam))


def singularity(seq: HalfIntSeq) -> SingularityData:
    where = {x: i for i, x in enumerate(seq.doubled, 1)}
    pairs = frozenset((i, where[-x]) for i, x in enumerate(seq.doubled, 1)
                      if x > 0 and -x in where)
    return SingularityData(pairs, len(pairs))


def s_delta(delta: int, lam) -> int:
    return singularity(e_delta(delta, lam)).count


def reg(seq: HalfIntSeq) -> list:
    """Drop every +-x doubleton; returns (doubled value, original index) pairs."""
    values = set(seq.doubled)
    return [(x, i) for i, x in enumerate(seq.doubled, 1) if x == 0 or -x not in values]


def _valley(entries, zero_sign="even") -> frozenset:
    """Ranks (by magnitude, smallest = 1) of the positive entries, made even by toggling 1."""
    order = sorted(entries, key=abs)
    positive = {rank for rank, x in enumerate(order, 1) if x > 0}
    if 0 in entries:
        zero_rank = order.index(0) + 1
        if zero_sign == "pos" or (zero_sign == "even" and len(positive) % 2):
            positive.add(zero_rank)
    if len(positive) % 2:
        positive ^= {1}
    return frozenset(positive)


def o_delta(delta: int, lam, N: int | None = None, zero_sign: str = "even") -> frozenset:
    """Valley set of lam: o(Reg(e_delta(lam))) restricted to positive terms, toggled to even order.

    ``zero_sign`` fixes the sign given to a zero entry ('even', 'pos' or 'neg');
    the result does not depend on it.
    """
    seq = e_delta(delta, lam, N)
    return _valley([x for x, _ in reg(seq)], zero_sign)


def o_delta_inverse(delta: int, anchor, b) -> Partition:
    """The unique mu in the block of ``anchor`` with o_delta(mu) = b."""
    delta = check_delta(delta)
    anchor = as_partition(anchor)
    b = frozenset(b)
    if len(b) % 2:
        raise NotInImage(f"valley sets have even order, got {sorted(b)}")
    N = default_prefix(delta, anchor) + max(b, default=0) + 2
    seq = e_delta(delta, anchor, N)
    regular = reg(seq)
    reg_values = {x for x, _ in regular}
    doubletons = [x for x in seq.doubled if x not in reg_values]
    mags = sorted(abs(x) for x in reg_values)
    if max(b, default=0) > len(mags):
        raise NotInImage(f"{sorted(b)} reaches past the prefix")
    anchor_neg = sum(x < 0 for x in seq.doubled) % 2
    found = set()
    for cand in (b, b ^ {1}):
        values = [m if rank in cand else -m for rank, m in enumerate(mags, 1)] + doubletons
        values.sort(reverse=True)
        if 0 not in values and sum(x < 0 for x in values) % 2 != anchor_neg:
            continue
        parts = [(x + delta + 2 * i) for i, x in enumerate(values)]
        if any(p < 0 or p % 2 for p in parts):
            continue
        parts = [p // 2 for p in parts]
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            continue
        found.add(Partition(parts))
    if not found:
        raise NotInImage(f"{sorted(b)} has no preimage in the block of {anchor}")
    if len(found) > 1:
        raise InternalError(f"{sorted(b)} has several preimages in the block of {anchor}")
    mu = found.pop()
    if o_delta(delta, mu) != b:
        raise NotInImage(f"{sorted(b)} is not a valley set in the block of {anchor}")
    return mu


def same_block(delta: int, lam, mu, N: int | None = None) -> bool:
    """True iff e_delta(lam), e_delta(mu) lie in one orbit of the type-D group."""
    delta = check_delta(delta)
    lam, mu = as_partition(lam), as_partition(mu)
    if N is None:
        N = max(default_prefix(delta, lam), default_prefix(delta, mu))
    u, w = e_delta(delta, lam, N).doubled, e_delta(delta, mu, N).doubled
    if sorted(map(abs, u)) != sorted(map(abs, w)):
        return False
    if 0 in u:
        return True  # a zero entry absorbs a sign change
    return sum(x < 0 for x in u) % 2 == sum(x < 0 for x in w) % 2


def is_mibs(delta: int, lam, mu) -> bool:
    """lam/mu is a minimal delta-balanced skew, decided through the G_even edge structure."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam == mu or not lam.contains(mu) or not same_block(delta, lam, mu):
        return False
    return ge_edge_label(o_delta(delta, mu), o_delta(delta, lam)) is not None


def _rotation_centres(delta, boxes):
    """Doubled centres of pi-rotations mapping one box of S onto an opposite-charge box."""
    b0 = min(boxes)
    c0 = charge(delta, b0)
    for b in sorted(boxes):
        if b != b0 and charge(delta, b) == -c0:
            yield (b0.row + b.row, b0.col + b.col)


def is_mibs_geometric(delta: int, lam, mu) -> bool:
    """Definition-level check that lam/mu is a pair of delta-opposite rims, no row fixed.

    A rim here is a skew shape whose dual graph is a path.
    """
    delta = check_delta(delta)
    lam, mu = as_partition(lam), as_partition(mu)
    if lam == mu or not lam.contains(mu):
        return False
    boxes = skew(lam, mu).boxes
    if len(boxes) % 2:
        return False
    for pr, pc in _rotation_centres(delta, boxes):
        rot = lambda b: Box(pr - b.row, pc - b.col)
        if {rot(b) for b in boxes} != boxes:
            continue
        if pr % 2 == 0 and any(b.row == pr // 2 for b in boxes):
            continue  # fixed row meets the skew (this also covers a fixed box)
        orbits = []
        for b in sorted(boxes):
            if b < rot(b):
                orbits.append((b, rot(b)))
        first, rest = orbits[0], orbits[1:]
        for choice in product((0, 1), repeat=len(rest)):
            rim = {first[0]} | {pair[c] for pair, c in zip(rest, choice)}
            if is_rim(rim) and is_skew_shape(rim):
                return True
    return False


def block_down_neighbors(delta: int, lam) -> list:
    """Partitions mu with lam/mu a minimal delta-balanced skew."""
    lam = as_partition(lam)
    a = o_delta(delta, lam)
    return sorted((o_delta_inverse(delta, lam, e.lower) for e in ge_down_edges(a)), reverse=True)


def block_up_neighbors(delta: int, lam) -> list:
    lam = as_partition(lam)
    a = o_delta(delta, lam)
    return sorted((o_delta_inverse(delta, lam, e.upper) for e in ge_up_edges(a)), reverse=True)


def block_ball(delta: int, lam, radius: int) -> list:
    """Vertices of the block graph within ``radius`` steps of lam (edges either way)."""
    lam = as_partition(lam)
    seen = {lam: 0}
    queue = deque([lam])
    while queue:
        nu = queue.popleft()
        if seen[nu] == radius:
            continue
        for nb in block_down_neighbors(delta, nu) + block_up_neighbors(delta, nu):
            if nb not in seen:
                seen[nb] = seen[nu] + 1
                queue.append(nb)
    return sorted(seen, key=lambda p: (seen[p], p))


def transport_f_i(delta: int, lam, i: int, mu) -> Partition:
    """Carry mu in the block of lam to the matching vertex in the block of lam - e_i."""
    lam, mu = as_partition(lam), as_partition(mu)
    if Box(i, lam.part(i)) not in removable_boxes(lam):
        raise NotContained(f"row {i} of {lam} has no removable box")
    lower = remove_box(lam, i)
    if s_delta(delta, lam) != s_delta(delta, lower):
        raise SingularityMismatch(f"{lam} and {lower} differ in singularity at delta={delta}")
    if not same_block(delta, lam, mu):
        raise NotInImage(f"{mu} is not in the block of {lam}")
    return o_delta_inverse(delta, lower, o_delta(delta, mu))
