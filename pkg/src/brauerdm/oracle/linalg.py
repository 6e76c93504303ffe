"""Exact rank by fraction-free elimination, and certified kernels via a prime.

Large kernels are found modulo a word-size prime (python-flint), rationally
reconstructed, and then checked exactly. The prime gives an upper bound on the
kernel dimension; verified rational vectors give the matching lower bound.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

# primes below 2**62
PRIMES = (4611686018427387847, 4611686018427387817, 4611686018427387787)


def _integer_rows(matrix) -> list:
    rows = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    return rows


def bareiss_rank(matrix) -> int:
    """Rank over Q of a matrix of ints or Fractions (Bareiss elimination)."""
    a = _integer_rows(matrix)
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            f = a[r][c]
            a[r] = [(p * x - f * y) // prev for x, y in zip(a[r], a[rank])]
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rational_reconstruct(a: int, p: int):
    """The fraction n/d with |n|, d <= sqrt(p/2) congruent to a mod p, or None."""
    a %= p
    bound = isqrt(p // 2)
    r0, r1, s0, s1 = p, a, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def _flint():
    try:
        import flint
    except ImportError as exc:  # pragma: no cover - depends on the environment
        raise ImportError("large kernels need python-flint (pip install 'brauerdm[slow]')") from exc
    return flint


def kernel_mod_p(blocks, ncols: int, p: int) -> list:
    """Canonical (reduced echelon) basis of the common kernel of integer matrices, mod p.

    ``blocks`` yields row lists; kernels are intersected one block at a time.
    Returns basis vectors as lists of residues.
    """
    flint = _flint()
    basis = None  # columns spanning the current kernel; None means everything
    for rows in blocks:
        if basis is not None and basis.ncols() == 0:
            break
        m = flint.nmod_mat([[x % p for x in row] for row in rows], p)
        if basis is not None:
            m = m * basis
        null, nullity = m.nullspace()
        null = flint.nmod_mat([[int(null[i, j]) for j in range(nullity)] for i in range(null.nrows())], p) \
            if nullity else flint.nmod_mat(null.nrows(), 0, [], p)
        basis = null if basis is None else basis * null
    if basis is None:
        basis = flint.nmod_mat([[int(i == j) for j in range(ncols)] for i in range(ncols)], p)
    k = basis.ncols()
    if k == 0:
        return []
    echelon = basis.transpose().rref()[0]
    return [[int(echelon[i, j]) for j in range(ncols)] for i in range(k)]


def certified_kernel(blocks_factory, ncols: int, verify) -> list:
    """Exact rational kernel basis, certified.

    ``blocks_factory()`` yields the integer row blocks; ``verify(vector)``
    checks a rational vector exactly. Raises RuntimeError if no prime certifies.
    """
    for p in PRIMES:
        residues = kernel_mod_p(blocks_factory(), ncols, p)
        vectors = []
        for vec in residues:
            rat = [rational_reconstruct(x, p) for x in vec]
            if any(x is None for x in rat) or not verify(rat):
                break
            vectors.append(rat)
        else:
            return vectors
    raise RuntimeError("kernel could not be certified with the available primes")
