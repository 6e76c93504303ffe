"""Specht modules S(lam) over Q via polytabloids.

A tableau is a tuple of rows (tuples of entries 1..l); a tabloid is the tuple
of row sets. A permutation g (tuple, g[i-1] = image of i) acts on tableaux by
relabelling entries, and g.e_T = e_{gT}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from ..young import Partition, as_partition, conjugate


def _sign(perm) -> int:
    perm, sign = list(perm), 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def standard_tableaux(lam) -> list:
    lam = as_partition(lam)
    n = lam.degree
    out = []

    def place(rows, k):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(rows, k + 1)
                rows[i].pop()

    place([[] for _ in lam], 1)
    return out


def tabloid(tableau) -> tuple:
    return tuple(frozenset(row) for row in tableau)


def relabel(g, tableau) -> tuple:
    return tuple(tuple(g[x - 1] for x in row) for row in tableau)


@dataclass
class SpechtData:
    shape: Partition
    tableaux: list
    column_moves: list  # (permutation of cell positions, sign) over the column group

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def polytabloid(self, tableau) -> dict:
        """e_T as {tabloid: coefficient}."""
        cells = [x for row in tableau for x in row]
        out = {}
        for moved, sign in self.column_moves:
            entries = [cells[k] for k in moved]
            rows, pos = [], 0
            for length in self.shape:
                rows.append(frozenset(entries[pos:pos + length]))
                pos += length
            key = tuple(rows)
            out[key] = out.get(key, 0) + sign
        return {k: c for k, c in out.items() if c}

    def inner(self, u: dict, v: dict) -> int:
        """Tabloid inner product (tabloids orthonormal)."""
        if len(u) > len(v):
            u, v = v, u
        return sum(c * v.get(k, 0) for k, c in u.items())

    def pairing(self, s: int, t: int, g) -> int:
        """<e_s, g.e_t> for standard tableaux indices s, t."""
        return self.inner(self.basis_vector(s), self.polytabloid(relabel(g, self.tableaux[t])))

    def basis_vector(self, k: int) -> dict:
        return _basis_vectors(self.shape)[k]

    def gram(self) -> list:
        ident = tuple(range(1, self.shape.degree + 1))
        return [[self.pairing(s, t, ident) for t in range(self.dim)] for s in range(self.dim)]

    def coordinates(self, vector: dict) -> list:
        """Coordinates of a vector of the Specht span in the standard polytabloid basis."""
        inv, keys = _coordinate_system(self.shape)
        rhs = [vector.get(k, 0) for k in keys]
        return [sum(a * b for a, b in zip(row, rhs)) for row in inv]

    def act(self, g, k: int) -> list:
        """Coordinates of g.e_{T_k}."""
        return self.coordinates(self.polytabloid(relabel(g, self.tableaux[k])))


def _column_moves(lam):
    """All column-preserving rearrangements of the cells of lam, with signs."""
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    index = {cell: k for k, cell in enumerate(cells)}
    cols = conjugate(lam)
    per_column = []
    for c, height in enumerate(cols):
        per_column.append([[index[(r, c)] for r in perm] for perm in permutations(range(height))])
    moves = []
    for choice in product(*per_column):
        moved = list(range(len(cells)))
        sign = 1
        for c, perm_cells in enumerate(choice):
            originals = [index[(r, c)] for r in range(cols[c])]
            for src, dst in zip(perm_cells, originals):
                moved[dst] = src
            sign *= _sign([originals.index(x) for x in perm_cells])
        moves.append((tuple(moved), sign))
    return moves


@lru_cache(maxsize=None)
def specht(lam) -> SpechtData:
    lam = as_partition(lam)
    return SpechtData(lam, standard_tableaux(lam), _column_moves(lam))


@lru_cache(maxsize=None)
def _basis_vectors(lam) -> tuple:
    data = specht(lam)
    return tuple(data.polytabloid(t) for t in data.tableaux)


@lru_cache(maxsize=None)
def _coordinate_system(lam):
    """Inverse of the square system read off at the standard tabloids."""
    data = specht(lam)
    keys = [tabloid(t) for t in data.tableaux]
    vectors = _basis_vectors(lam)
    n = len(keys)
    # a[i][j] = coefficient of tabloid {T_i} in e_{T_j}; invertible (unitriangular up to order)
    a = [[Fraction(vectors[j].get(keys[i], 0)) for j in range(n)] + [Fraction(int(i == k)) for k in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [[int(x) if x.denominator == 1 else x for x in row[n:]] for row in a]
    return inv, keys
