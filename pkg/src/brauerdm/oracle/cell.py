"""Cell modules Delta_n(lam) of B_n(delta), their contravariant form, and intertwiners.

Basis of Delta_n(lam), l = |lam|: pairs (x, T) with x an (n,l) half diagram and
T a standard lam-tableau. A diagram d acts by d.(x (x) e_T): compose d over x;
if fewer than l lines propagate the result is 0, otherwise the composite is
x' o sigma with x' a half diagram and sigma a permutation, and the result is
delta^loops x' (x) sigma.e_T, where sigma acts through its bottom-to-top map.

The form pairs (x, s) with (y, t) through flip(x) o y, which is either
delta^loops sigma (contributing delta^loops <e_s, sigma.e_t>) or has fewer
than l propagating lines (contributing 0).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..errors import IdentityViolation, ParityError
from ..young import as_partition, check_delta, dim_delta
from .diagrams import BrauerDiagram, compose, cup_cap, half_diagrams, transposition
from .linalg import bareiss_rank, certified_kernel
from .specht import specht


def _check_label(n, lam):
    lam = as_partition(lam)
    if lam.degree > n or (n - lam.degree) % 2:
        raise ParityError(f"{lam} is not in Lambda^{n}")
    return lam


def _factor(result: BrauerDiagram, l: int):
    """Split an (n,l) diagram with l propagating lines as x' o sigma.

    Returns (index of x' among the half diagrams, g) with g the bottom-to-top
    permutation of sigma as a tuple (g[k-1] = top end of the line at bottom k).
    """
    n = result.n_top
    lines = result.propagating()
    x_pairs = [(t, n + k) for k, (t, _) in enumerate(lines, 1)] + result.top_arcs()
    x = BrauerDiagram.make(n, l, x_pairs)
    g = [0] * l
    for k, (_, bottom) in enumerate(lines, 1):
        g[bottom - 1] = k
    return _half_index(n, l)[x], tuple(g)


@lru_cache(maxsize=None)
def _half_index(n, l):
    return {x: i for i, x in enumerate(half_diagrams(n, l))}


@lru_cache(maxsize=None)
def _pairings(n: int, l: int) -> tuple:
    """For each pair of half diagrams: (loops, g) or None when lines are lost."""
    xs = half_diagrams(n, l)
    out = []
    for x in xs:
        fx = x.flip()
        row = []
        for y in xs:
            loops, d = compose(fx, y)
            if len(d.propagating()) < l:
                row.append(None)
            else:
                g = [0] * l
                for top, bottom in d.propagating():
                    g[bottom - 1] = top
                row.append((loops, tuple(g)))
        out.append(tuple(row))
    return tuple(out)


@dataclass
class GramMatrix:
    lam: object
    n: int
    delta: int
    entries: list
    _rank: int | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = bareiss_rank(self.entries)
        return self._rank

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.size) for j in range(i))


def basis(n: int, lam) -> list:
    """Basis labels (half diagram index, tableau index) of Delta_n(lam)."""
    lam = _check_label(n, lam)
    return [(i, k) for i in range(len(half_diagrams(n, lam.degree))) for k in range(specht(lam).dim)]


@lru_cache(maxsize=None)
def _gram(delta, n, lam):
    l = lam.degree
    data = specht(lam)
    table = _pairings(n, l)
    labels = basis(n, lam)
    entries = []
    for i, s in labels:
        row = []
        for j, t in labels:
            cell = table[i][j]
            row.append(0 if cell is None else delta ** cell[0] * data.pairing(s, t, cell[1]))
        entries.append(row)
    return GramMatrix(lam, n, delta, entries)


def cell_gram(delta: int, n: int, lam) -> GramMatrix:
    delta = check_delta(delta)
    return _gram(delta, n, _check_label(n, lam))


@lru_cache(maxsize=None)
def _dim_simple(delta, n, lam):
    return cell_gram(delta, n, lam).rank


def dim_simple(delta: int, n: int, lam) -> int:
    """Dimension of the head of Delta_n(lam); 0 when lam labels no simple module."""
    return _dim_simple(check_delta(delta), n, _check_label(n, lam))


def action_matrix(delta: int, n: int, lam, d: BrauerDiagram) -> list:
    """Matrix of d on Delta_n(lam) in the (x, T) basis (column j is the image of basis vector j)."""
    delta = check_delta(delta)
    lam = _check_label(n, lam)
    l = lam.degree
    data = specht(lam)
    labels = basis(n, lam)
    index = {b: k for k, b in enumerate(labels)}
    xs = half_diagrams(n, l)
    size = len(labels)
    cols = []
    for i, t in labels:
        col = [0] * size
        loops, result = compose(d, xs[i])
        if len(result.propagating()) == l:
            x_new, g = _factor(result, l)
            scale = delta ** loops
            for k, c in enumerate(data.act(g, t)):
                if c:
                    col[index[(x_new, k)]] += scale * c
        cols.append(col)
    return [[cols[j][i] for j in range(size)] for i in range(size)]


def generators(n: int) -> list:
    """s_1..s_{n-1} and U_1, which generate B_n."""
    out = [transposition(n, i) for i in range(1, n)]
    if n >= 2:
        out.append(cup_cap(n, 1))
    return out


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def hom_dim(delta: int, n: int, lam, mu) -> int:
    """dim Hom(Delta_n(lam), Delta_n(mu)): solutions X of X A_g = B_g X over the generators."""
    delta = check_delta(delta)
    lam, mu = _check_label(n, lam), _check_label(n, mu)
    gens = generators(n)
    a_mats = [action_matrix(delta, n, lam, g) for g in gens]
    b_mats = [action_matrix(delta, n, mu, g) for g in gens]
    p, q = len(basis(n, lam)), len(basis(n, mu))
    if p == 0 or q == 0:
        return 0

    # unknown X[r][c] sits at position r*p + c
    def blocks():
        for a, b in zip(a_mats, b_mats):
            rows = []
            for r in range(q):
                for c in range(p):
                    row = [0] * (p * q)
                    for k in range(p):
                        if a[k][c]:
                            row[r * p + k] += a[k][c]
                    for k in range(q):
                        if b[r][k]:
                            row[k * p + c] -= b[r][k]
                    rows.append(row)
            yield rows

    def verify(vec):
        x = [[Fraction(vec[r * p + c]) for c in range(p)] for r in range(q)]
        return all(_matmul(x, a) == _matmul(b, x) for a, b in zip(a_mats, b_mats))

    return len(certified_kernel(blocks, p * q, verify))


def verify_dim_identity(delta: int, n: int, convention: str = "module") -> dict:
    """Check dim Delta_n(nu) = sum_lam D[lam][nu] * dim L_n(lam) for every nu in Lambda^n.

    D is read in the given labelling and paired with Gram ranks at the same
    labels, with no conjugation. Raises IdentityViolation at the first failure;
    returns the report otherwise.
    """
    report = dim_identity_report(delta, n, convention)
    for item in report["columns"]:
        if not item["ok"]:
            raise IdentityViolation(item["label"], item["expected"], item["actual"])
    return report


def dim_identity_report(delta: int, n: int, convention: str = "module") -> dict:
    from ..decomp import decomp_matrix

    delta = check_delta(delta)
    d = decomp_matrix(delta, n, convention)
    simple = {lam: dim_simple(delta, n, lam) for lam in d.row_labels}
    columns = []
    for j, nu in enumerate(d.col_labels):
        expected = dim_delta(n, nu)
        actual = sum(int(d.entries[i, j]) * simple[lam] for i, lam in enumerate(d.row_labels))
        columns.append({"label": str(nu), "expected": expected, "actual": actual, "ok": expected == actual})
    return {"delta": delta, "n": n, "convention": convention,
            "simple_dims": {str(lam): v for lam, v in simple.items()},
            "columns": columns, "pass": all(c["ok"] for c in columns)}


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2)
