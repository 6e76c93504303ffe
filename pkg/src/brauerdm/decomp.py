"""Decomposition and Cartan matrices of B_n(delta) assembled from hypercubes.

Row lam of D is read off the hypercube of o_delta(lam): every vertex is pulled
back to a partition in the block of lam and gets entry 1, annotated with its
depth. This is the combinatorial ("primed") labelling; the module labelling
conjugates every row and column label.

For delta = 0 and n > 0 the empty partition labels no simple module, so its
row is left out of D and C (its column stays).
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import UnknownFormat
from .klpoly import poly_table as _poly_table
from .sets import short_label
from .tlcube import hypercube
from .valley import o_delta, o_delta_inverse, s_delta, same_block
from .young import Partition, as_partition, check_delta, conjugate, enumerate_lambda_n

PRIMED, MODULE = "primed", "module"
CONVENTIONS = (PRIMED, MODULE)
FORMATS = ("json", "csv", "latex", "polytable")


@dataclass(frozen=True)
class DecompRow:
    """One row of D in the primed labelling: support partitions with their depths."""
    delta: int
    label: Partition
    depths: dict

    @property
    def support(self) -> list:
        return sorted(self.depths, key=lambda mu: (self.depths[mu], [-p for p in mu]))

    def shoulder(self) -> list:
        return [mu for mu in self.support if self.depths[mu] == 1]


def decomp_row(delta: int, lam) -> DecompRow:
    delta = check_delta(delta)
    lam = as_partition(lam)
    h = hypercube(o_delta(delta, lam))
    return DecompRow(delta, lam, {o_delta_inverse(delta, lam, v): d for v, d in h.vertices.items()})


def hypercube_shoulder(delta: int, lam) -> list:
    """Depth-1 vertices of the hypercube of lam, as partitions."""
    return decomp_row(delta, lam).shoulder()


def _check_convention(convention):
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


def row_labels(delta: int, n: int) -> list:
    labels = enumerate_lambda_n(n)
    if delta == 0 and n > 0:  # B_0 is the ground field; there the empty label is simple
        labels = [lam for lam in labels if lam]
    return labels


@dataclass
class DecompMatrix:
    """Finite piece of D over Lambda^n.

    ``entries`` is 0/1; ``depths`` holds the hypercube depth of each nonzero
    entry and -1 elsewhere.
    """
    delta: int
    n: int
    convention: str
    row_labels: list
    col_labels: list
    entries: np.ndarray
    depths: np.ndarray

    def entry(self, lam, mu) -> int:
        return int(self.entries[self.row_labels.index(as_partition(lam)),
                                self.col_labels.index(as_partition(mu))])

    def row(self, lam) -> dict:
        """Support of a row as {column label: depth}."""
        i = self.row_labels.index(as_partition(lam))
        return {mu: int(self.depths[i, j]) for j, mu in enumerate(self.col_labels) if self.entries[i, j]}

    def restrict(self, n: int) -> "DecompMatrix":
        """Submatrix on the labels of Lambda^n."""
        keep_rows = [i for i, lam in enumerate(self.row_labels) if lam.degree <= n and (n - lam.degree) % 2 == 0]
        keep_cols = [j for j, mu in enumerate(self.col_labels) if mu.degree <= n and (n - mu.degree) % 2 == 0]
        return DecompMatrix(self.delta, n, self.convention,
                            [self.row_labels[i] for i in keep_rows],
                            [self.col_labels[j] for j in keep_cols],
                            self.entries[np.ix_(keep_rows, keep_cols)],
                            self.depths[np.ix_(keep_rows, keep_cols)])


def decomp_matrix(delta: int, n: int, convention: str = PRIMED) -> DecompMatrix:
    delta = check_delta(delta)
    _check_convention(convention)
    if n < 0:
        raise ValueError("n must be non-negative")
    rows = row_labels(delta, n)
    cols = enumerate_lambda_n(n)
    col_index = {mu: j for j, mu in enumerate(cols)}
    flip = conjugate if convention == MODULE else (lambda p: p)
    entries = np.zeros((len(rows), len(cols)), dtype=np.int64)
    depths = np.full((len(rows), len(cols)), -1, dtype=np.int64)
    for i, lam in enumerate(rows):
        for mu, d in decomp_row(delta, flip(lam)).depths.items():
            j = col_index[flip(mu)]
            entries[i, j] = 1
            depths[i, j] = d
    return DecompMatrix(delta, n, convention, rows, cols, entries, depths)


def is_unitriangular(m: DecompMatrix) -> bool:
    """Diagonal entries 1; off the diagonal, nonzero only where the column label is smaller."""
    for i, lam in enumerate(m.row_labels):
        for j, mu in enumerate(m.col_labels):
            e = m.entries[i, j]
            if mu == lam and e != 1:
                return False
            if mu != lam and e and not mu.degree < lam.degree:
                return False
    return True


@dataclass
class CartanMatrix:
    delta: int
    n: int
    convention: str
    labels: list
    entries: np.ndarray


def cartan(delta: int, n: int, convention: str = MODULE) -> CartanMatrix:
    """C = D D^T with the columns of D running over Lambda^n."""
    d = decomp_matrix(delta, n, convention)
    return CartanMatrix(d.delta, n, convention, list(d.row_labels), d.entries @ d.entries.T)


@dataclass
class Block:
    representative: Partition
    members: list
    singularity: int
    valley: dict = field(default_factory=dict)


@dataclass
class BlockReport:
    """Blocks of Lambda^n in the primed labelling (the transposed block relation)."""
    delta: int
    n: int
    blocks: list

    def block_of(self, lam):
        lam = as_partition(lam)
        for b in self.blocks:
            if lam in b.members:
                return b
        raise KeyError(f"{lam} is not a label here")

    def partition(self) -> list:
        return [frozenset(b.members) for b in self.blocks]


def blocks(delta: int, n: int) -> BlockReport:
    delta = check_delta(delta)
    found = []
    for lam in row_labels(delta, n):
        for members in found:
            if same_block(delta, members[0], lam):
                members.append(lam)
                break
        else:
            found.append([lam])
    out = [Block(m[0], m, s_delta(delta, m[0]), {lam: o_delta(delta, lam) for lam in m})
           for m in found]
    return BlockReport(delta, n, out)


@dataclass
class PolyTable:
    """Exponent table of the parabolic KL array over even subsets of {1..m}."""
    m: int
    labels: list
    grid: list


def poly_table(m: int) -> PolyTable:
    labels, grid = _poly_table(m)
    return PolyTable(m, labels, grid)


# serialization

def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _latex_label(lam) -> str:
    return str(lam) if lam else r"$\emptyset$"


def _latex(header, body_labels, body) -> str:
    lines = [r"\begin{tabular}{l|" + "c" * len(header) + "}",
             " & ".join([""] + header) + r" \\", r"\hline"]
    for label, cells in zip(body_labels, body):
        lines.append(" & ".join([label] + [str(c) if c is not None else "" for c in cells]) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def _export_matrix(m: DecompMatrix, fmt, with_depths):
    if fmt == "json":
        rows = [{"label": str(lam),
                 "support": [{"label": str(mu), "depth": d}
                             for mu, d in sorted(m.row(lam).items(), key=lambda kv: (kv[1], [-p for p in kv[0]]))]}
                for lam in m.row_labels]
        return json.dumps({"delta": m.delta, "n": m.n, "convention": m.convention, "rows": rows}, indent=2)
    cells = m.depths if with_depths else m.entries
    body = [[("" if with_depths and c < 0 else int(c)) for c in row] for row in cells]
    if fmt == "csv":
        return _csv([["label"] + [str(mu) for mu in m.col_labels]]
                    + [[str(lam)] + row for lam, row in zip(m.row_labels, body)])
    if fmt == "latex":
        return _latex([_latex_label(mu) for mu in m.col_labels],
                      [_latex_label(lam) for lam in m.row_labels], body)
    return _polytable([str(mu) for mu in m.col_labels], [str(lam) for lam in m.row_labels],
                      [[(int(c) if c >= 0 else None) for c in row] for row in m.depths])


def _polytable(header, row_names, grid) -> str:
    width = max([len(h) for h in header + row_names] + [1])
    fmt = lambda s: s.rjust(width)
    lines = [" ".join([fmt("")] + [fmt(h) for h in header])]
    for name, row in zip(row_names, grid):
        lines.append(" ".join([fmt(name)] + [fmt("" if c is None else str(c)) for c in row]).rstrip())
    return "\n".join(lines)


def export(obj, fmt: str, with_depths: bool = False) -> str:
    """Serialize a DecompMatrix, CartanMatrix, DecompRow or PolyTable.

    Output is deterministic. ``with_depths`` puts depth integers in CSV/LaTeX
    cells instead of 0/1.
    """
    if fmt not in FORMATS:
        raise UnknownFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    if isinstance(obj, DecompMatrix):
        return _export_matrix(obj, fmt, with_depths)
    if isinstance(obj, CartanMatrix):
        names = [str(lam) for lam in obj.labels]
        body = [[int(c) for c in row] for row in obj.entries]
        if fmt == "json":
            return json.dumps({"delta": obj.delta, "n": obj.n, "convention": obj.convention,
                               "labels": names, "entries": body}, indent=2)
        if fmt == "csv":
            return _csv([["label"] + names] + [[name] + row for name, row in zip(names, body)])
        if fmt == "latex":
            latex_names = [_latex_label(lam) for lam in obj.labels]
            return _latex(latex_names, latex_names, body)
        return _polytable(names, names, [[c or None for c in row] for row in body])
    if isinstance(obj, DecompRow):
        support = obj.support
        if fmt == "json":
            return json.dumps({"delta": obj.delta, "label": str(obj.label),
                               "support": [str(mu) for mu in support],
                               "depths": [obj.depths[mu] for mu in support]}, indent=2)
        if fmt == "csv":
            return _csv([["label", "depth"]] + [[str(mu), obj.depths[mu]] for mu in support])
        if fmt == "latex":
            return _latex(["depth"], [_latex_label(mu) for mu in support], [[obj.depths[mu]] for mu in support])
        return _polytable(["depth"], [str(mu) for mu in support], [[obj.depths[mu]] for mu in support])
    if isinstance(obj, PolyTable):
        names = [short_label(a) for a in obj.labels]
        if fmt == "json":
            return json.dumps({"m": obj.m, "labels": names, "exponents": obj.grid}, indent=2)
        if fmt == "csv":
            return _csv([["label"] + names]
                        + [[name] + ["" if c is None else c for c in row] for name, row in zip(names, obj.grid)])
        if fmt == "latex":
            return _latex(names, names, obj.grid)
        return _polytable(names, names, obj.grid)
    raise TypeError(f"cannot export {type(obj).__name__}")
