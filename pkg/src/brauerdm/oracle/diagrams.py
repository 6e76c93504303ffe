"""Brauer diagrams, their composition, and formal linear combinations.

Vertices 1..n_top are the top row; bottom vertex j is encoded n_top + j.
A diagram is its perfect matching, stored as a sorted tuple of sorted pairs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from ..errors import ParityError, SizeMismatch


@dataclass(frozen=True)
class BrauerDiagram:
    n_top: int
    n_bot: int
    pairs: tuple

    def __post_init__(self):
        seen = sorted(v for pair in self.pairs for v in pair)
        if seen != list(range(1, self.n_top + self.n_bot + 1)):
            raise ValueError(f"not a perfect matching on {self.n_top}+{self.n_bot} vertices: {self.pairs}")

    @classmethod
    def make(cls, n_top, n_bot, pairs) -> "BrauerDiagram":
        return cls(n_top, n_bot, tuple(sorted(tuple(sorted(p)) for p in pairs)))

    def partner(self) -> dict:
        out = {}
        for a, b in self.pairs:
            out[a], out[b] = b, a
        return out

    def is_top(self, v) -> bool:
        return v <= self.n_top

    def propagating(self) -> list:
        """Propagating lines as (top vertex, bottom index), ordered by top vertex."""
        return [(a, b - self.n_top) for a, b in self.pairs if a <= self.n_top < b]

    def top_arcs(self) -> list:
        return [(a, b) for a, b in self.pairs if b <= self.n_top]

    def bottom_arcs(self) -> list:
        """Arcs among bottom vertices, as bottom indices."""
        return [(a - self.n_top, b - self.n_top) for a, b in self.pairs if a > self.n_top]

    def flip(self) -> "BrauerDiagram":
        """Reflect top to bottom."""
        t, b = self.n_top, self.n_bot
        relabel = lambda v: v + b if v <= t else v - t
        return BrauerDiagram.make(b, t, [(relabel(x), relabel(y)) for x, y in self.pairs])

    def __str__(self):
        t = self.n_top
        name = lambda v: str(v) if v <= t else f"{v - t}'"
        return "{" + " ".join(f"{name(a)}-{name(b)}" for a, b in self.pairs) + "}"


def compose(d1: BrauerDiagram, d2: BrauerDiagram):
    """Stack d1 on top of d2; returns (closed loops, resulting diagram)."""
    if d1.n_bot != d2.n_top:
        raise SizeMismatch(f"cannot compose ({d1.n_top},{d1.n_bot}) over ({d2.n_top},{d2.n_bot})")
    t1, m = d1.n_top, d1.n_bot
    # nodes: top of d1 -> ("t", i); middle row -> ("m", j); bottom of d2 -> ("b", k)
    node1 = lambda v: ("t", v) if v <= t1 else ("m", v - t1)
    node2 = lambda v: ("m", v) if v <= m else ("b", v - m)
    adj = {}
    for a, b in d1.pairs:
        adj.setdefault(node1(a), []).append(node1(b))
        adj.setdefault(node1(b), []).append(node1(a))
    for a, b in d2.pairs:
        adj.setdefault(node2(a), []).append(node2(b))
        adj.setdefault(node2(b), []).append(node2(a))
    seen, pairs, loops = set(), [], 0
    code = lambda node: node[1] if node[0] == "t" else t1 + node[1]
    exterior = [("t", i) for i in range(1, t1 + 1)] + [("b", k) for k in range(1, d2.n_bot + 1)]
    for start in exterior + [("m", j) for j in range(1, m + 1)]:
        if start in seen:
            continue
        component, stack = [], [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            component.append(node)
            for nb in adj[node]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        ends = [node for node in component if node[0] != "m"]
        if ends:
            pairs.append((code(ends[0]), code(ends[1])))
        else:
            loops += 1
    return loops, BrauerDiagram.make(t1, d2.n_bot, pairs)


def identity(n: int) -> BrauerDiagram:
    return BrauerDiagram.make(n, n, [(i, n + i) for i in range(1, n + 1)])


def transposition(n: int, i: int) -> BrauerDiagram:
    """The crossing s_i swapping strands i and i+1."""
    perm = list(range(1, n + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return permutation_diagram(perm)


def permutation_diagram(perm) -> BrauerDiagram:
    """Diagram joining top vertex k to bottom vertex perm[k-1]."""
    n = len(perm)
    return BrauerDiagram.make(n, n, [(k, n + perm[k - 1]) for k in range(1, n + 1)])


def cup_cap(n: int, i: int) -> BrauerDiagram:
    """U_i: arcs i,i+1 on top and bottom, other strands vertical."""
    pairs = [(i, i + 1), (n + i, n + i + 1)]
    pairs += [(k, n + k) for k in range(1, n + 1) if k not in (i, i + 1)]
    return BrauerDiagram.make(n, n, pairs)


def perfect_matchings(vertices):
    vertices = list(vertices)
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for k, other in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + m


@lru_cache(maxsize=None)
def half_diagrams(n: int, l: int) -> tuple:
    """(n,l)-diagrams whose l propagating lines do not cross and meet no bottom arc."""
    if l < 0 or n < l or (n - l) % 2:
        raise ParityError(f"no ({n},{l}) half diagrams: need n >= l and n - l even")
    out = []
    for tops in combinations(range(1, n + 1), l):
        lines = [(t, n + k) for k, t in enumerate(tops, 1)]
        rest = [v for v in range(1, n + 1) if v not in tops]
        for m in perfect_matchings(rest):
            out.append(BrauerDiagram.make(n, l, lines + m))
    return tuple(out)


@lru_cache(maxsize=None)
def all_diagrams(n_top: int, n_bot: int) -> tuple:
    if (n_top + n_bot) % 2:
        raise ParityError("n_top + n_bot must be even")
    return tuple(BrauerDiagram.make(n_top, n_bot, m)
                 for m in perfect_matchings(range(1, n_top + n_bot + 1)))


def random_diagram(n_top: int, n_bot: int, rng: random.Random) -> BrauerDiagram:
    vertices = list(range(1, n_top + n_bot + 1))
    rng.shuffle(vertices)
    return BrauerDiagram.make(n_top, n_bot, list(zip(vertices[::2], vertices[1::2])))


class AlgebraElement:
    """Finite rational combination of (n,n) Brauer diagrams at a fixed integer delta."""

    def __init__(self, delta: int, terms=None):
        self.delta = delta
        self.terms = {}
        for d, c in (terms or {}).items():
            self._add_term(d, Fraction(c))

    @classmethod
    def basis(cls, delta, d: BrauerDiagram) -> "AlgebraElement":
        return cls(delta, {d: 1})

    def _add_term(self, d, c):
        c = self.terms.get(d, 0) + c
        if c:
            self.terms[d] = c
        else:
            self.terms.pop(d, None)

    def _check(self, other):
        if self.delta != other.delta:
            raise ValueError("elements belong to algebras with different delta")

    def __add__(self, other):
        self._check(other)
        out = AlgebraElement(self.delta, self.terms)
        for d, c in other.terms.items():
            out._add_term(d, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k) -> "AlgebraElement":
        return AlgebraElement(self.delta, {d: c * k for d, c in self.terms.items()})

    def __mul__(self, other):
        """self * other puts self on top of other."""
        self._check(other)
        out = AlgebraElement(self.delta)
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                loops, d = compose(d1, d2)
                out._add_term(d, c1 * c2 * Fraction(self.delta) ** loops)
        return out

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.delta == other.delta and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{d}" for d, c in sorted(self.terms.items(), key=lambda kv: kv[0].pairs))
