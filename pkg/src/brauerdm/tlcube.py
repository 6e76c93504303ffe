"""Binary words, Temperley-Lieb style matchings and hypercubical decomposition graphs.

A valley set ``a`` is encoded as the 0/1 word whose i-th bit records i in a.
The TL diagram of a word pairs each 0 with the next unmatched 1 (bracket
matching, 0 opening and 1 closing); leftover 1s are then paired off from the
left. The arcs of this diagram generate the hypercube h^a.
"""
from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass, field

from .errors import InternalError, NotApplicable, PreconditionViolated
from .sets import short_label

Arc = namedtuple("Arc", "i j kind")
Arc.__doc__ = "Pair of positions i < j; kind '01' (swap) or '11' (remove both)."


def to_binary(a) -> tuple:
    a = frozenset(a)
    if not a:
        return ()
    return tuple(int(i in a) for i in range(1, max(a) + 1))


def from_binary(bits) -> frozenset:
    return frozenset(i for i, b in enumerate(bits, 1) if b)


def parse_word(text: str) -> tuple:
    return trim(tuple(int(ch) for ch in text.strip() if ch in "01"))


def trim(bits) -> tuple:
    bits = tuple(bits)
    while bits and bits[-1] == 0:
        bits = bits[:-1]
    return bits


def word_str(bits) -> str:
    return "".join(map(str, bits))


@dataclass(frozen=True)
class TLDiagram:
    length: int
    arcs: tuple
    singletons: tuple

    def parts(self) -> set:
        return {frozenset((arc.i, arc.j)) for arc in self.arcs} | {frozenset((s,)) for s in self.singletons}

    def render(self) -> str:
        items = [(arc.i, f"({arc.i} {arc.j})") for arc in self.arcs]
        items += [(s, f"[{s}]") for s in self.singletons]
        return " ".join(text for _, text in sorted(items))


def tl_diagram(bits, length=None) -> TLDiagram:
    """TL diagram of a binary word; ``length`` pads with trailing zeros."""
    bits = list(bits)
    if length is not None:
        bits += [0] * (length - len(bits))
    else:
        bits = list(trim(bits))
    stack, arcs, lone_ones = [], [], []
    for pos, bit in enumerate(bits, 1):
        if bit == 0:
            stack.append(pos)
        elif stack:
            arcs.append(Arc(stack.pop(), pos, "01"))
        else:
            lone_ones.append(pos)
    # what survives is a run of 1s followed by a run of 0s
    for k in range(0, len(lone_ones) - 1, 2):
        arcs.append(Arc(lone_ones[k], lone_ones[k + 1], "11"))
    paired = {p for arc in arcs for p in (arc.i, arc.j)}
    singles = tuple(p for p in range(1, len(bits) + 1) if p not in paired)
    arcs.sort(key=lambda arc: (arc.kind == "11", arc.i))
    return TLDiagram(len(bits), tuple(arcs), singles)


def gamma_all(a) -> list:
    """All arcs of the TL diagram of a."""
    return list(tl_diagram(to_binary(a)).arcs)


def gamma_lower(a) -> list:
    """Adjacent 01-arcs, plus the 11-arc {1,2} when a contains both 1 and 2."""
    return [arc for arc in gamma_all(a)
            if (arc.kind == "01" and arc.j == arc.i + 1) or (arc.kind == "11" and (arc.i, arc.j) == (1, 2))]


def arc_apply(a, arc) -> frozenset:
    """Valley edge operator for an arc: swap sides (01) or toggle both ends (11)."""
    a = frozenset(a)
    i, j = arc.i, arc.j
    present = (i in a) + (j in a)
    if arc.kind == "01":
        if present != 1:
            raise NotApplicable(f"<{i} {j}> needs exactly one of {i},{j} in {sorted(a)}")
        return a ^ {i, j}
    if present == 1:
        raise NotApplicable(f"<_{i} {j}_> needs both or neither of {i},{j} in {sorted(a)}")
    return a ^ {i, j}


def arc_label(arc) -> str:
    if arc.kind == "11":
        return "12" if (arc.i, arc.j) == (1, 2) else f"_({arc.i} {arc.j})"
    if arc.j == arc.i + 1:
        return str(arc.i)
    return f"({arc.i} {arc.j})"


@dataclass
class Hypercube:
    """Rooted hypercubical digraph; ``vertices`` maps each vertex to its depth.

    Edges are (upper, lower, generator index).
    """
    root: frozenset
    generators: tuple
    vertices: dict
    edges: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def edge_pairs(self) -> set:
        return {(u, w) for u, w, _ in self.edges}

    def shoulder(self) -> list:
        """Edges out of the root, as (lower vertex, generator)."""
        return [(w, self.generators[k]) for u, w, k in self.edges if u == self.root]

    def same_cube(self, other: "Hypercube") -> bool:
        return (self.root == other.root
                and set(self.generators) == set(other.generators)
                and self.vertices == other.vertices
                and self.edge_pairs() == other.edge_pairs())

    def layers(self) -> list:
        out = [[] for _ in range(self.dimension + 1)]
        for v, d in self.vertices.items():
            out[d].append(v)
        return [sorted(layer, key=lambda s: sorted(s, reverse=True), reverse=True) for layer in out]

    def __str__(self):
        return " / ".join(",".join(short_label(v) for v in layer) for layer in self.layers())


def _span(root, generators) -> Hypercube:
    k = len(generators)
    by_mask = {}
    for mask in range(1 << k):
        v = root
        for g in range(k):
            if mask >> g & 1:
                v = arc_apply(v, generators[g])
        by_mask[mask] = v
    vertices = {v: bin(mask).count("1") for mask, v in by_mask.items()}
    if len(vertices) != 1 << k:
        raise InternalError(f"hypercube over {sorted(root)} has repeated vertices")
    edges = [(by_mask[mask], by_mask[mask | 1 << g], g)
             for mask in range(1 << k) for g in range(k) if not mask >> g & 1]
    return Hypercube(root, tuple(generators), vertices, edges)


def hypercube(a) -> Hypercube:
    """The hypercube h^a generated by the TL arcs of a."""
    a = frozenset(a)
    return _span(a, gamma_all(a))


def _bump_set(a, alpha, inserted):
    shifted = {e if e < alpha else e + 2 for e in a}
    if inserted == "01":
        shifted.add(alpha + 1)
    elif inserted == "10":
        shifted.add(alpha)
    return frozenset(shifted)


def _bump(x, alpha, inserted):
    if alpha < 1:
        raise ValueError("bump position must be >= 1")
    if isinstance(x, (set, frozenset)):
        return _bump_set(x, alpha, inserted)
    return to_binary(_bump_set(from_binary(x), alpha, inserted))


def bump01(x, alpha):
    """Insert 01 at positions alpha, alpha+1 (works on sets and on 0/1 words)."""
    return _bump(x, alpha, "01")


def bump10(x, alpha):
    """Insert 10 at positions alpha, alpha+1."""
    return _bump(x, alpha, "10")


def _shift_arc(arc, alpha):
    return Arc(arc.i if arc.i < alpha else arc.i + 2,
               arc.j if arc.j < alpha else arc.j + 2, arc.kind)


def bump_cube(h: Hypercube, alpha: int, inserted: str = "01") -> Hypercube:
    """Insert 01 (or 10) at alpha in every vertex; generator positions are relabelled."""
    f = lambda v: _bump_set(v, alpha, inserted)
    return Hypercube(f(h.root), tuple(_shift_arc(g, alpha) for g in h.generators),
                     {f(v): d for v, d in h.vertices.items()},
                     [(f(u), f(w), k) for u, w, k in h.edges])


def cube_double(h: Hypercube, alpha: int) -> Hypercube:
    """Union of h and its alpha-translate (01 -> 10, or 11 -> 00) joined by alpha-edges."""
    pattern = {(alpha in v, alpha + 1 in v) for v in h.vertices}
    if pattern == {(False, True)}:
        gen = Arc(alpha, alpha + 1, "01")
    elif pattern == {(True, True)}:
        gen = Arc(alpha, alpha + 1, "11")
    else:
        raise PreconditionViolated(
            f"vertices do not all carry 01 (or all 11) at positions {alpha},{alpha + 1}")
    g = len(h.generators)
    move = lambda v: arc_apply(v, gen)
    vertices = dict(h.vertices)
    for v, d in h.vertices.items():
        vertices[move(v)] = d + 1
    if len(vertices) != 2 * len(h.vertices):
        raise InternalError("translate overlaps the original hypercube")
    edges = list(h.edges)
    edges += [(move(u), move(w), k) for u, w, k in h.edges]
    edges += [(v, move(v), g) for v in h.vertices]
    return Hypercube(h.root, h.generators + (gen,), vertices, edges)
