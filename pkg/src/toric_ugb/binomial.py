"""Binomials of even closed walks and the two primitivity tests."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

from .errors import (
    ExponentTooLarge,
    InvalidBinomial,
    NotAWalk,
    NotClosed,
    OddLength,
    ReducibleBinomial,
    SupportTooLarge,
)
from .graph import (
    EdgeSubset,
    Graph,
    block_decomposition,
    connected_components,
    is_cycle,
    support_vertices,
)

PLUS = 1
MINUS = -1

BRUTEFORCE_SUPPORT_CAP = 24


@dataclass(frozen=True, order=False)
class Binomial:
    """``x^plus - x^minus`` with exponent vectors indexed by edge."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise InvalidBinomial("exponent vectors differ in length")
        if any(x < 0 for x in self.plus) or any(x < 0 for x in self.minus):
            raise InvalidBinomial("negative exponent")

    @property
    def m(self) -> int:
        return len(self.plus)

    @property
    def degree(self) -> int:
        return sum(self.plus)

    @property
    def walk_length(self) -> int:
        """Length of the closed walk this binomial comes from."""
        return sum(self.plus) + sum(self.minus)

    @property
    def support(self) -> EdgeSubset:
        return tuple(e for e in range(self.m) if self.plus[e] or self.minus[e])

    def swapped(self) -> Binomial:
        return Binomial(self.minus, self.plus)

    def to_row(self) -> tuple[int, ...]:
        return tuple(p - q for p, q in zip(self.plus, self.minus))

    @classmethod
    def from_row(cls, row: Sequence[int]) -> Binomial:
        return cls(tuple(max(x, 0) for x in row), tuple(max(-x, 0) for x in row))

    @classmethod
    def from_edges(cls, m: int, plus: Sequence[int], minus: Sequence[int]) -> Binomial:
        """Build from edge-index lists; repeated indices raise the exponent."""
        p, q = [0] * m, [0] * m
        for e in plus:
            p[e] += 1
        for e in minus:
            q[e] += 1
        return cls(tuple(p), tuple(q))

    def __str__(self) -> str:
        def mono(vec):
            fs = [f"e{e + 1}" + (f"^{k}" if k > 1 else "") for e, k in enumerate(vec) if k]
            return "*".join(fs) or "1"
        return f"{mono(self.plus)} - {mono(self.minus)}"


def a_degree(g: Graph, exps: Sequence[int]) -> tuple[int, ...]:
    deg = [0] * g.n
    for e, k in enumerate(exps):
        if k:
            u, v = g.edges[e]
            deg[u] += k
            deg[v] += k
    return tuple(deg)


def check_binomial(b: Binomial, g: Graph) -> None:
    """Raise InvalidBinomial unless ``b`` is a nonzero walk-type element of I_G."""
    if b.m != g.m:
        raise InvalidBinomial(f"binomial has {b.m} edge slots, graph has {g.m}")
    for e in range(b.m):
        if b.plus[e] > 2 or b.minus[e] > 2:
            raise ExponentTooLarge(e, max(b.plus[e], b.minus[e]))
        if b.plus[e] and b.minus[e]:
            raise InvalidBinomial(f"e{e + 1} occurs in both monomials")
    if b.degree == 0:
        raise InvalidBinomial("zero binomial")
    if sum(b.plus) != sum(b.minus):
        raise InvalidBinomial("monomials have different degrees")
    if a_degree(g, b.plus) != a_degree(g, b.minus):
        raise InvalidBinomial("A-degrees differ")


def is_walk_binomial(b: Binomial, g: Graph) -> bool:
    """Valid binomial with connected support.

    A balanced two-coloured connected multigraph always has an alternating
    Euler circuit, so these are exactly the binomials of even closed walks.
    """
    try:
        check_binomial(b, g)
    except InvalidBinomial:
        return False
    return len(connected_components(g, b.support)) == 1


def _trace(g: Graph, walk: Sequence[int], start: int) -> list[int]:
    verts = [start]
    for pos, e in enumerate(walk):
        u, v = g.edges[e]
        cur = verts[-1]
        if cur == u:
            verts.append(v)
        elif cur == v:
            verts.append(u)
        else:
            raise NotAWalk(pos)
    return verts


def walk_vertices(g: Graph, walk: Sequence[int]) -> list[int]:
    """Vertex sequence ``v0, v1, ..., vL`` traced by an edge sequence.

    Both orientations of the first edge are tried; a closed reading wins.
    """
    if not walk:
        raise NotAWalk(0)
    traces, err = [], None
    for start in g.edges[walk[0]]:
        try:
            traces.append(_trace(g, walk, start))
        except NotAWalk as exc:
            if err is None or exc.position > err.position:
                err = exc
    if not traces:
        raise err
    closed = [t for t in traces if t[0] == t[-1]]
    return (closed or traces)[0]


def walk_to_binomial(g: Graph, walk: Sequence[int]) -> Binomial:
    """B_w: odd positions (1-based) go to the plus monomial, even ones to minus."""
    verts = walk_vertices(g, walk)
    if verts[0] != verts[-1]:
        raise NotClosed()
    if len(walk) % 2:
        raise OddLength(len(walk))
    p, q = [0] * g.m, [0] * g.m
    for pos, e in enumerate(walk):
        (p if pos % 2 == 0 else q)[e] += 1
    for e in range(g.m):
        if p[e] and q[e]:
            raise ReducibleBinomial(e)
    return Binomial(tuple(p), tuple(q))


@dataclass(frozen=True)
class WalkGraph:
    support: EdgeSubset
    multiplicity: dict[int, int]
    parity: dict[int, int]

    def side(self, sign: int) -> EdgeSubset:
        return tuple(e for e in self.support if self.parity[e] == sign)


def support_walkgraph(b: Binomial, g: Graph) -> WalkGraph:
    mult, par = {}, {}
    for e in b.support:
        k = b.plus[e] or b.minus[e]
        if k > 2:
            raise ExponentTooLarge(e, k)
        mult[e] = k
        par[e] = PLUS if b.plus[e] else MINUS
    return WalkGraph(b.support, mult, par)


def canonicalize(b: Binomial) -> Binomial:
    """Representative of ``{b, -b}``: the side with the lex-larger vector is plus."""
    return b.swapped() if b.minus > b.plus else b


@dataclass(frozen=True)
class Certificate:
    """Outcome of the structural primitivity test."""

    primitive: bool
    clause: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.primitive

    def __str__(self) -> str:
        return f"{self.clause}: {self.detail}" if self.detail else self.clause


def _edges_str(edges) -> str:
    return "{" + ",".join(f"e{e + 1}" for e in sorted(edges)) + "}"


def is_primitive_structural(wg: WalkGraph, g: Graph) -> Certificate:
    """Primitivity read off the block structure of the walk's subgraph.

    Primitive iff the support is an even cycle traversed once, or it is not
    biconnected, its blocks are cycles and cut edges (cut edges doubled, cycle
    edges single), every cut vertex lies in exactly two blocks, and each cut
    vertex splits the cyclic edges into two odd parts.
    """
    support = wg.support
    if not support:
        return Certificate(False, "empty support")
    if len(connected_components(g, support)) != 1:
        return Certificate(False, "disconnected support")
    bd = block_decomposition(g, support)

    if len(bd.blocks) == 1:
        if not is_cycle(g, support):
            return Certificate(False, "biconnected but not a cycle", _edges_str(support))
        if len(support) % 2:
            return Certificate(False, "odd cycle", _edges_str(support))
        doubled = [e for e in support if wg.multiplicity[e] != 1]
        if doubled:
            return Certificate(False, "cycle edge traversed twice", _edges_str(doubled))
        return Certificate(True, "even cycle")

    cyclic = []
    for i, blk in enumerate(bd.blocks):
        if len(blk) == 1:
            e = blk[0]
            if wg.multiplicity[e] != 2:
                return Certificate(False, "cut edge traversed once", _edges_str(blk))
            cyclic.append(False)
        elif is_cycle(g, blk):
            doubled = [e for e in blk if wg.multiplicity[e] != 1]
            if doubled:
                return Certificate(False, "cycle edge traversed twice", _edges_str(doubled))
            cyclic.append(True)
        else:
            return Certificate(False, "block neither cycle nor cut edge", _edges_str(blk))

    # block-cut tree: blocks incident to each cut vertex
    at_vertex: dict[int, list[int]] = defaultdict(list)
    block_verts = [support_vertices(g, blk) for blk in bd.blocks]
    for i, vs in enumerate(block_verts):
        for v in vs:
            if v in bd.cut_vertices:
                at_vertex[v].append(i)

    for v in sorted(bd.cut_vertices):
        if len(at_vertex[v]) != 2:
            return Certificate(False, "cut vertex not in exactly two blocks",
                               f"v{v + 1} in {len(at_vertex[v])} blocks")
        for start in at_vertex[v]:
            seen = {start}
            todo = [start]
            while todo:
                i = todo.pop()
                for u in block_verts[i]:
                    if u == v or u not in bd.cut_vertices:
                        continue
                    for j in at_vertex[u]:
                        if j not in seen:
                            seen.add(j)
                            todo.append(j)
            count = sum(len(bd.blocks[i]) for i in seen if cyclic[i])
            if count % 2 == 0:
                return Certificate(False, "cut vertex splits off an even part",
                                   f"v{v + 1}: {count} cyclic edges on one side")
    return Certificate(True, "block structure")


def is_primitive_bruteforce(b: Binomial, g: Graph, cap: int = BRUTEFORCE_SUPPORT_CAP) -> bool:
    """Primitivity by the definition: no proper nonzero sub-binomial of ``b`` lies in I_G.

    A dominated pair (u', v') with equal A-degree other than (0, 0) and
    (plus, minus) must have both parts proper and nonzero, since every edge
    vector is nonnegative and nonzero. So it suffices to collect the A-degrees
    of all u' <= plus and look up each proper nonzero v' <= minus.
    """
    size = len(b.support)
    if size > cap:
        raise SupportTooLarge(size, cap)

    def dominated(vec):
        idx = [e for e in range(len(vec)) if vec[e]]
        for ks in product(*(range(vec[e] + 1) for e in idx)):
            yield idx, ks

    def degree_of(idx, ks):
        deg = [0] * g.n
        for e, k in zip(idx, ks):
            if k:
                u, v = g.edges[e]
                deg[u] += k
                deg[v] += k
        return tuple(deg)

    plus_degrees = {degree_of(idx, ks) for idx, ks in dominated(b.plus)}
    full = tuple(b.minus[e] for e in range(b.m) if b.minus[e])
    for idx, ks in dominated(b.minus):
        if not any(ks) or ks == full:
            continue
        if degree_of(idx, ks) in plus_degrees:
            return False
    return True
