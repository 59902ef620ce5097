"""Simple undirected graphs with indexed edges, and block decomposition.

Vertices and edges are 0-based internally. Edge subsets are sorted tuples of
edge indices so that parallel structures (plus side, minus side, blocks) can
always be compared index by index.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import DuplicateEdge, SelfLoop, VertexOutOfRange

EdgeSubset = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def edge_between(self, u: int, v: int) -> int | None:
        for w, e in self.adjacency[u]:
            if w == v:
                return e
        return None

    def all_edges(self) -> EdgeSubset:
        return tuple(range(self.m))


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on vertices ``0..n-1``; edge order is preserved."""
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    edges = []
    seen: dict[frozenset, int] = {}
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edge_list):
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n, i)
        if u == v:
            raise SelfLoop(i, u)
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdge(i, seen[key])
        seen[key] = i
        edges.append((u, v))
        adj[u].append((v, i))
        adj[v].append((u, i))
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    return Graph(n, tuple(edges), adjacency)


def incidence_vector(g: Graph, e: int) -> tuple[int, ...]:
    """The configuration vector of edge ``e``: 1 at both endpoints."""
    u, v = g.edges[e]
    vec = [0] * g.n
    vec[u] = vec[v] = 1
    return tuple(vec)


def degrees(g: Graph, support: Iterable[int],
            multiplicity: Mapping[int, int] | None = None) -> list[int]:
    deg = [0] * g.n
    for e in support:
        k = 1 if multiplicity is None else multiplicity.get(e, 1)
        u, v = g.edges[e]
        deg[u] += k
        deg[v] += k
    return deg


def support_vertices(g: Graph, support: Iterable[int]) -> list[int]:
    vs = set()
    for e in support:
        vs.update(g.edges[e])
    return sorted(vs)


def _support_adjacency(g: Graph, support: Iterable[int]) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in sorted(support):
        u, v = g.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    return adj


def connected_components(g: Graph, support: Iterable[int]) -> list[EdgeSubset]:
    """Edge sets of the connected components of the support subgraph."""
    support = sorted(set(support))
    adj = _support_adjacency(g, support)
    seen_v: set[int] = set()
    comps = []
    for e0 in support:
        start = g.edges[e0][0]
        if start in seen_v:
            continue
        seen_v.add(start)
        stack = [start]
        comp = set()
        while stack:
            u = stack.pop()
            for w, e in adj[u]:
                comp.add(e)
                if w not in seen_v:
                    seen_v.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph, support: Iterable[int]) -> bool:
    return len(connected_components(g, support)) <= 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[EdgeSubset, ...]
    cut_vertices: frozenset[int]
    membership: Mapping[int, int]

    def block_vertices(self, g: Graph, i: int) -> list[int]:
        return support_vertices(g, self.blocks[i])

    def is_cut_edge_block(self, i: int) -> bool:
        return len(self.blocks[i]) == 1


def block_decomposition(g: Graph, support: Iterable[int]) -> BlockDecomposition:
    """Blocks (biconnected components) and cut vertices of the support subgraph.

    Iterative depth-first lowpoint search over the edge stack. Disconnected
    supports are handled component by component.
    """
    support = sorted(set(support))
    adj = _support_adjacency(g, support)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[EdgeSubset] = []
    edge_stack: list[int] = []
    clock = 0

    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frame: (vertex, edge used to enter it, index into adjacency)
        stack = [(root, -1, 0)]
        while stack:
            u, in_edge, i = stack[-1]
            if i < len(adj[u]):
                stack[-1] = (u, in_edge, i + 1)
                w, e = adj[u][i]
                if e == in_edge:
                    continue
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append(e)
                    stack.append((w, e, 0))
                elif disc[w] < disc[u]:
                    low[u] = min(low[u], disc[w])
                    edge_stack.append(e)
                continue
            stack.pop()
            if not stack:
                break
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == in_edge:
                        break
                blocks.append(tuple(sorted(block)))

    blocks.sort()
    membership: dict[int, int] = defaultdict(int)
    for b in blocks:
        for v in support_vertices(g, b):
            membership[v] += 1
    cuts = frozenset(v for v, c in membership.items() if c >= 2)
    return BlockDecomposition(tuple(blocks), cuts, dict(membership))


def is_cycle(g: Graph, edge_set: Sequence[int]) -> bool:
    """True if the edges form one simple cycle (connected, all degrees 2)."""
    if len(edge_set) < 3:
        return False
    deg = defaultdict(int)
    for e in edge_set:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    if any(d != 2 for d in deg.values()):
        return False
    return is_connected(g, edge_set)


def relabel(g: Graph, perm: Sequence[int], edge_order: Sequence[int] | None = None) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]`` and edges listed in ``edge_order``."""
    order = range(g.m) if edge_order is None else edge_order
    return build_graph(g.n, [(perm[g.edges[e][0]], perm[g.edges[e][1]]) for e in order])
