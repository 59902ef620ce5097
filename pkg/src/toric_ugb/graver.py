"""Graver bases of toric ideals of graphs.

Two generators:

* ``enumerate_walk_binomials`` / ``graver_basis``: exhaustive depth-first
  search over even closed walks of bounded length, then a primitivity filter.
* ``graver_basis_from_blocks``: grows primitive subgraphs block by block
  (cycles and doubled cut edges glued at fresh vertices). Much faster on dense
  graphs; used to produce importable bases for graphs such as K8 that are
  beyond the walk search.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .binomial import (
    MINUS,
    PLUS,
    Binomial,
    WalkGraph,
    canonicalize,
    is_primitive_bruteforce,
    is_primitive_structural,
    support_walkgraph,
    walk_to_binomial,
)
from .errors import LimitExceeded, OracleMismatch
from .graph import Graph


@dataclass(frozen=True)
class EnumerationLimits:
    max_degree: int | None = None
    max_walks: int = 20_000_000
    max_edges_support: int = 24

    def __post_init__(self):
        if self.max_degree is not None and self.max_degree < 1:
            raise ValueError("max_degree must be positive")
        if self.max_walks < 1 or self.max_edges_support < 1:
            raise ValueError("limits must be positive")

    def degree_bound(self, g: Graph) -> int:
        if self.max_degree is not None:
            return self.max_degree
        return g.n - 2 if g.n >= 4 else 2


def _sort_key(b: Binomial):
    return (b.degree, b.plus, b.minus)


@dataclass(frozen=True)
class BasisSet:
    elements: tuple[Binomial, ...]
    source: str = "enumerated"

    @classmethod
    def from_binomials(cls, items: Iterable[Binomial], source: str = "enumerated") -> BasisSet:
        uniq = {canonicalize(b) for b in items}
        return cls(tuple(sorted(uniq, key=_sort_key)), source)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Binomial]:
        return iter(self.elements)

    def __contains__(self, b: Binomial) -> bool:
        return canonicalize(b) in set(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasisSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)


# ---------------------------------------------------------------------------
# walk search

def _distances_to(g: Graph, s: int) -> list[float]:
    """BFS distance to ``s`` using only vertices >= s."""
    dist = [float("inf")] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w, _ in g.adjacency[u]:
            if w >= s and dist[w] == float("inf"):
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _walks_from(g: Graph, s: int, max_length: int, max_states: int):
    """Binomials of even closed walks whose smallest vertex is ``s``.

    Every closed walk has a rotation starting at its smallest vertex, and a
    rotation changes the binomial at most by sign. Branches are cut when an
    edge would be used a third time or at the opposite parity (the binomial
    would share a factor), or when ``s`` is out of reach.
    Returns (set of canonical (plus, minus) pairs, number of states).
    """
    m = g.m
    adj = [[(w, e) for w, e in g.adjacency[u] if w >= s] for u in range(g.n)]
    dist = _distances_to(g, s)
    use = [0] * m
    par = [0] * m
    found: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    states = 0

    def record():
        p = tuple(use[e] if par[e] == PLUS else 0 for e in range(m))
        q = tuple(use[e] if par[e] == MINUS else 0 for e in range(m))
        found.add((p, q) if p >= q else (q, p))

    def dfs(cur: int, length: int):
        nonlocal states
        states += 1
        if states > max_states:
            raise LimitExceeded(max_states)
        sign = PLUS if length % 2 == 0 else MINUS
        left = max_length - length - 1
        for w, e in adj[cur]:
            if dist[w] > left:
                continue
            k = use[e]
            if k == 2 or (k == 1 and par[e] != sign):
                continue
            use[e] = k + 1
            par[e] = sign
            if w == s and length % 2 == 1:
                record()
            if left > 0:
                dfs(w, length + 1)
            use[e] = k
            if k == 0:
                par[e] = 0

    if max_length >= 2:
        dfs(s, 0)
    return found, states


def _walks_from_job(args):
    g, s, max_length, max_states = args
    try:
        found, states = _walks_from(g, s, max_length, max_states)
    except LimitExceeded:
        return None, max_states + 1
    return found, states


def enumerate_walk_binomials(g: Graph, limits: EnumerationLimits = EnumerationLimits(),
                             workers: int = 1) -> BasisSet:
    """All irreducible binomials of even closed walks of length <= 2 * degree bound."""
    max_length = 2 * limits.degree_bound(g)
    jobs = [(g, s, max_length, limits.max_walks) for s in range(g.n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_walks_from_job, jobs))
    else:
        results = []
        total = 0
        for job in jobs:
            res = _walks_from_job(job)
            results.append(res)
            total += res[1]
            if total > limits.max_walks:
                break
    total = sum(states for _, states in results)
    if total > limits.max_walks:
        raise LimitExceeded(limits.max_walks)
    pairs = set()
    for found, _ in results:
        pairs |= found
    return BasisSet.from_binomials((Binomial(p, q) for p, q in pairs), "enumerated")


def graver_basis(g: Graph, limits: EnumerationLimits = EnumerationLimits(),
                 workers: int = 1, verify: bool = False) -> BasisSet:
    """Primitive elements among the walk binomials.

    With ``verify`` every candidate whose support is under the brute-force cap
    is also checked against the definition, raising OracleMismatch on any
    disagreement.
    """
    candidates = enumerate_walk_binomials(g, limits, workers)
    keep = []
    for b in candidates:
        structural = bool(is_primitive_structural(support_walkgraph(b, g), g))
        if verify and len(b.support) <= limits.max_edges_support:
            brute = is_primitive_bruteforce(b, g, limits.max_edges_support)
            if brute != structural:
                raise OracleMismatch(b, f"structural={structural} bruteforce={brute}")
        if structural:
            keep.append(b)
    return BasisSet(tuple(keep), "enumerated")


def degree_histogram(basis: Iterable[Binomial]) -> dict[int, int]:
    return dict(sorted(Counter(b.degree for b in basis).items()))


# ---------------------------------------------------------------------------
# block-by-block construction

def simple_cycles(g: Graph, max_length: int) -> list[tuple[int, ...]]:
    """Edge sets of all simple cycles with at most ``max_length`` edges."""
    out = []
    for s in range(g.n):
        path_v = [s]
        path_e: list[int] = []
        on_path = {s}

        def extend(u):
            for w, e in g.adjacency[u]:
                if w < s:
                    continue
                if w == s and len(path_e) >= 2:
                    # each cycle is seen in both directions; keep one
                    if path_v[1] < u:
                        out.append(tuple(sorted(path_e + [e])))
                    continue
                if w in on_path or len(path_e) + 1 >= max_length:
                    continue
                on_path.add(w)
                path_v.append(w)
                path_e.append(e)
                extend(w)
                path_e.pop()
                path_v.pop()
                on_path.discard(w)

        extend(s)
    return out


def euler_walk(g: Graph, edge_counts: dict[int, int]) -> list[int]:
    """A closed walk using edge ``e`` exactly ``edge_counts[e]`` times (Hierholzer)."""
    remaining = dict(edge_counts)
    inc: dict[int, list[int]] = defaultdict(list)
    for e, k in sorted(edge_counts.items()):
        u, v = g.edges[e]
        inc[u].extend([e] * k)
        inc[v].extend([e] * k)
    start = g.edges[min(edge_counts)][0]
    stack = [(start, -1)]
    circuit = []
    while stack:
        v, e_in = stack[-1]
        while inc[v] and remaining[inc[v][-1]] == 0:
            inc[v].pop()
        if inc[v]:
            e = inc[v].pop()
            remaining[e] -= 1
            stack.append((g.other(e, v), e))
        else:
            stack.pop()
            if e_in >= 0:
                circuit.append(e_in)
    circuit.reverse()
    return circuit


def graver_basis_from_blocks(g: Graph, max_degree: int | None = None) -> BasisSet:
    """Graver basis by growing primitive subgraphs one block at a time.

    Start from any cycle and repeatedly glue either a cycle or a doubled cut
    edge at a vertex that lies in exactly one block so far, through otherwise
    fresh vertices. Every subgraph meeting the block characterization arises
    this way; the structural test then picks the primitive ones and an Euler
    circuit of the subgraph (cut edges doubled) yields the binomial.

    Edge and vertex sets are int bitmasks.
    """
    bound = 2 * (max_degree if max_degree is not None else EnumerationLimits().degree_bound(g))
    all_vertices = (1 << g.n) - 1
    cycles = []
    for c in simple_cycles(g, bound):
        emask = sum(1 << e for e in c)
        vmask = 0
        for e in c:
            u, v = g.edges[e]
            vmask |= (1 << u) | (1 << v)
        cycles.append((len(c), emask, vmask))
    cycles.sort()
    cycles_at: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    by_vertex_set: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for cyc in cycles:
        by_vertex_set[cyc[2]].append(cyc)
        for v in range(g.n):
            if cyc[2] >> v & 1:
                cycles_at[v].append(cyc)

    def edges_of(mask):
        return [e for e in range(g.m) if mask >> e & 1]

    seen: set[int] = set()
    out: list[Binomial] = []
    # state: (cycle edges, cut edges, vertices, vertices lying in exactly one block)
    todo: list[tuple[int, int, int, int]] = []
    for _, emask, vmask in cycles:
        seen.add(emask)
        todo.append((emask, 0, vmask, vmask))

    while todo:
        cyc, cut, verts, once = todo.pop()
        cost = cyc.bit_count() + 2 * cut.bit_count()
        dangling = 0
        for e in edges_of(cut):
            u, v = g.edges[e]
            dangling |= ((1 << u) | (1 << v)) & once
        if not dangling:
            counts = {e: 1 for e in edges_of(cyc)}
            counts.update({e: 2 for e in edges_of(cut)})
            wg = WalkGraph(tuple(sorted(counts)), counts, {e: PLUS for e in counts})
            if is_primitive_structural(wg, g):
                out.append(walk_to_binomial(g, euler_walk(g, counts)))
        budget = bound - cost
        free = all_vertices & ~verts
        for v in range(g.n):
            vbit = 1 << v
            if not once & vbit:
                continue
            found = []
            if (1 << free.bit_count()) < len(cycles_at[v]):
                sub = free
                while sub:
                    if 2 <= sub.bit_count() < budget:
                        found.extend(by_vertex_set.get(sub | vbit, ()))
                    sub = (sub - 1) & free
            else:
                for cyc_c in cycles_at[v]:
                    if cyc_c[0] > budget:
                        break
                    if cyc_c[2] & verts == vbit:
                        found.append(cyc_c)
            for length, emask, vmask in found:
                if length > budget:
                    continue
                key = cyc | cut | emask
                if key in seen:
                    continue
                seen.add(key)
                todo.append((cyc | emask, cut, verts | vmask, (once & ~vbit) | (vmask & ~vbit)))
            if budget < 2 + 3:
                continue
            for w, e in g.adjacency[v]:
                if verts >> w & 1:
                    continue
                key = cyc | cut | (1 << e)
                if key in seen:
                    continue
                seen.add(key)
                todo.append((cyc, cut | (1 << e), verts | (1 << w), (once & ~vbit) | (1 << w)))
    return BasisSet.from_binomials(out, "enumerated")
