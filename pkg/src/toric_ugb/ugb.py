"""Universal Groebner basis membership for toric ideals of graphs.

A primitive binomial is in the universal Groebner basis exactly when no
cycle of its walk lies entirely on one side. Three deciders are provided:

* ``filter_element``: the cycle-peeling procedure (trace from a degree-2
  vertex, cut off a cycle or a dangling cut-edge path, test cycles for
  purity, repeat);
* ``is_mixed_blocks``: every cyclic block of the support has both parities;
* ``is_mixed_forest``: both parity classes are forests (union-find).
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .binomial import MINUS, PLUS, Binomial, support_walkgraph
from .errors import ExponentTooLarge, MalformedInput, OracleMismatch
from .graph import EdgeSubset, Graph, block_decomposition, is_cycle
from .graver import BasisSet

ACCEPTED = "accepted"
REJECTED = "rejected"


@dataclass
class FilterTrace:
    peeled_cycles: list[EdgeSubset] = field(default_factory=list)
    deleted_cut_edges: list[EdgeSubset] = field(default_factory=list)
    verdict: str = ACCEPTED
    rejecting_cycle: EdgeSubset | None = None
    rejecting_side: int | None = None
    step_count: int = 0

    def certificate(self) -> str:
        if self.rejecting_cycle is None:
            return ""
        edges = ",".join(f"e{e + 1}" for e in self.rejecting_cycle)
        side = "w⁺" if self.rejecting_side == PLUS else "w⁻"
        return "{" + edges + "} ⊆ " + side


class UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of ``a`` and ``b``; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def filter_element(b: Binomial, g: Graph) -> tuple[bool, FilterTrace]:
    """Decide membership of a primitive binomial by peeling cycles.

    Works on a private copy of the support subgraph (doubled edges kept as
    single edges). Each round picks the smallest vertex of degree 2 and walks
    along unused edges, never stepping straight back, until a vertex repeats
    (a cycle) or a degree-1 vertex is hit (a dangling run of cut edges). A
    cycle lying wholly on one side rejects; otherwise the cycle, or the cut
    edges back to the last vertex of degree >= 3, are deleted. When no vertex
    of degree 2 is left, pendant cut edges are cleared from the smallest
    degree-1 vertex the same way, since they can hide a cycle whose vertices
    all carry one. With neither left, the element is accepted.
    """
    try:
        wg = support_walkgraph(b, g)
    except ExponentTooLarge as exc:
        raise MalformedInput(str(exc)) from exc
    if b.m != g.m:
        raise MalformedInput("binomial and graph disagree on the number of edges")

    trace = FilterTrace()
    steps = 0
    nbrs: dict[int, dict[int, int]] = defaultdict(dict)
    for e in wg.support:
        u, v = g.edges[e]
        nbrs[u][v] = e
        nbrs[v][u] = e
    T: list[int] = []

    while True:
        live = sorted(v for v in nbrs if nbrs[v])
        steps += len(live) + 1
        start = next((v for v in live if len(nbrs[v]) == 2), None)
        if start is None:
            start = next((v for v in live if len(nbrs[v]) == 1), None)
        if start is None:
            trace.verdict = ACCEPTED
            break

        steps += len(T) + 1
        T = [start]
        while True:
            cur = T[-1]
            prev = T[-2] if len(T) > 1 else None
            cand = [w for w in nbrs[cur] if w != prev]
            steps += len(nbrs[cur]) + 1
            j = min(cand)
            T.append(j)
            steps += len(T)
            if j in T[:-1] or len(nbrs[j]) == 1:
                break

        U = []
        if len(nbrs[j]) == 1 and j not in T[:-1]:
            r = len(T) - 1
            while True:
                U.append(nbrs[T[r - 1]][T[r]])
                r -= 1
                steps += 1
                if len(nbrs[T[r]]) >= 3 or r == 0:
                    break
            trace.deleted_cut_edges.append(tuple(sorted(U)))
        else:
            l = T.index(j)
            r = len(T) - 1
            while True:
                U.append(nbrs[T[r - 1]][T[r]])
                r -= 1
                steps += 1
                if r == l:
                    break
            U_sorted = tuple(sorted(U))
            steps += len(U)
            sides = {wg.parity[e] for e in U}
            if len(sides) == 1:
                trace.verdict = REJECTED
                trace.rejecting_cycle = U_sorted
                trace.rejecting_side = sides.pop()
                break
            trace.peeled_cycles.append(U_sorted)

        for e in U:
            x, y = g.edges[e]
            del nbrs[x][y]
            del nbrs[y][x]
        steps += len(U)

    trace.step_count = steps
    return trace.verdict == ACCEPTED, trace


def is_mixed_blocks(b: Binomial, g: Graph) -> tuple[bool, tuple[EdgeSubset, int] | None]:
    """True iff every cyclic block of the support carries both parities.

    On failure returns the first pure block and its side.
    """
    wg = support_walkgraph(b, g)
    for blk in block_decomposition(g, wg.support).blocks:
        if len(blk) == 1 or not is_cycle(g, blk):
            continue
        sides = {wg.parity[e] for e in blk}
        if len(sides) == 1:
            return False, (blk, sides.pop())
    return True, None


def is_mixed_forest(b: Binomial, g: Graph) -> bool:
    """True iff neither the plus edges nor the minus edges contain a cycle."""
    wg = support_walkgraph(b, g)
    for sign in (PLUS, MINUS):
        uf = UnionFind()
        for e in wg.side(sign):
            if not uf.union(*g.edges[e]):
                return False
    return True


def _classify(b: Binomial, g: Graph, verify: bool) -> tuple[bool, FilterTrace]:
    ok, trace = filter_element(b, g)
    if verify:
        by_blocks, _ = is_mixed_blocks(b, g)
        by_forest = is_mixed_forest(b, g)
        if not ok == by_blocks == by_forest:
            raise OracleMismatch(
                b, f"peeling={ok} blocks={by_blocks} forest={by_forest}")
    return ok, trace


def _classify_chunk(args):
    chunk, g, verify = args
    return [_classify(b, g, verify) for b in chunk]


def universal_groebner_basis(basis: BasisSet, g: Graph, verify: bool = False,
                             workers: int = 1) -> tuple[BasisSet, list[FilterTrace]]:
    """Elements of ``basis`` accepted by ``filter_element``, in basis order.

    Traces are returned for every element of ``basis``, aligned with it.
    """
    elems = list(basis)
    if workers > 1 and len(elems) > 1:
        size = -(-len(elems) // (4 * workers))
        chunks = [elems[i:i + size] for i in range(0, len(elems), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_classify_chunk, [(c, g, verify) for c in chunks])
                       for r in part]
    else:
        results = [_classify(b, g, verify) for b in elems]
    accepted = tuple(b for b, (ok, _) in zip(elems, results) if ok)
    return BasisSet(accepted, basis.source), [t for _, t in results]
