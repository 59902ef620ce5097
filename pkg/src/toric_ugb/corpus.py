"""Named graphs and a seeded random corpus of small connected graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, build_graph


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def bridged_triangles() -> Graph:
    """Triangles {1,2,3} and {4,5,6} joined by the bridge {3,4} (edge e4)."""
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])


def triforce() -> Graph:
    """Three outer triangles hanging off a central triangle, 9 vertices.

    Edge order follows the closed walk e1, ..., e12: an outer triangle
    (e1-e3), a central edge (e4), the next outer triangle (e5-e7), a central
    edge (e8), the last outer triangle (e9-e11), and the closing central edge
    (e12). The central triangle is {e4, e8, e12}.
    """
    edges = [
        (0, 1), (1, 2), (2, 0), (0, 3),
        (3, 4), (4, 5), (5, 3), (3, 6),
        (6, 7), (7, 8), (8, 6), (6, 0),
    ]
    return build_graph(9, edges)


TRIFORCE_WALK = tuple(range(12))


def two_squares_at_vertex() -> Graph:
    """Two 4-cycles sharing vertex 0."""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])


def cycle_chain(k: int, path_length: int = 1) -> Graph:
    """``k`` 4-cycles in a row, consecutive ones joined by a path.

    Square ``i`` has vertices a, b, c, d in cyclic order; the path leaves from
    its vertex c and enters the next square at its vertex a.
    """
    edges = []
    n = 0
    prev_exit = None
    for _ in range(k):
        a, b, c, d = n, n + 1, n + 2, n + 3
        n += 4
        edges += [(a, b), (b, c), (c, d), (d, a)]
        if prev_exit is not None:
            chain = [prev_exit] + list(range(n, n + path_length - 1)) + [a]
            n += path_length - 1
            edges += list(zip(chain, chain[1:]))
        prev_exit = c
    return build_graph(n, edges)


def pendant_cycle_example() -> Graph:
    """Central triangle whose three vertices each carry a bridge to a leaf triangle.

    Leaf triangles use the smallest labels so that they are peeled first,
    leaving the central triangle with only pendant edges attached.
    """
    edges = [
        (0, 1), (1, 9), (9, 0),      # leaf A
        (2, 3), (3, 10), (10, 2),    # leaf B
        (4, 5), (5, 11), (11, 4),    # leaf C
        (9, 6), (10, 7), (11, 8),    # bridges
        (6, 7), (7, 8), (8, 6),      # centre
    ]
    return build_graph(12, edges)


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 60
    min_vertices: int = 4
    max_vertices: int = 9
    max_edges: int = 14
    seed: int = 20240607


def random_connected_graph(rng: random.Random, n: int, m: int) -> Graph:
    """Random spanning tree plus ``m - n + 1`` further random edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    rest = [p for p in combinations(range(n), 2) if p not in edges]
    edges.update(rng.sample(rest, m - len(edges)))
    edge_list = sorted(edges)
    rng.shuffle(edge_list)
    return build_graph(n, edge_list)


def random_corpus(config: CorpusConfig = CorpusConfig()) -> list[Graph]:
    rng = random.Random(config.seed)
    graphs = []
    for _ in range(config.size):
        n = rng.randint(config.min_vertices, config.max_vertices)
        hi = min(config.max_edges, n * (n - 1) // 2)
        lo = min(n + 1, hi)
        graphs.append(random_connected_graph(rng, n, rng.randint(lo, hi)))
    return graphs


@dataclass(frozen=True)
class FlowerConfig:
    """Odd centre cycle with petal cycles hung on its vertices.

    Centres whose every vertex carries a petal tend to be pure cycles, which the
    dense random corpus almost never produces.
    """

    size: int = 60
    petal_probability: float = 0.85
    bridge_probability: float = 0.3
    seed: int = 20240608


def random_flower(rng: random.Random, config: FlowerConfig = FlowerConfig()) -> Graph:
    centre = rng.choice((3, 3, 5))
    edges = [(i, (i + 1) % centre) for i in range(centre)]
    n = centre

    def glue(at: int) -> None:
        nonlocal n
        if rng.random() < config.bridge_probability:
            edges.append((at, n))
            at, n = n, n + 1
        k = rng.choice((3, 3, 4, 5))
        ring = [at] + list(range(n, n + k - 1))
        n += k - 1
        edges.extend((ring[i], ring[(i + 1) % k]) for i in range(k))

    for v in range(centre):
        if rng.random() < config.petal_probability:
            glue(v)
    for _ in range(rng.randint(0, 1)):
        glue(rng.randrange(n))
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in edges]
    rng.shuffle(edges)
    return build_graph(n, edges)


def flower_corpus(config: FlowerConfig = FlowerConfig()) -> list[Graph]:
    rng = random.Random(config.seed)
    return [random_flower(rng, config) for _ in range(config.size)]
