import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from toric_ugb.corpus import cycle, random_connected_graph
from toric_ugb.errors import DuplicateEdge, SelfLoop, VertexOutOfRange
from toric_ugb.graph import (
    block_decomposition,
    build_graph,
    connected_components,
    degrees,
    incidence_vector,
)


def test_build_c4_preserves_order():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4
    assert g.edges[3] == (3, 0)
    assert g.edge_between(0, 3) == 3


def test_build_errors_name_the_offender():
    with pytest.raises(DuplicateEdge) as exc:
        build_graph(4, [(0, 1), (1, 0)])
    assert (exc.value.edge, exc.value.first) == (1, 0)
    with pytest.raises(SelfLoop):
        build_graph(3, [(0, 1), (2, 2)])
    with pytest.raises(VertexOutOfRange) as exc:
        build_graph(3, [(0, 3)])
    assert exc.value.vertex == 3


def test_triforce_has_twelve_edges(tri):
    assert (tri.n, tri.m) == (9, 12)


@pytest.mark.parametrize("edge, expected", [(0, (1, 1, 0, 0)), (3, (1, 0, 0, 1))])
def test_incidence_vector_c4(c4, edge, expected):
    assert incidence_vector(c4, edge) == expected


def test_incidence_vector_k4(k4):
    e = k4.edge_between(1, 2)
    assert incidence_vector(k4, e) == (0, 1, 1, 0)


def test_degrees(c4, tri, bow):
    assert degrees(c4, c4.all_edges()) == [2, 2, 2, 2]
    deg = degrees(tri, tri.all_edges())
    assert [v for v in range(9) if deg[v] == 4] == [0, 3, 6]
    assert all(deg[v] == 2 for v in range(9) if v not in (0, 3, 6))
    assert degrees(bow, bow.all_edges()) == [4, 2, 2, 2, 2]


def test_degrees_with_multiplicity(bridged):
    mult = {e: 1 for e in range(7)}
    mult[3] = 2
    deg = degrees(bridged, bridged.all_edges(), mult)
    assert deg == [2, 2, 4, 4, 2, 2]
    assert sum(deg) == 2 * sum(mult.values())


def test_blocks_examples(c4, bow, tri):
    bd = block_decomposition(c4, c4.all_edges())
    assert bd.blocks == ((0, 1, 2, 3),) and not bd.cut_vertices
    bd = block_decomposition(bow, bow.all_edges())
    assert bd.blocks == ((0, 1, 2), (3, 4, 5)) and bd.cut_vertices == {0}
    bd = block_decomposition(tri, tri.all_edges())
    assert len(bd.blocks) == 4
    assert (3, 7, 11) in bd.blocks
    assert bd.cut_vertices == {0, 3, 6}


def test_blocks_of_bridged_triangles(bridged):
    bd = block_decomposition(bridged, bridged.all_edges())
    assert bd.blocks == ((0, 1, 2), (3,), (4, 5, 6))
    assert bd.cut_vertices == {2, 3}
    assert bd.is_cut_edge_block(1)


def test_components(c4, tri):
    assert connected_components(c4, (0, 1, 2)) == [(0, 1, 2)]
    two = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert connected_components(two, two.all_edges()) == [(0, 1, 2), (3, 4, 5)]
    outer = [e for e in tri.all_edges() if e not in (3, 7, 11)]
    assert len(connected_components(tri, outer)) == 3


def test_disconnected_support_unions_components():
    two = build_graph(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (5, 6)])
    bd = block_decomposition(two, two.all_edges())
    assert bd.blocks == ((0, 1, 2), (3, 4, 5), (6,))
    assert bd.cut_vertices == {5}


def test_cycle_is_one_block():
    for n in range(3, 9):
        g = cycle(n)
        assert block_decomposition(g, g.all_edges()).blocks == (tuple(range(n)),)


@st.composite
def graphs_with_support(draw):
    n = draw(st.integers(2, 9))
    max_m = n * (n - 1) // 2
    m = draw(st.integers(n - 1, min(max_m, 16)))
    seed = draw(st.integers(0, 2**32 - 1))
    g = random_connected_graph(random.Random(seed), n, m)
    support = draw(st.lists(st.sampled_from(range(g.m)), unique=True, min_size=1))
    return g, sorted(support)


@settings(max_examples=200, deadline=None)
@given(graphs_with_support())
def test_blocks_match_networkx(case):
    g, support = case
    bd = block_decomposition(g, support)
    # partition of the support
    flat = sorted(e for b in bd.blocks for e in b)
    assert flat == support
    h = nx.Graph()
    for e in support:
        h.add_edge(*g.edges[e], idx=e)
    ref = sorted(
        tuple(sorted(h.edges[u, v]["idx"] for u, v in comp))
        for comp in nx.biconnected_component_edges(h)
    )
    assert list(bd.blocks) == ref
    assert bd.cut_vertices == set(nx.articulation_points(h))
    assert {v for v, c in bd.membership.items() if c >= 2} == bd.cut_vertices
    assert sum(degrees(g, support)) == 2 * len(support)


@settings(max_examples=100, deadline=None)
@given(graphs_with_support())
def test_components_match_networkx(case):
    g, support = case
    h = nx.Graph()
    for e in support:
        h.add_edge(*g.edges[e])
    assert len(connected_components(g, support)) == nx.number_connected_components(h)
