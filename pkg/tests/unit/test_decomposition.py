from pathlib import Path

import networkx as nx
import pytest

from src.errors import DecompositionError
from src.graphs.graph_states import Graph, half_graph, star_graph
from src.lattice.toric import LatticeParams, QubitCoord
from src.reduction.decomposition import (
    LAYERS,
    center_coords,
    component_layout,
    decompose_adjacency,
    decomposition_dot,
    layer_adjacencies,
)
from src.reduction.standard_form import closed_form_adjacency, reduce_to_graph

GOLDEN = Path(__file__).resolve().parents[2] / 'docs' / 'golden'


@pytest.mark.parametrize('L', range(2, 9))
def test_layers_sum_to_the_toric_graph(L):
    p = LatticeParams(L)
    mstar, mhalf1, mhalf2 = decompose_adjacency(closed_form_adjacency(p), p)
    assert mstar.edge_count() == 2 * L * (L - 1)
    assert mhalf1.edge_count() == mhalf2.edge_count() == L * L * (L - 1) // 2
    assert mstar.overlap(mhalf1).edge_count() == 0
    assert mhalf1.overlap(mhalf2).edge_count() == 0


def test_layout_lists_centers_last(p3):
    layout = component_layout(p3)
    assert len(layout.stars) == 6
    assert len(layout.x_stars()) == len(layout.y_stars()) == 3
    assert all(len(star) == 3 for star in layout.stars)
    assert all(len(x) == len(y) == 2 for x, y in layout.half1 + layout.half2)
    assert center_coords(p3)[:3] == [QubitCoord(3, j, 'x') for j in (1, 2, 3)]
    assert center_coords(p3)[3:] == [QubitCoord(1, j, 'y') for j in (1, 2, 3)]


def test_l2_layer_edges(p2):
    layers = layer_adjacencies(p2)
    assert layers['mstar'].edges() == [(1, 2), (3, 4), (5, 6), (7, 8)]
    assert layers['mhalf1'].edges() == [(1, 6), (3, 8)]
    assert layers['mhalf2'].edges() == [(1, 8), (3, 6)]
    assert tuple(layers) == LAYERS


def test_corrupted_adjacency_is_rejected(p3):
    adjacency, _ = reduce_to_graph(p3)
    with pytest.raises(DecompositionError):
        decompose_adjacency(adjacency.toggled(1, 2), p3)


def test_dot_matches_golden(p2):
    adjacency, _ = reduce_to_graph(p2)
    expected = (GOLDEN / 'toric_graph_L2.dot').read_text()
    assert decomposition_dot(adjacency, p2, name='toric_L2') == expected


@pytest.mark.parametrize('L', [3, 4, 5])
def test_components_are_stars_and_half_graphs(L):
    p = LatticeParams(L)
    layers = layer_adjacencies(p)
    shapes = {
        'mstar': (star_graph(L).to_networkx(), 2 * L),
        'mhalf1': (half_graph(L - 1).to_networkx(), L),
        'mhalf2': (half_graph(L - 1).to_networkx(), L),
    }
    for name, (shape, count) in shapes.items():
        g = Graph.from_adjacency(layers[name]).to_networkx()
        components = [c for c in nx.connected_components(g) if len(c) > 1]
        assert len(components) == count
        assert all(nx.is_isomorphic(g.subgraph(c), shape) for c in components)
