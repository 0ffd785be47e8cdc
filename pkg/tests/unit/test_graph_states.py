import numpy as np
import pytest

from src.algebra.gf2 import BitMat, BitVec
from src.errors import LatticeIndexError, ShapeError, SizeError
from src.graphs.graph_states import (
    Adjacency,
    Graph,
    QuadraticForm,
    ghz_reference,
    graph_state,
    graph_state_amplitude,
    half_graph,
    product_state,
    quad_form_eval,
    relabel,
    star_graph,
)
from src.simulation.simulator import pauli_expectation


def test_adjacency_must_be_symmetric_with_zero_diagonal():
    with pytest.raises(ShapeError):
        Adjacency(2, BitMat.from_array([[0, 1], [0, 0]]))
    with pytest.raises(ShapeError):
        Adjacency(2, BitMat.identity(2))


def test_adjacency_edges_and_degrees():
    a = Adjacency.from_edges(4, [(1, 2), (2, 3), (2, 4)])
    assert a.edges() == [(1, 2), (2, 3), (2, 4)]
    assert a.degree(2) == 3
    assert a.max_degree() == 3
    assert a.neighbors(2) == (1, 3, 4)
    assert a.toggled(1, 2).edge_count() == 2
    assert Adjacency.from_dict(a.to_dict()) == a


def test_star_graph_shape():
    g = star_graph(5)
    assert g.edge_count() == 4
    assert g.degree(5) == 4
    with pytest.raises(SizeError):
        star_graph(1)
    with pytest.raises(LatticeIndexError):
        star_graph(3, center=4)


def test_half_graph_edges():
    g = half_graph(3)
    assert g.edge_count() == 6
    assert g.adjacency.has_edge(1, 6)
    assert not g.adjacency.has_edge(3, 4)


def test_quadratic_form_counts_edges_in_support():
    f = QuadraticForm(Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)]))
    assert quad_form_eval(f, BitVec.from_bits([1, 1, 1])) == 1
    assert quad_form_eval(f, BitVec.from_bits([1, 1, 0])) == 1
    assert quad_form_eval(f, BitVec.from_bits([1, 0, 0])) == 0


def test_values_agree_with_single_evaluations():
    g = half_graph(2)
    values = QuadraticForm(g).values()
    for index in range(16):
        bits = BitVec.from_bits([(index >> (4 - k)) & 1 for k in range(1, 5)])
        assert values[index] == quad_form_eval(QuadraticForm(g), bits)


def test_graph_state_amplitudes_are_signed_uniform():
    g = star_graph(3)
    state = graph_state(g)
    assert state.is_normalized()
    assert np.allclose(np.abs(state.amplitudes), 1 / np.sqrt(8))
    assert graph_state_amplitude(g, BitVec.from_bits([1, 0, 1])) == pytest.approx(-1 / np.sqrt(8))


@pytest.mark.parametrize('g', [star_graph(4), half_graph(2), Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])])
def test_graph_state_is_stabilized_by_its_generators(g):
    state = graph_state(g)
    for stabilizer in g.stabilizers():
        assert pauli_expectation(state, stabilizer).real == pytest.approx(1.0, abs=1e-10)


def test_ghz_and_product_states():
    assert ghz_reference(2, -1).amplitudes[-1] == pytest.approx(-1 / np.sqrt(2))
    plus = product_state(2, '+')
    assert np.allclose(plus.amplitudes, 0.5)


def test_relabel_embeds_graph():
    a = relabel(star_graph(3), [5, 2, 7], 8)
    assert a.edges() == [(2, 7), (5, 7)]


def test_dot_export_colors_edges():
    g = Graph.from_edges(3, [(1, 2)])
    dot = g.to_dot(name='t', labels={1: 'a'}, edge_colors={(1, 2): 'red'})
    assert 'graph t {' in dot
    assert '1 [label="a"];' in dot
    assert '1 -- 2 [color="red"];' in dot


def test_edge_list_text():
    assert half_graph(2).edge_list_text() == '1 3\n1 4\n2 4'
    assert Graph.from_edges(3, []).edge_list_text() == ''
