import numpy as np
import pytest

from src.errors import SizeError
from src.graphs.graph_states import Graph, graph_state, half_graph, star_graph
from src.lattice.toric import LatticeParams
from src.reduction.standard_form import closed_form_adjacency
from src.simulation.simulator import run_circuit
from src.synthesis.circuit import Circuit, GateKind
from src.synthesis.synthesizer import (
    CircuitSynthesizer,
    encoder_stages,
    half_depth,
    half_network,
    naive_graph_circuit,
    parity_levels,
    star_depth,
    synth_half,
    synth_star,
    synth_toric,
    toric_depth_bound,
)


def _gap(circuit, graph):
    return np.max(np.abs(run_circuit(circuit).amplitudes - graph_state(graph).amplitudes))


def test_parity_levels_for_eight():
    assert parity_levels(8) == [
        [(1, 2), (3, 4), (5, 6), (7, 8)],
        [(2, 4), (6, 8)],
        [(4, 8)],
    ]


def test_parity_levels_for_odd_sizes():
    assert parity_levels(1) == []
    assert parity_levels(5) == [[(1, 2), (3, 4)], [(2, 4)], [(4, 5)]]


@pytest.mark.parametrize('n', range(1, 20))
def test_parity_levels_fold_everything_into_the_last_register(n):
    wires = [1 << k for k in range(n)]
    for pairs in parity_levels(n):
        for control, target in pairs:
            wires[target - 1] ^= wires[control - 1]
    assert wires[-1] == (1 << n) - 1


@pytest.mark.parametrize('n', range(1, 33))
def test_parity_levels_build_block_parities_level_by_level(n):
    wires = [1 << k for k in range(n)]
    for d, pairs in enumerate(parity_levels(n), start=1):
        for control, target in pairs:
            wires[target - 1] ^= wires[control - 1]
        block = 1 << d
        for end in range(block, n + 1, block):
            assert wires[end - 1] == ((1 << block) - 1) << (end - block), (d, end)


@pytest.mark.parametrize('m', range(2, 11))
def test_star_circuit_prepares_star_graph_state(m):
    assert _gap(synth_star(m), star_graph(m)) <= 1e-10


@pytest.mark.parametrize('n', range(1, 6))
@pytest.mark.parametrize('schedule', ['deferred', 'per_level'])
def test_half_circuit_prepares_half_graph_state(n, schedule):
    assert _gap(synth_half(n, schedule), half_graph(n)) <= 1e-10


def test_toric_circuit_prepares_toric_graph_state(p2):
    graph = Graph.from_adjacency(closed_form_adjacency(p2))
    assert _gap(synth_toric(p2), graph) <= 1e-10


@pytest.mark.parametrize('m', range(2, 65))
def test_star_depth_formula(m):
    non_h = synth_star(m).depth_report().non_h
    assert non_h == star_depth(m) == 2 * int(np.ceil(np.log2(m - 1))) + 1


def test_star_of_nine_has_seven_non_h_layers():
    assert synth_star(9).depth_report().non_h == 7


@pytest.mark.parametrize('n', range(1, 65))
def test_half_depth_bound(n):
    non_h = synth_half(n).depth_report().non_h
    assert non_h == half_depth(n)
    assert non_h <= 3 * int(np.ceil(np.log2(n))) + 2


def test_half_of_eight_gate_counts():
    report = synth_half(8).depth_report()
    assert report.gates_by_kind['cz'] == 15
    assert report.gates_by_kind['cx'] == 24
    assert report.non_h == 8


@pytest.mark.parametrize('L', [2, 3, 4, 8, 16])
def test_toric_depth_bound(L):
    p = LatticeParams(L)
    assert synth_toric(p).depth_report().non_h == toric_depth_bound(p)


def test_naive_circuit_depth_equals_max_degree_for_stars():
    c = naive_graph_circuit(star_graph(6))
    assert c.depth_report().non_h == 5
    assert _gap(c, star_graph(6)) <= 1e-10


def test_naive_circuit_handles_edgeless_graph():
    assert naive_graph_circuit(Graph.from_edges(3, [])).depth == 1


def test_half_network_input_validation():
    with pytest.raises(SizeError):
        half_network([0, 1], [2])
    with pytest.raises(ValueError):
        half_network([0], [1], schedule='eager')
    with pytest.raises(SizeError):
        synth_star(1)


def test_encoder_stages_cover_all_qubits(p3):
    stages = encoder_stages(p3)
    assert set(stages) == {'ghz', 'mstar', 'mhalf'}
    assert all(c.n_qubits == 18 for c in stages.values())
    assert stages['mhalf'].gate_count(GateKind.H) == 0


def _cx_part(circuit):
    return circuit.without(GateKind.H).without(GateKind.CZ)


def _assert_classical_identity(circuit):
    n = circuit.n_qubits
    for index in range(1 << n):
        bits = [(index >> (n - 1 - k)) & 1 for k in range(n)]
        assert circuit.apply_classical(bits) == bits


@pytest.mark.parametrize('m', range(2, 11))
def test_star_parity_tree_uncomputes(m):
    circuit = _cx_part(synth_star(m))
    assert circuit.gate_count(GateKind.CX) == 2 * (m - 2)
    _assert_classical_identity(circuit)


@pytest.mark.parametrize('n', range(1, 6))
@pytest.mark.parametrize('schedule', ['deferred', 'per_level'])
def test_half_parity_networks_uncompute(n, schedule):
    _assert_classical_identity(_cx_part(synth_half(n, schedule)))


def test_toric_layers_commute(p2):
    synthesizer = CircuitSynthesizer()
    reordered = (
        Circuit.hadamard_layer(p2.n_qubits)
        .compose(synthesizer.half_layers(p2, 'mhalf2'))
        .compose(synthesizer.half_layers(p2, 'mhalf1'))
        .compose(synthesizer.star_layers(p2))
    )
    graph = Graph.from_adjacency(closed_form_adjacency(p2))
    assert _gap(reordered, graph) <= 1e-10
