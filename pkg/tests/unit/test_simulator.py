import numpy as np
import pytest

from src.algebra.symplectic import pauli_encode
from src.errors import CodewordError, NormError, ShapeError, SizeError
from src.graphs.graph_states import ghz_reference, graph_state, product_state, star_graph
from src.simulation.simulator import (
    StatevectorSimulator,
    apply_circuit,
    apply_pauli,
    entanglement_entropy,
    pauli_expectation,
    pauli_matrix_element,
    run_circuit,
)
from src.simulation.statevector import StateVec, basis_bits, basis_index
from src.synthesis.circuit import Circuit, Gate, GateKind


def test_hadamard_on_zero():
    out = run_circuit(Circuit.hadamard_layer(1))
    assert np.allclose(out.amplitudes, [1 / np.sqrt(2), 1 / np.sqrt(2)])


def test_cx_flips_target_when_control_set():
    out = apply_circuit(StateVec.basis([1, 0]), Circuit(2, ((Gate.cx(0, 1),),)))
    assert out.amplitude([1, 1]) == pytest.approx(1.0)


def test_cz_phase_on_eleven():
    out = apply_circuit(StateVec.basis([1, 1]), Circuit(2, ((Gate.cz(0, 1),),)))
    assert out.amplitude([1, 1]) == pytest.approx(-1.0)


def test_qubit_one_is_most_significant():
    out = run_circuit(Circuit(3, ((Gate(GateKind.X, (0,)),),)))
    assert out.amplitudes[4] == pytest.approx(1.0)
    assert basis_index([1, 0, 0]) == 4
    assert basis_bits(4, 3).to_list() == [1, 0, 0]


@pytest.mark.parametrize('bits', [[0, 1, 1, 0], [1, 1, 1, 1], [1, 0, 0, 1]])
def test_x_preparation_reads_back_its_index(bits):
    layer = tuple(Gate(GateKind.X, (q,)) for q, b in enumerate(bits) if b)
    out = run_circuit(Circuit(len(bits), (layer,)))
    assert int(np.argmax(np.abs(out.amplitudes))) == basis_index(bits)


def test_width_mismatch_is_shape_error():
    with pytest.raises(ShapeError):
        apply_circuit(StateVec.zero(2), Circuit.hadamard_layer(3))


def test_norm_drift_beyond_tolerance_raises():
    simulator = StatevectorSimulator(norm_tolerance=-1.0)
    with pytest.raises(NormError):
        simulator.apply_circuit(StateVec.zero(1), Circuit.hadamard_layer(1))


def test_simulation_cap():
    with pytest.raises(SizeError):
        StateVec.zero(21)


def test_pauli_application_is_phase_free():
    out = apply_pauli(StateVec.basis([0, 1]), pauli_encode('XY'))
    # Y acts as ZX: |1> -> X -> |0> -> Z -> |0>
    assert out.amplitude([1, 0]) == pytest.approx(1.0)


def test_x_expectation_on_zero_vanishes():
    assert pauli_expectation(StateVec.zero(1), pauli_encode('X')) == pytest.approx(0.0)


def test_crossed_ghz_matrix_element():
    plus, minus = ghz_reference(3, 1), ghz_reference(3, -1)
    assert pauli_matrix_element(plus, pauli_encode('ZII'), minus) == pytest.approx(1.0)
    assert pauli_matrix_element(plus, pauli_encode('ZII'), plus) == pytest.approx(0.0)


def test_graph_generator_expectation():
    g = star_graph(4)
    state = graph_state(g)
    assert pauli_expectation(state, g.stabilizer(4)) == pytest.approx(1.0)


def test_product_state_has_no_entanglement():
    assert entanglement_entropy(product_state(4, '+'), [1, 2]) == pytest.approx(0.0, abs=1e-10)


@pytest.mark.parametrize('cut', [[1], [1, 2], [2, 4], [1, 3, 4]])
def test_ghz_entropy_is_one_bit(cut):
    assert entanglement_entropy(ghz_reference(4), cut) == pytest.approx(1.0, abs=1e-10)


def test_trivial_bipartition_rejected():
    with pytest.raises(CodewordError):
        entanglement_entropy(ghz_reference(2), [])
    with pytest.raises(CodewordError):
        entanglement_entropy(ghz_reference(2), [1, 2])


def test_state_helpers():
    s = StateVec.from_amplitudes([1, 1j], normalize=True)
    assert s.is_normalized()
    assert s.scaled(1j).allclose(s)
    assert s.phase_normalized().amplitudes[0].real > 0
    assert s.dump().splitlines()[0] == '0 +0.707106781187 +0.000000000000'
