import json

import pytest

from src.errors import LayerConflictError, ShapeError
from src.synthesis.circuit import Circuit, Gate, GateKind, circuit_depth


def test_gate_validation():
    with pytest.raises(ShapeError):
        Gate(GateKind.CX, (1,))
    with pytest.raises(ShapeError):
        Gate.cz(2, 2)
    with pytest.raises(ShapeError):
        Gate.h(-1)


def test_layer_conflicts_are_rejected():
    with pytest.raises(LayerConflictError):
        Circuit(3, ((Gate.cx(0, 1), Gate.h(1)),))


def test_wire_out_of_range():
    with pytest.raises(ShapeError):
        Circuit(2, ((Gate.h(2),),))


def test_empty_layers_are_dropped():
    c = Circuit(2, ((), (Gate.h(0),), ()))
    assert c.depth == 1


def test_depth_report_counts_non_h_layers():
    c = Circuit.hadamard_layer(3).compose(Circuit(3, ((Gate.cz(0, 1),), (Gate.cx(1, 2), Gate.h(0)))))
    report = circuit_depth(c)
    assert report.total == 3
    assert report.non_h == 2
    assert report.gates_by_kind == {'cx': 1, 'cz': 1, 'h': 4}


def test_parallel_merges_disjoint_circuits():
    a = Circuit(4, ((Gate.h(0),), (Gate.cz(0, 1),)))
    b = Circuit(4, ((Gate.h(2),),))
    merged = a.parallel(b)
    assert merged.depth == 2
    assert merged.layers[0] == (Gate.h(0), Gate.h(2))
    with pytest.raises(LayerConflictError):
        a.parallel(a)


def test_inverse_reverses_layers():
    c = Circuit(2, ((Gate.h(0),), (Gate.cx(0, 1),)))
    assert c.inverse().layers == ((Gate.cx(0, 1),), (Gate.h(0),))


def test_without_drops_a_gate_kind():
    c = Circuit.hadamard_layer(2).compose(Circuit(2, ((Gate.cz(0, 1),),)))
    assert c.without(GateKind.H).depth == 1


def test_remap_moves_wires():
    c = Circuit(2, ((Gate.cx(0, 1),),)).remapped({0: 3, 1: 1}, 4)
    assert c.layers[0][0].qubits == (3, 1)


def test_apply_classical_tracks_cx():
    c = Circuit(3, ((Gate.cx(0, 1),), (Gate.cx(1, 2),)))
    assert c.apply_classical([1, 0, 0]) == [1, 1, 1]
    with pytest.raises(ValueError):
        Circuit.hadamard_layer(1).apply_classical([0])


def test_json_round_trip_is_stable():
    c = Circuit.hadamard_layer(2).compose(Circuit(2, ((Gate.cz(0, 1),),)))
    text = c.to_json()
    assert Circuit.from_dict(json.loads(text)) == c
    assert Circuit.from_dict(json.loads(text)).to_json() == text


def test_qasm_stanzas():
    c = Circuit(2, ((Gate.h(0), Gate.h(1)), (Gate.cz(0, 1),)))
    lines = c.to_qasm().splitlines()
    assert lines[:3] == ['OPENQASM 2.0;', 'include "qelib1.inc";', 'qreg q[2];']
    assert '// layer 2' in lines
    assert lines[-1] == 'cz q[0],q[1];'
