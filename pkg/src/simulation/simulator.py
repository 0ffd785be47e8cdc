"""
Dense statevector application of layered circuits and phase-free Paulis.

Gates act on the ``[2] * n`` tensor view of the amplitudes; wire w is axis w,
which is qubit w + 1 in the 1-based labelling used everywhere else.
"""
from __future__ import annotations

import logging
from typing import Iterable, Tuple

import numpy as np

from config.settings import NORM_TOLERANCE
from src.algebra.symplectic import PauliOp
from src.errors import CodewordError, LatticeIndexError, NormError, ShapeError
from src.simulation.statevector import StateVec
from src.synthesis.circuit import Circuit, Gate, GateKind

_SQRT2_INV = 1 / np.sqrt(2)


def _slot(n: int, assignments: Tuple[Tuple[int, int], ...]) -> tuple:
    index = [slice(None)] * n
    for axis, value in assignments:
        index[axis] = value
    return tuple(index)


def _apply_gate(psi: np.ndarray, gate: Gate, n: int) -> np.ndarray:
    kind, qubits = gate.kind, gate.qubits
    out = psi.copy()
    if kind == GateKind.H:
        q = qubits[0]
        a0, a1 = psi[_slot(n, ((q, 0),))], psi[_slot(n, ((q, 1),))]
        out[_slot(n, ((q, 0),))] = (a0 + a1) * _SQRT2_INV
        out[_slot(n, ((q, 1),))] = (a0 - a1) * _SQRT2_INV
    elif kind == GateKind.X:
        out = np.flip(psi, axis=qubits[0]).copy()
    elif kind == GateKind.Z:
        out[_slot(n, ((qubits[0], 1),))] *= -1
    elif kind == GateKind.CX:
        c, t = qubits
        out[_slot(n, ((c, 1), (t, 0)))] = psi[_slot(n, ((c, 1), (t, 1)))]
        out[_slot(n, ((c, 1), (t, 1)))] = psi[_slot(n, ((c, 1), (t, 0)))]
    elif kind == GateKind.CZ:
        a, b = qubits
        out[_slot(n, ((a, 1), (b, 1)))] *= -1
    return out


class StatevectorSimulator:
    def __init__(self, norm_tolerance: float = NORM_TOLERANCE):
        self.logger = logging.getLogger(__name__)
        self.norm_tolerance = norm_tolerance

    def apply_circuit(self, s: StateVec, c: Circuit) -> StateVec:
        """
        Apply every layer of a circuit, checking the norm after each gate.

        Args:
            s: Input state
            c: Circuit on the same number of qubits
        """
        try:
            if s.n_qubits != c.n_qubits:
                raise ShapeError(f"{c.n_qubits}-qubit circuit applied to a {s.n_qubits}-qubit state")
            n = s.n_qubits
            start = s.norm()
            psi = s.as_tensor().copy()
            for k, layer in enumerate(c.layers, start=1):
                for gate in layer:
                    psi = _apply_gate(psi, gate, n)
                    drift = abs(np.linalg.norm(psi) - start)
                    if drift > self.norm_tolerance:
                        raise NormError(f"norm drifted by {drift:.3e} at {gate.qasm()} in layer {k}")
            self.logger.debug(f"Applied {c.depth} layers to {n} qubits")
            return StateVec(n, psi.reshape(-1))
        except Exception as e:
            self.logger.error(f"Error applying circuit: {str(e)}")
            raise

    def run(self, c: Circuit) -> StateVec:
        """Apply a circuit to |0...0>."""
        return self.apply_circuit(StateVec.zero(c.n_qubits), c)

    def apply_pauli(self, s: StateVec, p: PauliOp) -> StateVec:
        """Z^z X^x on every qubit: X first, then Z, no phase."""
        if s.n_qubits != p.n_qubits:
            raise ShapeError(f"{p.n_qubits}-qubit Pauli applied to a {s.n_qubits}-qubit state")
        n = s.n_qubits
        psi = s.as_tensor()
        x_axes = tuple(q - 1 for q in p.x_part.support())
        if x_axes:
            psi = np.flip(psi, axis=x_axes)
        psi = psi.copy()
        for q in p.z_part.support():
            psi[_slot(n, ((q - 1, 1),))] *= -1
        return StateVec(n, psi.reshape(-1))

    def pauli_matrix_element(self, a: StateVec, p: PauliOp, b: StateVec) -> complex:
        """<a|P|b>."""
        return a.inner(self.apply_pauli(b, p))

    def pauli_expectation(self, s: StateVec, p: PauliOp) -> complex:
        return self.pauli_matrix_element(s, p, s)

    def entanglement_entropy(self, s: StateVec, subset: Iterable[int]) -> float:
        """Base-2 von Neumann entropy of the reduced state on a proper, nonempty set of 1-based qubits."""
        subset = sorted(set(subset))
        n = s.n_qubits
        for q in subset:
            if not 1 <= q <= n:
                raise LatticeIndexError(f"qubit {q} outside 1..{n}")
        if not subset or len(subset) == n:
            raise CodewordError(f"bipartition needs a proper nonempty subset of 1..{n}, got {subset}")
        axes = [q - 1 for q in subset]
        rest = [k for k in range(n) if k not in axes]
        matrix = np.transpose(s.as_tensor(), axes + rest).reshape(2 ** len(axes), 2 ** len(rest))
        singular = np.linalg.svd(matrix / s.norm(), compute_uv=False)
        probs = singular ** 2
        probs = probs[probs > 1e-15]
        return float(-np.sum(probs * np.log2(probs)))


_default = StatevectorSimulator()
apply_circuit = _default.apply_circuit
run_circuit = _default.run
apply_pauli = _default.apply_pauli
pauli_matrix_element = _default.pauli_matrix_element
pauli_expectation = _default.pauli_expectation
entanglement_entropy = _default.entanglement_entropy
