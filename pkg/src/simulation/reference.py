"""
Independent reference states for desk-scale checks.

The toric code state is built by projection, never through the graph
pipeline; the encoder states are written down from their closed forms.
"""
from __future__ import annotations

import logging
from typing import Dict, Sequence

import numpy as np

from config.settings import NORM_TOLERANCE
from src.algebra.symplectic import PauliOp
from src.errors import CodewordError, SizeError
from src.graphs.graph_states import Graph, graph_state
from src.lattice.toric import LatticeParams, build_plaquette, build_star, index_of, site_order, string_operators
from src.reduction.decomposition import layer_adjacencies
from src.reduction.standard_form import closed_form_adjacency
from src.simulation.simulator import StatevectorSimulator
from src.simulation.statevector import StateVec

logger = logging.getLogger(__name__)


def toric_operators(p: LatticeParams) -> Dict[str, PauliOp]:
    """Every star, every plaquette and both string operators, keyed by name."""
    ops = {f"star({i},{j})": build_star(i, j, p) for i, j in site_order(p)}
    ops.update({f"plaquette({i},{j})": build_plaquette(i, j, p) for i, j in site_order(p)})
    s_alpha, s_beta = string_operators(p)
    ops['S_alpha'] = s_alpha
    ops['S_beta'] = s_beta
    return ops


def toric_code_reference(p: LatticeParams, allow_large: bool = False) -> StateVec:
    """
    Project |0...0> onto the joint +1 eigenspace of the toric operators.

    Args:
        p: Lattice size; L = 2 always, L = 3 (18 qubits) only with allow_large
        allow_large: Permit the 2^18-amplitude L = 3 case
    """
    if p.L > 3 or (p.L == 3 and not allow_large):
        raise SizeError(f"toric reference state is limited to L=2 (L=3 with allow_large), got L={p.L}")
    try:
        simulator = StatevectorSimulator()
        state = StateVec.zero(p.n_qubits)
        for op in toric_operators(p).values():
            # |0...0> is already fixed by every Z-type operator
            if op.x_part.is_zero():
                continue
            state = (state + simulator.apply_pauli(state, op)).scaled(0.5)
        norm = state.norm()
        if norm < NORM_TOLERANCE:
            raise CodewordError('projection of |0...0> vanished')
        logger.info(f"Built toric reference for L={p.L} with projected norm {norm:.6f}")
        return state.scaled(1 / norm)
    except Exception as e:
        logger.error(f"Error building toric reference for L={p.L}: {str(e)}")
        raise


def _data_qubits(p: LatticeParams):
    """(L, 1, x) carries the first logical bit, (1, 1, y) the second."""
    return index_of(p.L, 1, 'x', p), index_of(1, 1, 'y', p)


def _check_coeffs(coeffs: Sequence[complex]) -> np.ndarray:
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.shape != (4,):
        raise CodewordError(f"encoder needs 4 coefficients, got shape {c.shape}")
    if abs(np.linalg.norm(c) - 1.0) > 1e-9:
        raise CodewordError(f"encoder coefficients have norm {np.linalg.norm(c):.6f}, expected 1")
    return c


def encoder_input_state(p: LatticeParams, coeffs: Sequence[complex]) -> StateVec:
    """sum c_b |b1 b2> on the data qubits, every other qubit |0>; coeffs ordered 00, 01, 10, 11."""
    c = _check_coeffs(coeffs)
    first, second = _data_qubits(p)
    n = p.n_qubits
    amps = np.zeros(2 ** n, dtype=np.complex128)
    for k, (b1, b2) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        amps[(b1 << (n - first)) | (b2 << (n - second))] = c[k]
    return StateVec(n, amps)


def _logical_z(p: LatticeParams):
    n = p.n_qubits
    z_alpha = PauliOp.z_type(n, [index_of(p.L, j, 'x', p) for j in range(1, p.L + 1)])
    z_beta = PauliOp.z_type(n, [index_of(1, j, 'y', p) for j in range(1, p.L + 1)])
    return z_alpha, z_beta


def _dress(p: LatticeParams, coeffs: Sequence[complex], base: StateVec) -> StateVec:
    """(c1 + c2 Z_beta + c3 Z_alpha + c4 Z_alpha Z_beta) applied to base."""
    c = _check_coeffs(coeffs)
    simulator = StatevectorSimulator()
    z_alpha, z_beta = _logical_z(p)
    terms = (
        base,
        simulator.apply_pauli(base, z_beta),
        simulator.apply_pauli(base, z_alpha),
        simulator.apply_pauli(base, z_alpha * z_beta),
    )
    state = terms[0].scaled(c[0])
    for coefficient, term in zip(c[1:], terms[1:]):
        state = state + term.scaled(coefficient)
    return state


def encoder_target_state(p: LatticeParams, coeffs: Sequence[complex]) -> StateVec:
    """Expected encoder output: the logical Z strings dressing the toric graph state."""
    return _dress(p, coeffs, graph_state(Graph.from_adjacency(closed_form_adjacency(p))))


def mstar_target_state(p: LatticeParams, coeffs: Sequence[complex]) -> StateVec:
    """Expected state after the GHZ and mstar stages: the same dressing on the mstar graph state alone."""
    return _dress(p, coeffs, graph_state(Graph.from_adjacency(layer_adjacencies(p)['mstar'])))
