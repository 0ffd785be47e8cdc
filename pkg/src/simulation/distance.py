"""
Brute-force code distance from the Knill-Laflamme conditions.

For a code spanned by orthonormal codewords psi_a, an error O is correctable
when <psi_a|O|psi_b> = C(O) delta_ab. The distance is the smallest weight of a
Pauli that breaks this. Paulis are applied without phase (ZX in place of Y);
both conditions are unchanged when O is multiplied by a scalar, so this never
changes a verdict.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Optional, Sequence

import numpy as np

from config.settings import AMPLITUDE_TOLERANCE
from src.algebra.gf2 import BitVec
from src.algebra.symplectic import PauliOp
from src.errors import CodewordError, SizeError
from src.graphs.graph_states import ghz_reference
from src.simulation.simulator import StatevectorSimulator
from src.simulation.statevector import StateVec

_LETTERS = {'X': (0, 1), 'Y': (1, 1), 'Z': (1, 0)}


class PauliErrorIter:
    """Every Pauli of weight 1..max_weight (optionally the identity first), in increasing weight."""

    def __init__(self, n_qubits: int, max_weight: int, include_identity: bool = False):
        if n_qubits < 1 or max_weight < 0:
            raise SizeError(f"invalid enumeration size n={n_qubits}, max_weight={max_weight}")
        self.n_qubits = n_qubits
        self.max_weight = min(max_weight, n_qubits)
        self.include_identity = include_identity

    def __len__(self) -> int:
        start = 0 if self.include_identity else 1
        return sum(comb(self.n_qubits, w) * 3 ** w for w in range(start, self.max_weight + 1))

    def of_weight(self, w: int) -> Iterator[PauliOp]:
        n = self.n_qubits
        for support in itertools.combinations(range(n), w):
            for letters in itertools.product('XYZ', repeat=w):
                z = x = 0
                for q, letter in zip(support, letters):
                    zb, xb = _LETTERS[letter]
                    z |= zb << q
                    x |= xb << q
                yield PauliOp(n, BitVec(n, z), BitVec(n, x))

    def __iter__(self) -> Iterator[PauliOp]:
        if self.include_identity:
            yield PauliOp.identity(self.n_qubits)
        for w in range(1, self.max_weight + 1):
            yield from self.of_weight(w)


@dataclass(frozen=True)
class KLReport:
    distance: int
    found: bool
    operator: Optional[str] = None
    condition: Optional[str] = None
    value: Optional[complex] = None
    checked: int = 0

    def to_dict(self) -> dict:
        return {
            'distance': self.distance,
            'found': self.found,
            'operator': self.operator,
            'condition': self.condition,
            'value': None if self.value is None else [self.value.real, self.value.imag],
            'checked': self.checked,
        }


class DistanceChecker:
    def __init__(self, simulator: Optional[StatevectorSimulator] = None):
        self.logger = logging.getLogger(__name__)
        self.simulator = simulator or StatevectorSimulator()

    def _check_codewords(self, codewords: Sequence[StateVec], tol: float) -> None:
        if len(codewords) < 2:
            raise CodewordError(f"need at least two codewords, got {len(codewords)}")
        n = codewords[0].n_qubits
        if any(c.n_qubits != n for c in codewords):
            raise CodewordError('codewords act on different numbers of qubits')
        gram = np.array([[a.inner(b) for b in codewords] for a in codewords])
        if np.max(np.abs(gram - np.eye(len(codewords)))) > tol:
            raise CodewordError('codewords are not orthonormal')

    def kl_report(self, codewords: Sequence[StateVec], d_max: int, tol: float = AMPLITUDE_TOLERANCE) -> KLReport:
        """
        Search for the lightest Pauli violating the Knill-Laflamme conditions.

        Args:
            codewords: Orthonormal basis of the code space
            d_max: Largest weight examined
            tol: Absolute tolerance on matrix elements
        """
        try:
            self._check_codewords(codewords, tol)
            n = codewords[0].n_qubits
            enumeration = PauliErrorIter(n, d_max)
            checked = 0
            for w in range(1, enumeration.max_weight + 1):
                for op in enumeration.of_weight(w):
                    checked += 1
                    images = [self.simulator.apply_pauli(c, op) for c in codewords]
                    diagonal = codewords[0].inner(images[0])
                    for a, psi_a in enumerate(codewords):
                        for b, image_b in enumerate(images):
                            value = psi_a.inner(image_b)
                            if a == b and abs(value - diagonal) > tol:
                                return self._found(w, op, 'diagonal', value, checked)
                            if a != b and abs(value) > tol:
                                return self._found(w, op, 'off_diagonal', value, checked)
            self.logger.info(f"No violation up to weight {enumeration.max_weight} after {checked} operators")
            return KLReport(enumeration.max_weight + 1, False, checked=checked)
        except Exception as e:
            self.logger.error(f"Error computing code distance: {str(e)}")
            raise

    def _found(self, w: int, op: PauliOp, condition: str, value: complex, checked: int) -> KLReport:
        self.logger.info(f"Distance {w}: {op.label()} violates the {condition} condition")
        return KLReport(w, True, op.label(), condition, complex(value), checked)

    def kl_distance(self, codewords: Sequence[StateVec], d_max: int, tol: float = AMPLITUDE_TOLERANCE) -> int:
        """Distance, or d_max + 1 when nothing up to d_max violates the conditions."""
        return self.kl_report(codewords, d_max, tol).distance


def m_copy_ghz_code(m: int, copies: Optional[int] = None) -> List[StateVec]:
    """Codewords |phi_m^+>^copies and |phi_m^->^copies; copies defaults to m."""
    copies = m if copies is None else copies
    if m < 1 or copies < 1:
        raise SizeError(f"invalid GHZ code m={m}, copies={copies}")
    codewords = []
    for sign in (1, -1):
        block = ghz_reference(m, sign)
        state = block
        for _ in range(copies - 1):
            state = state.tensor(block)
        codewords.append(state)
    return codewords


_default = DistanceChecker()
kl_report = _default.kl_report
kl_distance = _default.kl_distance
