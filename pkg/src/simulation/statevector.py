"""
Dense statevectors for desk-scale verification.

Qubit 1 is the most significant bit of the amplitude index: the amplitude of
basis state |q_1 q_2 ... q_n> sits at index sum(q_k * 2**(n - k)). Reshaped
to ``[2] * n`` the array has qubit k on axis k - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from config.settings import AMPLITUDE_TOLERANCE, MAX_SIM_QUBITS, NORM_TOLERANCE
from src.algebra.gf2 import BitVec
from src.errors import ShapeError, SizeError


def check_size(n_qubits: int) -> None:
    if n_qubits < 0:
        raise SizeError(f"qubit count must be non-negative, got {n_qubits}")
    if n_qubits > MAX_SIM_QUBITS:
        raise SizeError(f"{n_qubits} qubits exceed the dense simulation cap of {MAX_SIM_QUBITS}")


def basis_index(bits: Union[BitVec, Sequence[int]]) -> int:
    """Amplitude index of a computational basis state given q_1..q_n."""
    values = bits.to_list() if isinstance(bits, BitVec) else list(bits)
    index = 0
    for b in values:
        index = (index << 1) | (int(b) & 1)
    return index


def basis_bits(index: int, n_qubits: int) -> BitVec:
    return BitVec.from_bits([(index >> (n_qubits - q)) & 1 for q in range(1, n_qubits + 1)])


def basis_table(n_qubits: int) -> np.ndarray:
    """(2**n, n) table of q_1..q_n for every amplitude index."""
    indices = np.arange(2 ** n_qubits, dtype=np.int64)
    shifts = np.arange(n_qubits - 1, -1, -1, dtype=np.int64)
    return ((indices[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


@dataclass(frozen=True, eq=False)
class StateVec:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 2 ** self.n_qubits:
            raise ShapeError(f"{self.n_qubits} qubits need {2 ** self.n_qubits} amplitudes, got {amps.shape[0]}")
        amps.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amps)

    @classmethod
    def zero(cls, n_qubits: int) -> 'StateVec':
        check_size(n_qubits)
        amps = np.zeros(2 ** n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        return cls(n_qubits, amps)

    @classmethod
    def basis(cls, bits: Union[BitVec, Sequence[int]]) -> 'StateVec':
        n = len(bits)
        check_size(n)
        amps = np.zeros(2 ** n, dtype=np.complex128)
        amps[basis_index(bits)] = 1.0
        return cls(n, amps)

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize: bool = False) -> 'StateVec':
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        n = int(round(np.log2(amps.shape[0]))) if amps.shape[0] else -1
        if n < 0 or 2 ** n != amps.shape[0]:
            raise ShapeError(f"amplitude count {amps.shape[0]} is not a power of two")
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise ShapeError('cannot normalize the zero vector')
            amps = amps / norm
        return cls(n, amps)

    def as_tensor(self) -> np.ndarray:
        return self.amplitudes.reshape([2] * self.n_qubits)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def amplitude(self, bits: Union[BitVec, Sequence[int]]) -> complex:
        return complex(self.amplitudes[basis_index(bits)])

    def inner(self, other: 'StateVec') -> complex:
        """<self|other>."""
        if self.n_qubits != other.n_qubits:
            raise ShapeError(f"qubit count mismatch: {self.n_qubits} vs {other.n_qubits}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: 'StateVec') -> float:
        return abs(self.inner(other)) ** 2

    def tensor(self, other: 'StateVec') -> 'StateVec':
        """self on the leading qubits, other on the trailing ones."""
        return StateVec(self.n_qubits + other.n_qubits, np.kron(self.amplitudes, other.amplitudes))

    def scaled(self, factor: complex) -> 'StateVec':
        return StateVec(self.n_qubits, self.amplitudes * factor)

    def __add__(self, other: 'StateVec') -> 'StateVec':
        if self.n_qubits != other.n_qubits:
            raise ShapeError(f"qubit count mismatch: {self.n_qubits} vs {other.n_qubits}")
        return StateVec(self.n_qubits, self.amplitudes + other.amplitudes)

    def phase_normalized(self, tol: float = AMPLITUDE_TOLERANCE) -> 'StateVec':
        """Remove the global phase so the first non-negligible amplitude is real positive."""
        nonzero = np.flatnonzero(np.abs(self.amplitudes) > tol)
        if nonzero.size == 0:
            return self
        anchor = self.amplitudes[nonzero[0]]
        return StateVec(self.n_qubits, self.amplitudes * (abs(anchor) / anchor))

    def allclose(self, other: 'StateVec', tol: float = AMPLITUDE_TOLERANCE) -> bool:
        """Equality up to global phase, amplitude by amplitude."""
        if self.n_qubits != other.n_qubits:
            return False
        a = self.phase_normalized(tol).amplitudes
        b = other.phase_normalized(tol).amplitudes
        return bool(np.max(np.abs(a - b), initial=0.0) <= tol)

    def dump(self, tol: float = AMPLITUDE_TOLERANCE) -> str:
        """One 'index re im' line per non-negligible amplitude, fixed precision."""
        lines = []
        for index in np.flatnonzero(np.abs(self.amplitudes) > tol):
            amp = self.amplitudes[index]
            lines.append(f"{int(index)} {amp.real:+.12f} {amp.imag:+.12f}")
        return '\n'.join(lines)
