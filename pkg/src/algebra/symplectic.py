"""
Pauli operators and stabilizer generating sets in binary symplectic form.

A Pauli on N qubits is the pair (z | x) of length-N bit vectors, one bit pair
per qubit: I = (0|0), X = (0|1), Z = (1|0), Y = (1|1). Phases are not tracked.
A tableau stores its generators as columns of the 2N x M matrix S whose first
N rows are the z-block and last N rows the x-block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from src.algebra.gf2 import BitMat, BitVec, gf2_matmul, gf2_rank
from src.errors import LatticeIndexError, NotInvertibleError, PauliParseError, ShapeError


_LETTER_TO_BITS = {'I': (0, 0), 'X': (0, 1), 'Z': (1, 0), 'Y': (1, 1)}
_BITS_TO_LETTER = {bits: letter for letter, bits in _LETTER_TO_BITS.items()}


@dataclass(frozen=True)
class PauliOp:
    """Phase-free Pauli operator Z^z X^x."""

    n_qubits: int
    z_part: BitVec
    x_part: BitVec

    def __post_init__(self):
        if self.z_part.length != self.n_qubits or self.x_part.length != self.n_qubits:
            raise ShapeError(
                f"Pauli on {self.n_qubits} qubits got parts of length "
                f"{self.z_part.length} and {self.x_part.length}"
            )

    @classmethod
    def identity(cls, n_qubits: int) -> 'PauliOp':
        return cls(n_qubits, BitVec.zeros(n_qubits), BitVec.zeros(n_qubits))

    @classmethod
    def x_type(cls, n_qubits: int, support: Iterable[int]) -> 'PauliOp':
        return cls(n_qubits, BitVec.zeros(n_qubits), BitVec.from_support(n_qubits, support))

    @classmethod
    def z_type(cls, n_qubits: int, support: Iterable[int]) -> 'PauliOp':
        return cls(n_qubits, BitVec.from_support(n_qubits, support), BitVec.zeros(n_qubits))

    @classmethod
    def from_vector(cls, vec: BitVec) -> 'PauliOp':
        """Split a length-2N column (z rows first) into a Pauli."""
        if vec.length % 2:
            raise ShapeError(f"symplectic vector must have even length, got {vec.length}")
        n = vec.length // 2
        mask = (1 << n) - 1
        return cls(n, BitVec(n, vec.bits & mask), BitVec(n, vec.bits >> n))

    def to_vector(self) -> BitVec:
        return BitVec(2 * self.n_qubits, self.z_part.bits | (self.x_part.bits << self.n_qubits))

    def letter(self, qubit: int) -> str:
        return _BITS_TO_LETTER[(self.z_part[qubit], self.x_part[qubit])]

    def label(self) -> str:
        return ''.join(self.letter(q) for q in range(1, self.n_qubits + 1))

    @property
    def weight(self) -> int:
        return BitVec(self.n_qubits, self.z_part.bits | self.x_part.bits).weight

    def support(self) -> Tuple[int, ...]:
        return BitVec(self.n_qubits, self.z_part.bits | self.x_part.bits).support()

    def __mul__(self, other: 'PauliOp') -> 'PauliOp':
        """Product up to phase."""
        if self.n_qubits != other.n_qubits:
            raise ShapeError(f"qubit count mismatch: {self.n_qubits} vs {other.n_qubits}")
        return PauliOp(self.n_qubits, self.z_part + other.z_part, self.x_part + other.x_part)

    def commutes_with(self, other: 'PauliOp') -> bool:
        return symplectic_product(self, other) == 0

    def __str__(self) -> str:
        return self.label()


def pauli_encode(label: str) -> PauliOp:
    """Encode a string of I/X/Y/Z letters, qubit 1 first."""
    z_bits, x_bits = [], []
    for position, letter in enumerate(label.strip().upper(), start=1):
        if letter not in _LETTER_TO_BITS:
            raise PauliParseError(f"invalid Pauli letter {letter!r} at position {position}")
        z, x = _LETTER_TO_BITS[letter]
        z_bits.append(z)
        x_bits.append(x)
    return PauliOp(len(z_bits), BitVec.from_bits(z_bits), BitVec.from_bits(x_bits))


def pauli_label(op: PauliOp) -> str:
    return op.label()


def symplectic_product(a: PauliOp, b: PauliOp) -> int:
    """a^T J b mod 2; zero exactly when the operators commute."""
    if a.n_qubits != b.n_qubits:
        raise ShapeError(f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}")
    return a.z_part.dot(b.x_part) ^ a.x_part.dot(b.z_part)


@dataclass(frozen=True)
class Tableau:
    """An ordered list of Pauli generators, read as the columns of S."""

    n_qubits: int
    generators: Tuple[PauliOp, ...]

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))
        for k, gen in enumerate(self.generators, start=1):
            if gen.n_qubits != self.n_qubits:
                raise ShapeError(f"generator {k} acts on {gen.n_qubits} qubits, expected {self.n_qubits}")

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    # -- matrix views -------------------------------------------------------

    def to_matrix(self) -> BitMat:
        return BitMat.from_columns([g.to_vector() for g in self.generators], rows=2 * self.n_qubits)

    @classmethod
    def from_matrix(cls, m: BitMat) -> 'Tableau':
        if m.rows % 2:
            raise ShapeError(f"tableau matrix needs an even row count, got {m.rows}")
        return cls(m.rows // 2, tuple(PauliOp.from_vector(col) for col in m.columns()))

    def z_block(self) -> BitMat:
        return BitMat.from_columns([g.z_part for g in self.generators], rows=self.n_qubits)

    def x_block(self) -> BitMat:
        return BitMat.from_columns([g.x_part for g in self.generators], rows=self.n_qubits)

    def rank(self) -> int:
        return gf2_rank(self.to_matrix())

    def commutation_matrix(self) -> BitMat:
        """Pairwise symplectic products, entry (a, b) for generators a and b."""
        size = self.n_generators
        rows = []
        for a in self.generators:
            packed = 0
            for k, b in enumerate(self.generators):
                if symplectic_product(a, b):
                    packed |= 1 << k
            rows.append(packed)
        return BitMat(size, size, tuple(rows))

    def is_self_orthogonal(self) -> bool:
        return self.commutation_matrix().is_zero()

    def is_graph_form(self) -> bool:
        """x-block is the identity and the z-block is a simple-graph adjacency."""
        if self.n_generators != self.n_qubits:
            return False
        z_block = self.z_block()
        return (
            self.x_block() == BitMat.identity(self.n_qubits)
            and z_block.is_symmetric()
            and z_block.has_zero_diagonal()
        )

    # -- transformations ----------------------------------------------------

    def hadamard_conjugate(self, subset: Iterable[int]) -> 'Tableau':
        """Swap the z and x bits of every generator on the given 1-based qubits."""
        mask = 0
        for q in subset:
            if not 1 <= q <= self.n_qubits:
                raise LatticeIndexError(f"qubit {q} outside 1..{self.n_qubits}")
            mask |= 1 << (q - 1)
        keep = ~mask
        conjugated = []
        for g in self.generators:
            z, x = g.z_part.bits, g.x_part.bits
            conjugated.append(PauliOp(
                self.n_qubits,
                BitVec(self.n_qubits, (z & keep) | (x & mask)),
                BitVec(self.n_qubits, (x & keep) | (z & mask)),
            ))
        return Tableau(self.n_qubits, tuple(conjugated))

    def right_multiply(self, r: BitMat) -> 'Tableau':
        """Replace the generators by the columns of S r; r must be invertible."""
        if r.rows != self.n_generators or not r.is_square():
            raise ShapeError(
                f"basis change must be {self.n_generators}x{self.n_generators}, got {r.rows}x{r.cols}"
            )
        if not r.is_invertible():
            raise NotInvertibleError(f"basis change has rank {r.rank()} < {r.rows}")
        return Tableau.from_matrix(gf2_matmul(self.to_matrix(), r))

    def replace_generator(self, index: int, op: PauliOp) -> 'Tableau':
        if not 1 <= index <= self.n_generators:
            raise LatticeIndexError(f"generator {index} outside 1..{self.n_generators}")
        if op.n_qubits != self.n_qubits:
            raise ShapeError(f"replacement acts on {op.n_qubits} qubits, expected {self.n_qubits}")
        gens = list(self.generators)
        gens[index - 1] = op
        return Tableau(self.n_qubits, tuple(gens))

    def permute(self, order: Sequence[int]) -> 'Tableau':
        """Reorder generators: new generator k is old generator order[k-1]."""
        if sorted(order) != list(range(1, self.n_generators + 1)):
            raise ShapeError(f"not a permutation of 1..{self.n_generators}")
        return Tableau(self.n_qubits, tuple(self.generators[k - 1] for k in order))

    # -- export -------------------------------------------------------------

    def labels(self) -> List[str]:
        return [g.label() for g in self.generators]

    def to_dict(self) -> Dict:
        return {
            'n_qubits': self.n_qubits,
            'generators': [{'z': g.z_part.dump(), 'x': g.x_part.dump()} for g in self.generators],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'Tableau':
        gens = tuple(
            PauliOp(data['n_qubits'], BitVec.from_string(g['z']), BitVec.from_string(g['x']))
            for g in data['generators']
        )
        return cls(data['n_qubits'], gens)

    def dump(self) -> str:
        """The 2N x M character grid of S."""
        return self.to_matrix().dump()


def hadamard_conjugate(t: Tableau, subset: Iterable[int]) -> Tableau:
    return t.hadamard_conjugate(subset)


def right_multiply(t: Tableau, r: BitMat) -> Tableau:
    return t.right_multiply(r)
