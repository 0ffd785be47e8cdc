"""
Star, plaquette and string operators of the toric code on an L x L periodic lattice.

Qubits sit on edges and are labelled (i, j, d) with rows i, columns j in 1..L
and direction d in {'x', 'y'}. The linear qubit index is
``i + (j - 1) * L + [d == 'y'] * L**2``, so all x-edges come before y-edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from src.algebra.symplectic import PauliOp, Tableau
from src.errors import LatticeIndexError, SizeError

DIRECTIONS = ('x', 'y')


@dataclass(frozen=True)
class LatticeParams:
    L: int

    def __post_init__(self):
        if not isinstance(self.L, int) or self.L < 2:
            raise SizeError(f"lattice side L must be an integer >= 2, got {self.L!r}")

    @property
    def n_qubits(self) -> int:
        return 2 * self.L * self.L

    @property
    def n_sites(self) -> int:
        return self.L * self.L


@dataclass(frozen=True)
class QubitCoord:
    i: int
    j: int
    d: str

    def __post_init__(self):
        if self.d not in DIRECTIONS:
            raise LatticeIndexError(f"direction must be 'x' or 'y', got {self.d!r}")

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.d})"


def wrap(k: int, L: int) -> int:
    """Periodic 1-based label: 0 maps to L and L + 1 maps to 1."""
    return (k - 1) % L + 1


def _check_site(i: int, j: int, p: LatticeParams) -> None:
    if not (1 <= i <= p.L and 1 <= j <= p.L):
        raise LatticeIndexError(f"site ({i}, {j}) outside 1..{p.L}")


def qubit_index(c: QubitCoord, p: LatticeParams) -> int:
    _check_site(c.i, c.j, p)
    return c.i + (c.j - 1) * p.L + (p.L * p.L if c.d == 'y' else 0)


def qubit_coord(n: int, p: LatticeParams) -> QubitCoord:
    """Inverse of qubit_index."""
    if not 1 <= n <= p.n_qubits:
        raise LatticeIndexError(f"qubit {n} outside 1..{p.n_qubits}")
    d = 'x' if n <= p.n_sites else 'y'
    offset = n - 1 - (p.n_sites if d == 'y' else 0)
    return QubitCoord(offset % p.L + 1, offset // p.L + 1, d)


def index_of(i: int, j: int, d: str, p: LatticeParams) -> int:
    """qubit_index of (wrap(i), wrap(j), d); labels outside 1..L wrap around."""
    return qubit_index(QubitCoord(wrap(i, p.L), wrap(j, p.L), d), p)


def all_coords(p: LatticeParams) -> Iterator[QubitCoord]:
    """Every qubit coordinate in increasing linear index."""
    for n in range(1, p.n_qubits + 1):
        yield qubit_coord(n, p)


def star_support(i: int, j: int, p: LatticeParams) -> Tuple[int, ...]:
    _check_site(i, j, p)
    return tuple(sorted((
        index_of(i - 1, j, 'x', p),
        index_of(i, j, 'x', p),
        index_of(i, j - 1, 'y', p),
        index_of(i, j, 'y', p),
    )))


def plaquette_support(i: int, j: int, p: LatticeParams) -> Tuple[int, ...]:
    _check_site(i, j, p)
    return tuple(sorted((
        index_of(i, j, 'x', p),
        index_of(i, j + 1, 'x', p),
        index_of(i, j, 'y', p),
        index_of(i + 1, j, 'y', p),
    )))


def build_star(i: int, j: int, p: LatticeParams) -> PauliOp:
    """X on the four edges meeting at vertex (i, j)."""
    return PauliOp.x_type(p.n_qubits, star_support(i, j, p))


def build_plaquette(i: int, j: int, p: LatticeParams) -> PauliOp:
    """Z on the four edges bounding face (i, j)."""
    return PauliOp.z_type(p.n_qubits, plaquette_support(i, j, p))


def string_operators(p: LatticeParams) -> Tuple[PauliOp, PauliOp]:
    """(S_alpha, S_beta): Z on every (l, 1, x) and X on every (l, L, y)."""
    s_alpha = PauliOp.z_type(p.n_qubits, [index_of(row, 1, 'x', p) for row in range(1, p.L + 1)])
    s_beta = PauliOp.x_type(p.n_qubits, [index_of(row, p.L, 'y', p) for row in range(1, p.L + 1)])
    return s_alpha, s_beta


def site_order(p: LatticeParams) -> List[Tuple[int, int]]:
    """Sites (i, j) in generator-column order c(i, j) = i + (j - 1) L."""
    return [(i, j) for j in range(1, p.L + 1) for i in range(1, p.L + 1)]


def build_toric_tableau(p: LatticeParams) -> Tableau:
    """All L^2 stars followed by all L^2 plaquettes, each in site_order."""
    stars = [build_star(i, j, p) for i, j in site_order(p)]
    plaquettes = [build_plaquette(i, j, p) for i, j in site_order(p)]
    return Tableau(p.n_qubits, tuple(stars + plaquettes))


def render_lattice(op: PauliOp, p: LatticeParams) -> str:
    """ASCII grid of an operator's letters: one x-edge row and one y-edge row per lattice row."""
    width = max(3, len(str(p.L)) + 2)
    header = ' ' * 6 + ''.join(f"j={j}".rjust(width + 1) for j in range(1, p.L + 1))
    lines = [header]
    for i in range(1, p.L + 1):
        for d in DIRECTIONS:
            cells = []
            for j in range(1, p.L + 1):
                letter = op.letter(qubit_index(QubitCoord(i, j, d), p))
                cells.append(('.' if letter == 'I' else letter).rjust(width + 1))
            prefix = f"i={i}".ljust(4) if d == 'x' else ' ' * 4
            lines.append(f"{prefix}{d} " + ''.join(cells))
    return '\n'.join(lines)
