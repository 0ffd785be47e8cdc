"""
Reduction of the toric code tableau to graph standard form (A | I).

The stabilizer group is left unchanged by invertible column operations, so the
pipeline right-multiplies the star and plaquette blocks by basis changes that
zero one dependent column each, swaps the two zero columns for the string
operators, conjugates the R2 qubits with Hadamards and finally sorts the
generators so that the x-block becomes the identity. The z-block left over is
the adjacency matrix of the toric graph.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Tuple

import numpy as np

from src.algebra.gf2 import BitMat, block_diag
from src.algebra.symplectic import Tableau
from src.errors import PipelineInvariantError
from src.graphs.graph_states import Adjacency
from src.lattice.toric import (
    LatticeParams,
    QubitCoord,
    all_coords,
    build_toric_tableau,
    qubit_index,
    string_operators,
    wrap,
)

STAGES = (
    'initial',
    'star_R',
    'star_T',
    'star_string',
    'plaquette_R',
    'plaquette_T',
    'plaquette_string',
    'hadamard',
    'permuted',
)


def theta(a: int, b: int) -> int:
    """Step function: 1 if a <= b else 0."""
    return 1 if a <= b else 0


def site_column(i: int, j: int, p: LatticeParams) -> int:
    """Column of site (i, j) inside the star or plaquette block, 1-based."""
    return i + (j - 1) * p.L


def _site_matrix(p: LatticeParams, entry: Callable[[int, int, int, int], bool]) -> BitMat:
    """L^2 x L^2 matrix with entry(k, n, i, j) at row (k, n), column (i, j)."""
    size = p.n_sites
    arr = np.zeros((size, size), dtype=np.uint8)
    sites = [(i, j) for j in range(1, p.L + 1) for i in range(1, p.L + 1)]
    for k, n in sites:
        for i, j in sites:
            if entry(k, n, i, j):
                arr[site_column(k, n, p) - 1, site_column(i, j, p) - 1] = 1
    return BitMat.from_array(arr)


def star_row_sum(p: LatticeParams) -> BitMat:
    """New star (i, j) = sum of old stars (k, j) with k >= i."""
    return _site_matrix(p, lambda k, n, i, j: i <= k and j == n)


def star_column_sum(p: LatticeParams) -> BitMat:
    """New star (1, j) = sum of old stars (1, n) with n >= j; other columns kept."""
    return _site_matrix(p, lambda k, n, i, j: i == k and (j <= n if i == 1 else j == n))


def plaquette_row_sum(p: LatticeParams) -> BitMat:
    """New plaquette (i, j) = sum of old plaquettes (k, j) with k <= i."""
    return _site_matrix(p, lambda k, n, i, j: k <= i and j == n)


def plaquette_column_sum(p: LatticeParams) -> BitMat:
    """New plaquette (L, j) = sum of old plaquettes (L, n) with n <= j; other columns kept."""
    L = p.L
    return _site_matrix(p, lambda k, n, i, j: i == k and (n <= j if i == L else n == j))


def star_string_mix(p: LatticeParams) -> BitMat:
    """After the string swap: new (1, j) = old (1, j+1) + old (1, 1) for j < L, new (1, L) = old (1, 1)."""
    L = p.L

    def entry(k, n, i, j):
        if i != 1:
            return k == i and n == j
        if k != 1:
            return False
        return n == 1 or (j < L and n == j + 1)

    return _site_matrix(p, entry)


def plaquette_string_mix(p: LatticeParams) -> BitMat:
    """After the string swap: new (L, 1) = old (L, L), new (L, j) = old (L, j-1) + old (L, L) for j >= 2."""
    L = p.L

    def entry(k, n, i, j):
        if i != L:
            return k == i and n == j
        if k != L:
            return False
        return n == L or (j >= 2 and n == j - 1)

    return _site_matrix(p, entry)


def hadamard_rows(p: LatticeParams) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """(R1, R2): R2 holds every (L, j, x) and every (i, j, y) with i >= 2."""
    r2 = set()
    for c in all_coords(p):
        if (c.d == 'x' and c.i == p.L) or (c.d == 'y' and c.i >= 2):
            r2.add(qubit_index(c, p))
    r1 = set(range(1, p.n_qubits + 1)) - r2
    return frozenset(r1), frozenset(r2)


@dataclass(frozen=True)
class ReductionTrace:
    params: LatticeParams
    rx: BitMat
    tx: BitMat
    rz: BitMat
    tz: BitMat
    sx: BitMat
    sz: BitMat
    replaced_star_col: Tuple[int, int]
    replaced_plaq_col: Tuple[int, int]
    r1_mask: FrozenSet[int]
    r2_mask: FrozenSet[int]
    col_perm: Tuple[int, ...]
    stages: Dict[str, Tableau] = field(default_factory=dict)

    def basis_changes(self) -> Dict[str, BitMat]:
        return {'Rx': self.rx, 'Tx': self.tx, 'Sx': self.sx, 'Rz': self.rz, 'Tz': self.tz, 'Sz': self.sz}

    def to_dict(self) -> Dict:
        return {
            'L': self.params.L,
            'replaced_star_col': list(self.replaced_star_col),
            'replaced_plaq_col': list(self.replaced_plaq_col),
            'r1': sorted(self.r1_mask),
            'r2': sorted(self.r2_mask),
            'col_perm': list(self.col_perm),
            'stages': list(self.stages),
        }


class ToricReducer:
    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def reduce_to_graph(self, p: LatticeParams, record_stages: bool = False) -> Tuple[Adjacency, ReductionTrace]:
        """
        Run the full standard-form pipeline on the toric code of side L.

        Args:
            p: Lattice parameters
            record_stages: Keep the tableau after every stage in the trace
        """
        try:
            self.logger.info(f"Reducing toric tableau to graph form for L={p.L} ({p.n_qubits} qubits)")
            stages: Dict[str, Tableau] = {}

            def record(name: str, t: Tableau) -> None:
                self.logger.debug(f"stage {name} done")
                if record_stages:
                    stages[name] = t

            tableau = build_toric_tableau(p)
            if not tableau.is_self_orthogonal():
                raise PipelineInvariantError('initial', 'toric generators do not commute')
            record('initial', tableau)

            s_alpha, s_beta = string_operators(p)
            eye = BitMat.identity(p.n_sites)
            rx, tx, sx = star_row_sum(p), star_column_sum(p), star_string_mix(p)
            rz, tz, sz = plaquette_row_sum(p), plaquette_column_sum(p), plaquette_string_mix(p)

            tableau = tableau.right_multiply(block_diag(rx, eye))
            record('star_R', tableau)
            tableau = tableau.right_multiply(block_diag(tx, eye))
            record('star_T', tableau)
            star_col = site_column(1, 1, p)
            self._expect_zero_column(tableau, star_col, 'star_T')
            tableau = tableau.replace_generator(star_col, s_beta)
            tableau = tableau.right_multiply(block_diag(sx, eye))
            record('star_string', tableau)

            tableau = tableau.right_multiply(block_diag(eye, rz))
            record('plaquette_R', tableau)
            tableau = tableau.right_multiply(block_diag(eye, tz))
            record('plaquette_T', tableau)
            plaq_col = p.n_sites + site_column(p.L, p.L, p)
            self._expect_zero_column(tableau, plaq_col, 'plaquette_T')
            tableau = tableau.replace_generator(plaq_col, s_alpha)
            tableau = tableau.right_multiply(block_diag(eye, sz))
            record('plaquette_string', tableau)

            r1, r2 = hadamard_rows(p)
            tableau = tableau.hadamard_conjugate(sorted(r2))
            record('hadamard', tableau)

            col_perm = self._identity_permutation(tableau)
            tableau = tableau.permute(col_perm)
            record('permuted', tableau)
            if not tableau.is_graph_form():
                raise PipelineInvariantError('permuted', 'tableau is not of the form (A | I)')

            adjacency = Adjacency(p.n_qubits, tableau.z_block())
            self.logger.info(f"Toric graph for L={p.L}: {adjacency.edge_count()} edges")
            trace = ReductionTrace(
                params=p,
                rx=rx,
                tx=tx,
                rz=rz,
                tz=tz,
                sx=sx,
                sz=sz,
                replaced_star_col=(1, 1),
                replaced_plaq_col=(p.L, p.L),
                r1_mask=r1,
                r2_mask=r2,
                col_perm=tuple(col_perm),
                stages=stages,
            )
            return adjacency, trace
        except Exception as e:
            self.logger.error(f"Error reducing toric tableau for L={p.L}: {str(e)}")
            raise

    @staticmethod
    def _expect_zero_column(tableau: Tableau, column: int, stage: str) -> None:
        gen = tableau.generators[column - 1]
        if gen.weight != 0:
            raise PipelineInvariantError(stage, f"column {column} should vanish but has weight {gen.weight}")

    @staticmethod
    def _identity_permutation(tableau: Tableau) -> List[int]:
        """Generator order that puts the X of qubit k on generator k."""
        owner: Dict[int, int] = {}
        for k, gen in enumerate(tableau.generators, start=1):
            support = gen.x_part.support()
            if len(support) != 1:
                raise PipelineInvariantError('hadamard', f"generator {k} has x-weight {len(support)}, expected 1")
            if support[0] in owner:
                raise PipelineInvariantError(
                    'hadamard', f"generators {owner[support[0]]} and {k} both carry X on qubit {support[0]}"
                )
            owner[support[0]] = k
        return [owner[q] for q in range(1, tableau.n_qubits + 1)]


def reduce_to_graph(p: LatticeParams, record_stages: bool = False) -> Tuple[Adjacency, ReductionTrace]:
    return ToricReducer().reduce_to_graph(p, record_stages)


def _closed_form_terms(r, m, row_y, i, j, col_y, L):
    """Four-term closed form for row (r, m) and column (i, j); works on scalars and numpy arrays."""
    row_x = row_y == 0
    col_x = col_y == 0
    same = m == j
    x_star = col_x & row_x & same & (((r == L) & (i <= L - 1)) ^ ((i == L) & (r <= L - 1)))
    y_star = col_y & row_y & same & (((i == 1) & (r >= 2)) ^ ((r == 1) & (i >= 2)))
    y_to_x = col_y & row_x & (same ^ (wrap(m - 1, L) == j)) & (r <= i - 1) & (i >= 2)
    x_to_y = col_x & row_y & (same ^ (wrap(j - 1, L) == m)) & (r >= i + 1) & (i <= L - 1)
    return x_star ^ y_star ^ y_to_x ^ x_to_y


def closed_form_entry(row: QubitCoord, col: QubitCoord, p: LatticeParams) -> int:
    """A entry for row (l, m, d2) and column (i, j, d1) from the closed form."""
    return int(_closed_form_terms(row.i, row.j, row.d == 'y', col.i, col.j, col.d == 'y', p.L))


def closed_form_adjacency(p: LatticeParams) -> Adjacency:
    """The toric graph adjacency evaluated entrywise from the closed form."""
    coords = list(all_coords(p))
    rows_i = np.array([c.i for c in coords])
    rows_j = np.array([c.j for c in coords])
    is_y = np.array([c.d == 'y' for c in coords])
    grid = _closed_form_terms(
        rows_i[:, None], rows_j[:, None], is_y[:, None],
        rows_i[None, :], rows_j[None, :], is_y[None, :],
        p.L,
    )
    return Adjacency(p.n_qubits, BitMat.from_array(grid.astype(np.uint8)))


def theta_identity_violations(L: int) -> List[Tuple[int, int]]:
    """Pairs (i, r) breaking theta(i+1, r) theta(i, L-1) == theta(i, r-1) theta(2, r)."""
    return [
        (i, r)
        for i in range(1, L + 1)
        for r in range(1, L + 1)
        if theta(i + 1, r) * theta(i, L - 1) != theta(i, r - 1) * theta(2, r)
    ]


def expected_edge_count(p: LatticeParams) -> int:
    return (p.L - 1) * p.L * (p.L + 2)
