"""
Simple graphs, their binary quadratic forms and graph-state oracles.

Vertices are numbered 1..n. The graph state of G has amplitude
(-1)^f_G(q) / 2^(n/2) on basis state |q>, with f_G(q) = sum_{i<j} A_ij q_i q_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.algebra.gf2 import BitMat, BitVec
from src.algebra.symplectic import PauliOp
from src.errors import LatticeIndexError, ShapeError, SizeError
from src.simulation.statevector import StateVec, basis_table, check_size


Edge = Tuple[int, int]


@dataclass(frozen=True)
class Adjacency:
    """Symmetric, zero-diagonal GF(2) adjacency matrix on vertices 1..n."""

    n: int
    a: BitMat

    def __post_init__(self):
        if self.a.shape != (self.n, self.n):
            raise ShapeError(f"adjacency of {self.n} vertices must be {self.n}x{self.n}, got {self.a.shape}")
        if not self.a.is_symmetric():
            raise ShapeError('adjacency matrix is not symmetric')
        if not self.a.has_zero_diagonal():
            raise ShapeError('adjacency matrix has a nonzero diagonal')

    @classmethod
    def empty(cls, n: int) -> 'Adjacency':
        return cls(n, BitMat.zeros(n, n))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> 'Adjacency':
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise LatticeIndexError(f"edge ({u}, {v}) outside 1..{n}")
            if u == v:
                raise ShapeError(f"self-loop on vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return cls(n, BitMat(n, n, tuple(rows)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.a.get(u, v))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.a.row(v).support()

    def degree(self, v: int) -> int:
        return self.a.row(v).weight

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(1, self.n + 1)), default=0)

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(1, self.n + 1) for v in self.neighbors(u) if v > u]

    def edge_count(self) -> int:
        return self.a.nonzero_count() // 2

    def __add__(self, other: 'Adjacency') -> 'Adjacency':
        return Adjacency(self.n, self.a + other.a)

    def overlap(self, other: 'Adjacency') -> 'Adjacency':
        """Edges present in both graphs."""
        return Adjacency(self.n, self.a & other.a)

    def toggled(self, u: int, v: int) -> 'Adjacency':
        """Copy with edge (u, v) flipped."""
        rows = list(self.a.data)
        rows[u - 1] ^= 1 << (v - 1)
        rows[v - 1] ^= 1 << (u - 1)
        return Adjacency(self.n, BitMat(self.n, self.n, tuple(rows)))

    def to_dict(self) -> Dict:
        return {'n': self.n, 'edges': [[u, v] for u, v in self.edges()]}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'Adjacency':
        return cls.from_edges(data['n'], [tuple(e) for e in data['edges']])


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: Adjacency

    def __post_init__(self):
        if self.adjacency.n != self.n:
            raise ShapeError(f"graph on {self.n} vertices given adjacency on {self.adjacency.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> 'Graph':
        return cls(n, Adjacency.from_edges(n, edges))

    @classmethod
    def from_adjacency(cls, adjacency: Adjacency) -> 'Graph':
        return cls(adjacency.n, adjacency)

    def edges(self) -> List[Edge]:
        return self.adjacency.edges()

    def edge_count(self) -> int:
        return self.adjacency.edge_count()

    def degree(self, v: int) -> int:
        return self.adjacency.degree(v)

    def stabilizer(self, v: int) -> PauliOp:
        """S_v = X_v prod_{u in N(v)} Z_u."""
        return PauliOp(
            self.n,
            BitVec.from_support(self.n, self.adjacency.neighbors(v)),
            BitVec.from_support(self.n, [v]),
        )

    def stabilizers(self) -> List[PauliOp]:
        return [self.stabilizer(v) for v in range(1, self.n + 1)]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges())
        return graph

    def edge_list_text(self) -> str:
        """One 'u v' line per edge."""
        return '\n'.join(f"{u} {v}" for u, v in self.edges())

    def to_dot(
        self,
        name: str = 'G',
        labels: Optional[Mapping[int, str]] = None,
        edge_colors: Optional[Mapping[Edge, str]] = None,
    ) -> str:
        """Graphviz DOT text; edge_colors is keyed by (u, v) with u < v."""
        lines = [f"graph {name} {{"]
        for v in range(1, self.n + 1):
            label = labels[v] if labels and v in labels else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for u, v in self.edges():
            color = edge_colors.get((u, v)) if edge_colors else None
            attr = f' [color="{color}"]' if color else ''
            lines.append(f"  {u} -- {v}{attr};")
        lines.append('}')
        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class QuadraticForm:
    graph: Graph

    def evaluate(self, q: BitVec) -> int:
        return quad_form_eval(self, q)

    def values(self) -> np.ndarray:
        """f_G over every basis state, ordered by amplitude index."""
        n = self.graph.n
        check_size(n)
        table = basis_table(n)
        f = np.zeros(2 ** n, dtype=np.uint8)
        for u, v in self.graph.edges():
            f ^= table[:, u - 1] & table[:, v - 1]
        return f


def star_graph(m: int, center: Optional[int] = None) -> Graph:
    """m vertices, center joined to every other vertex; center defaults to m."""
    if m < 2:
        raise SizeError(f"star graph needs m >= 2, got {m}")
    center = m if center is None else center
    if not 1 <= center <= m:
        raise LatticeIndexError(f"center {center} outside 1..{m}")
    return Graph.from_edges(m, [(min(v, center), max(v, center)) for v in range(1, m + 1) if v != center])


def half_graph(n: int) -> Graph:
    """Balanced bipartite graph: x_i is vertex i, y_j is vertex n + j, edge iff i <= j."""
    if n < 1:
        raise SizeError(f"half graph needs n >= 1, got {n}")
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(1, n + 1) for j in range(i, n + 1)])


def quad_form_eval(f: QuadraticForm, q: BitVec) -> int:
    if q.length != f.graph.n:
        raise ShapeError(f"basis state of length {q.length} for a graph on {f.graph.n} vertices")
    rows = f.graph.adjacency.a.data
    # every edge inside the support is counted from both endpoints
    doubled = sum(BitVec(q.length, rows[v - 1] & q.bits).weight for v in q.support())
    return (doubled // 2) & 1


def graph_state_amplitude(g: Graph, basis: BitVec) -> float:
    sign = -1.0 if quad_form_eval(QuadraticForm(g), basis) else 1.0
    return sign / np.sqrt(2.0 ** g.n)


def graph_state(g: Graph) -> StateVec:
    """The full graph-state oracle, every amplitude at once."""
    f = QuadraticForm(g).values()
    amps = (1.0 - 2.0 * f.astype(np.float64)) / np.sqrt(2.0 ** g.n)
    return StateVec(g.n, amps.astype(np.complex128))


def ghz_reference(m: int, sign: int = 1) -> StateVec:
    """(|0^m> + sign |1^m>) / sqrt(2)."""
    if m < 1:
        raise SizeError(f"GHZ state needs m >= 1, got {m}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    check_size(m)
    amps = np.zeros(2 ** m, dtype=np.complex128)
    amps[0] = 1 / np.sqrt(2)
    amps[-1] = sign / np.sqrt(2)
    return StateVec(m, amps)


def product_state(n: int, letter: str) -> StateVec:
    """|+>^n or |->^n."""
    check_size(n)
    single = {'+': np.array([1, 1]), '-': np.array([1, -1])}[letter] / np.sqrt(2)
    amps = np.ones(1, dtype=np.complex128)
    for _ in range(n):
        amps = np.kron(amps, single)
    return StateVec(n, amps)


def relabel(g: Graph, vertices: Sequence[int], n: int) -> Adjacency:
    """Embed g into n vertices, sending vertex k of g to vertices[k - 1]."""
    if len(vertices) != g.n:
        raise ShapeError(f"{len(vertices)} target vertices for a graph on {g.n}")
    return Adjacency.from_edges(n, [(vertices[u - 1], vertices[v - 1]) for u, v in g.edges()])
