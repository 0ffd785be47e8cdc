"""
Star and half-graph decomposition of the toric graph.

A = mstar + mhalf1 + mhalf2 with pairwise disjoint edge sets:
  mstar   2L stars on L vertices, centers (L, j, x) and (1, j, y)
  mhalf1  L half graphs joining (a, j, x) to (b + 1, j, y) for a <= b
  mhalf2  L half graphs joining (a, j + 1, x) to (b + 1, j, y) for a <= b
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from src.errors import DecompositionError
from src.graphs.graph_states import Adjacency, Edge, Graph, half_graph, relabel, star_graph
from src.lattice.toric import LatticeParams, QubitCoord, index_of, qubit_coord

logger = logging.getLogger(__name__)

LAYERS = ('mstar', 'mhalf1', 'mhalf2')
LAYER_COLORS = {'mstar': 'firebrick', 'mhalf1': 'royalblue', 'mhalf2': 'forestgreen'}

HalfComponent = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class ComponentLayout:
    """Qubit indices of every component in synthesis order."""

    params: LatticeParams
    stars: Tuple[Tuple[int, ...], ...]
    half1: Tuple[HalfComponent, ...]
    half2: Tuple[HalfComponent, ...]

    def x_stars(self) -> Tuple[Tuple[int, ...], ...]:
        return self.stars[: self.params.L]

    def y_stars(self) -> Tuple[Tuple[int, ...], ...]:
        return self.stars[self.params.L:]


def component_layout(p: LatticeParams) -> ComponentLayout:
    """Stars list their leaves then the center; half graphs list (x side, y side)."""
    L = p.L
    x_stars = [
        tuple(index_of(i, j, 'x', p) for i in range(1, L)) + (index_of(L, j, 'x', p),)
        for j in range(1, L + 1)
    ]
    y_stars = [
        tuple(index_of(i, j, 'y', p) for i in range(2, L + 1)) + (index_of(1, j, 'y', p),)
        for j in range(1, L + 1)
    ]
    y_side = [tuple(index_of(b + 1, j, 'y', p) for b in range(1, L)) for j in range(1, L + 1)]
    half1 = [
        (tuple(index_of(a, j, 'x', p) for a in range(1, L)), y_side[j - 1])
        for j in range(1, L + 1)
    ]
    half2 = [
        (tuple(index_of(a, j + 1, 'x', p) for a in range(1, L)), y_side[j - 1])
        for j in range(1, L + 1)
    ]
    return ComponentLayout(p, tuple(x_stars + y_stars), tuple(half1), tuple(half2))


def layer_adjacencies(p: LatticeParams) -> Dict[str, Adjacency]:
    """The three layers built directly from the component layout."""
    layout = component_layout(p)
    n = p.n_qubits
    star = star_graph(p.L)
    half = half_graph(p.L - 1)
    layers = {name: Adjacency.empty(n) for name in LAYERS}
    for vertices in layout.stars:
        layers['mstar'] = layers['mstar'] + relabel(star, vertices, n)
    for name, components in (('mhalf1', layout.half1), ('mhalf2', layout.half2)):
        for x_side, y_side in components:
            layers[name] = layers[name] + relabel(half, x_side + y_side, n)
    return layers


def _component_sizes(adjacency: Adjacency) -> List[int]:
    graph = Graph.from_adjacency(adjacency).to_networkx()
    return sorted(len(c) for c in nx.connected_components(graph) if len(c) > 1)


def decompose_adjacency(a: Adjacency, p: LatticeParams) -> Tuple[Adjacency, Adjacency, Adjacency]:
    """Split the toric adjacency into (mstar, mhalf1, mhalf2) and check the split."""
    try:
        layers = layer_adjacencies(p)
        mstar, mhalf1, mhalf2 = (layers[name] for name in LAYERS)

        for (name_a, layer_a), (name_b, layer_b) in (
            (('mstar', mstar), ('mhalf1', mhalf1)),
            (('mstar', mstar), ('mhalf2', mhalf2)),
            (('mhalf1', mhalf1), ('mhalf2', mhalf2)),
        ):
            shared = layer_a.overlap(layer_b).edge_count()
            if shared:
                raise DecompositionError(f"{name_a} and {name_b} share {shared} edges")

        total = mstar + mhalf1 + mhalf2
        if total != a:
            missing = (total + a).edges()
            raise DecompositionError(f"layers differ from the adjacency on {len(missing)} edges, first {missing[0]}")

        if _component_sizes(mstar) != [p.L] * (2 * p.L):
            raise DecompositionError(f"mstar components {_component_sizes(mstar)} are not 2L stars of size L")
        for name, layer in (('mhalf1', mhalf1), ('mhalf2', mhalf2)):
            if _component_sizes(layer) != [2 * (p.L - 1)] * p.L:
                raise DecompositionError(f"{name} components {_component_sizes(layer)} are not L halves")

        logger.info(
            f"Decomposed L={p.L} toric graph: mstar {mstar.edge_count()}, "
            f"mhalf1 {mhalf1.edge_count()}, mhalf2 {mhalf2.edge_count()} edges"
        )
        return mstar, mhalf1, mhalf2
    except Exception as e:
        logger.error(f"Error decomposing toric adjacency for L={p.L}: {str(e)}")
        raise


def coord_labels(p: LatticeParams) -> Dict[int, str]:
    return {n: str(qubit_coord(n, p)) for n in range(1, p.n_qubits + 1)}


def decomposition_dot(a: Adjacency, p: LatticeParams, name: str = 'toric') -> str:
    """DOT export of A with edges colored by decomposition layer."""
    layers = dict(zip(LAYERS, decompose_adjacency(a, p)))
    colors: Dict[Edge, str] = {}
    for layer_name, layer in layers.items():
        for edge in layer.edges():
            colors[edge] = LAYER_COLORS[layer_name]
    return Graph.from_adjacency(a).to_dot(name=name, labels=coord_labels(p), edge_colors=colors)


def center_coords(p: LatticeParams) -> List[QubitCoord]:
    """Star centers in layout order."""
    return [qubit_coord(stars[-1], p) for stars in component_layout(p).stars]
