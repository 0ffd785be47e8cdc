"""
Graph-state preparation circuits.

Every synthesizer returns H on the graph's qubits followed by a diagonal
network. Star graphs use a CX parity tree that folds the leaves into the
last leaf, one CZ with the center, and the mirrored tree. Half graphs add
their quadratic form level by level from block parities of both sides.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from src.errors import SizeError
from src.graphs.graph_states import Graph
from src.lattice.toric import LatticeParams, index_of
from src.reduction.decomposition import component_layout
from src.synthesis.circuit import Circuit, Gate, Layer

SCHEDULES = ('deferred', 'per_level')


def parity_levels(n: int) -> List[List[Tuple[int, int]]]:
    """
    CX pairs (control, target) on registers 1..n, one list per level.

    Level d pairs register i = 2^(d-1) mod 2^d with target min(i + 2^(d-1), n).
    After all ceil(log2 n) levels register n holds the parity of all n inputs.
    """
    if n < 1:
        raise SizeError(f"parity network needs n >= 1, got {n}")
    levels = []
    for d in range(1, (n - 1).bit_length() + 1):
        step = 1 << (d - 1)
        pairs = []
        for i in range(step, n + 1, 2 * step):
            t = min(i + step, n)
            if t != i:
                pairs.append((i, t))
        levels.append(pairs)
    return levels


def _cx_layer(pairs: Sequence[Tuple[int, int]], wires: Sequence[int]) -> Layer:
    return tuple(Gate.cx(wires[i - 1], wires[t - 1]) for i, t in pairs)


def star_network(wires: Sequence[int]) -> List[Layer]:
    """Diagonal part of a star-graph circuit on wires listed leaves first, center last."""
    m = len(wires)
    if m < 2:
        raise SizeError(f"star graph needs m >= 2, got {m}")
    leaves = wires[:-1]
    compute = [_cx_layer(pairs, leaves) for pairs in parity_levels(m - 1)]
    return compute + [(Gate.cz(leaves[-1], wires[-1]),)] + list(reversed(compute))


def half_network(x_wires: Sequence[int], y_wires: Sequence[int], schedule: str = 'deferred') -> List[Layer]:
    """Diagonal part of a half-graph circuit: phase (-1)^(sum_{i<=j} q_i p_j)."""
    n = len(x_wires)
    if n < 1 or len(y_wires) != n:
        raise SizeError(f"half graph needs two sides of equal size >= 1, got {len(x_wires)} and {len(y_wires)}")
    if schedule not in SCHEDULES:
        raise ValueError(f"unknown schedule {schedule!r}, expected one of {SCHEDULES}")

    levels = parity_levels(n)

    def cx_level(pairs):
        return _cx_layer(pairs, x_wires) + _cx_layer(pairs, y_wires)

    def cz_level(pairs):
        return tuple(Gate.cz(x_wires[i - 1], y_wires[t - 1]) for i, t in pairs)

    layers: List[Layer] = [tuple(Gate.cz(x, y) for x, y in zip(x_wires, y_wires))]
    if schedule == 'deferred':
        compute = []
        for d, pairs in enumerate(levels, start=1):
            layers.append(cz_level(pairs))
            if d < len(levels):
                compute.append(cx_level(pairs))
                layers.append(compute[-1])
        layers.extend(reversed(compute))
    else:
        for k, pairs in enumerate(levels):
            compute = [cx_level(levels[d]) for d in range(k)]
            layers.extend(compute)
            layers.append(cz_level(pairs))
            layers.extend(reversed(compute))
    return layers


class CircuitSynthesizer:
    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def naive_graph_circuit(self, g: Graph) -> Circuit:
        """H on every qubit, then one CZ per edge packed greedily into layers."""
        try:
            line = nx.line_graph(g.to_networkx())
            colors = nx.greedy_color(line, strategy='largest_first') if line.number_of_nodes() else {}
            layers: Dict[int, List[Gate]] = {}
            for (u, v), color in colors.items():
                layers.setdefault(color, []).append(Gate.cz(min(u, v) - 1, max(u, v) - 1))
            cz_layers = tuple(tuple(sorted(layers[c], key=lambda gate: gate.qubits)) for c in sorted(layers))
            circuit = Circuit.hadamard_layer(g.n).compose(Circuit(g.n, cz_layers))
            self.logger.debug(f"naive circuit for {g.edge_count()} edges: depth {circuit.depth}")
            return circuit
        except Exception as e:
            self.logger.error(f"Error building naive graph circuit: {str(e)}")
            raise

    def synth_star(self, m: int) -> Circuit:
        """Star graph on m qubits with center m."""
        try:
            wires = list(range(m))
            circuit = Circuit.hadamard_layer(m).compose(Circuit(m, tuple(star_network(wires))))
            self.logger.info(f"Synthesized star m={m}: {circuit.depth_report().non_h} non-H layers")
            return circuit
        except Exception as e:
            self.logger.error(f"Error synthesizing star circuit for m={m}: {str(e)}")
            raise

    def synth_half(self, n: int, schedule: str = 'deferred') -> Circuit:
        """
        Half graph on 2n qubits: x_i on wire i - 1, y_j on wire n + j - 1.

        Args:
            n: Size of each side
            schedule: 'deferred' reuses parities across levels, 'per_level' recomputes them
        """
        try:
            x_wires = list(range(n))
            y_wires = list(range(n, 2 * n))
            network = half_network(x_wires, y_wires, schedule)
            circuit = Circuit.hadamard_layer(2 * n).compose(Circuit(2 * n, tuple(network)))
            self.logger.info(f"Synthesized half n={n} ({schedule}): {circuit.depth_report().non_h} non-H layers")
            return circuit
        except Exception as e:
            self.logger.error(f"Error synthesizing half circuit for n={n}: {str(e)}")
            raise

    def star_layers(self, p: LatticeParams) -> Circuit:
        """All 2L star components of mstar, merged into shared layers."""
        layout = component_layout(p)
        circuit = Circuit(p.n_qubits)
        for vertices in layout.stars:
            circuit = circuit.parallel(Circuit(p.n_qubits, tuple(star_network([v - 1 for v in vertices]))))
        return circuit

    def half_layers(self, p: LatticeParams, group: str, schedule: str = 'deferred') -> Circuit:
        """All L half components of mhalf1 or mhalf2, merged into shared layers."""
        layout = component_layout(p)
        components = {'mhalf1': layout.half1, 'mhalf2': layout.half2}[group]
        circuit = Circuit(p.n_qubits)
        for x_side, y_side in components:
            network = half_network([v - 1 for v in x_side], [v - 1 for v in y_side], schedule)
            circuit = circuit.parallel(Circuit(p.n_qubits, tuple(network)))
        return circuit

    def synth_toric(self, p: LatticeParams, schedule: str = 'deferred') -> Circuit:
        """H on all 2L^2 qubits, then the mstar, mhalf1 and mhalf2 networks."""
        try:
            circuit = (
                Circuit.hadamard_layer(p.n_qubits)
                .compose(self.star_layers(p))
                .compose(self.half_layers(p, 'mhalf1', schedule))
                .compose(self.half_layers(p, 'mhalf2', schedule))
            )
            self.logger.info(f"Synthesized toric L={p.L}: {circuit.depth_report().non_h} non-H layers")
            return circuit
        except Exception as e:
            self.logger.error(f"Error synthesizing toric circuit for L={p.L}: {str(e)}")
            raise

    def encoder_stages(self, p: LatticeParams) -> Dict[str, Circuit]:
        """
        The three encoder stages, each on all 2L^2 qubits.

        The data qubits sit at (L, 1, x) and (1, 1, y). 'ghz' copies each onto the
        other star centers of its kind, 'mstar' turns every center into a star-graph
        state with the copied Z on its center, 'mhalf' adds the half-graph phases.
        """
        try:
            n = p.n_qubits
            L = p.L
            x_group = [index_of(L, j, 'x', p) - 1 for j in range(2, L + 1)] + [index_of(L, 1, 'x', p) - 1]
            y_group = [index_of(1, j, 'y', p) - 1 for j in range(2, L + 1)] + [index_of(1, 1, 'y', p) - 1]
            ancillas = x_group[:-1] + y_group[:-1]
            fanout = Circuit(n, tuple(star_network(x_group))).parallel(Circuit(n, tuple(star_network(y_group))))
            ghz = Circuit.hadamard_layer(n, ancillas).compose(fanout).compose(Circuit.hadamard_layer(n, ancillas))
            mstar = Circuit.hadamard_layer(n).compose(self.star_layers(p))
            mhalf = self.half_layers(p, 'mhalf1').compose(self.half_layers(p, 'mhalf2'))
            return {'ghz': ghz, 'mstar': mstar, 'mhalf': mhalf}
        except Exception as e:
            self.logger.error(f"Error building encoder stages for L={p.L}: {str(e)}")
            raise

    def synth_encoder(self, p: LatticeParams) -> Circuit:
        stages = self.encoder_stages(p)
        circuit = stages['ghz'].compose(stages['mstar']).compose(stages['mhalf'])
        self.logger.info(f"Synthesized encoder L={p.L}: depth {circuit.depth}")
        return circuit


def star_depth(m: int) -> int:
    """Non-H depth of synth_star(m)."""
    return 2 * (m - 2).bit_length() + 1


def half_depth(n: int, schedule: str = 'deferred') -> int:
    """Non-H depth of synth_half(n)."""
    levels = (n - 1).bit_length()
    if schedule == 'per_level':
        return 1 + levels * levels
    return 1 if levels == 0 else 3 * levels - 1


def toric_depth_bound(p: LatticeParams) -> int:
    return star_depth(p.L) + 2 * half_depth(p.L - 1)


_default = CircuitSynthesizer()
naive_graph_circuit = _default.naive_graph_circuit
synth_star = _default.synth_star
synth_half = _default.synth_half
synth_toric = _default.synth_toric
encoder_stages = _default.encoder_stages
synth_encoder = _default.synth_encoder
