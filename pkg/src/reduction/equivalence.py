"""
End-to-end local-Clifford equivalence check between the toric graph state and
the toric code state, at sizes small enough for dense simulation.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from config.settings import AMPLITUDE_TOLERANCE, DEFAULT_SEED
from src.graphs.graph_states import Adjacency, Graph, graph_state
from src.lattice.toric import LatticeParams
from src.reduction.standard_form import closed_form_adjacency, hadamard_rows, reduce_to_graph
from src.simulation.reference import toric_code_reference, toric_operators
from src.simulation.simulator import StatevectorSimulator
from src.synthesis.circuit import Circuit


@dataclass
class EquivalenceReport:
    L: int
    pipeline_matches_closed_form: bool
    expectations: Dict[str, float] = field(default_factory=dict)
    fidelity: float = 0.0
    entropy_gaps: Dict[str, float] = field(default_factory=dict)
    tol: float = AMPLITUDE_TOLERANCE

    @property
    def stabilizers_ok(self) -> bool:
        return bool(self.expectations) and all(abs(v - 1.0) <= self.tol for v in self.expectations.values())

    @property
    def fidelity_ok(self) -> bool:
        return self.fidelity >= 1.0 - self.tol

    @property
    def entropies_ok(self) -> bool:
        return all(gap <= self.tol for gap in self.entropy_gaps.values())

    @property
    def passed(self) -> bool:
        return self.pipeline_matches_closed_form and self.stabilizers_ok and self.fidelity_ok and self.entropies_ok

    def to_dict(self) -> Dict:
        return {
            'L': self.L,
            'passed': self.passed,
            'pipeline_matches_closed_form': self.pipeline_matches_closed_form,
            'expectations': self.expectations,
            'fidelity': self.fidelity,
            'entropy_gaps': self.entropy_gaps,
        }


def default_cuts(n_qubits: int, count: int = 6, seed: int = DEFAULT_SEED) -> List[List[int]]:
    """The first half, the even qubits, and a few seeded random proper subsets."""
    rng = np.random.default_rng(seed)
    cuts = [list(range(1, n_qubits // 2 + 1)), list(range(2, n_qubits + 1, 2))]
    while len(cuts) < count:
        size = int(rng.integers(1, n_qubits))
        cuts.append(sorted(int(q) for q in rng.choice(np.arange(1, n_qubits + 1), size=size, replace=False)))
    return cuts


class EquivalenceChecker:
    def __init__(self, simulator: Optional[StatevectorSimulator] = None):
        self.logger = logging.getLogger(__name__)
        self.simulator = simulator or StatevectorSimulator()

    def verify(
        self,
        p: LatticeParams,
        cuts: Optional[Sequence[Sequence[int]]] = None,
        allow_large: bool = False,
        tol: float = AMPLITUDE_TOLERANCE,
        adjacency: Optional[Adjacency] = None,
    ) -> EquivalenceReport:
        """
        Compare H on R2 applied to the toric graph state with the projected toric code state.

        Args:
            p: Lattice size (L = 2, or L = 3 with allow_large)
            cuts: Bipartitions whose entanglement entropies are compared
            allow_large: Forwarded to the reference construction
            tol: Absolute tolerance for expectations, fidelity and entropies
            adjacency: Graph to test in place of the pipeline output
        """
        try:
            if adjacency is None:
                adjacency, _ = reduce_to_graph(p)
            closed = closed_form_adjacency(p)
            report = EquivalenceReport(p.L, adjacency == closed, tol=tol)

            reference = toric_code_reference(p, allow_large=allow_large)
            graph = graph_state(Graph.from_adjacency(adjacency))
            _, r2 = hadamard_rows(p)
            rotated = self.simulator.apply_circuit(
                graph, Circuit.hadamard_layer(p.n_qubits, [q - 1 for q in r2])
            )

            for name, op in toric_operators(p).items():
                report.expectations[name] = float(self.simulator.pauli_expectation(rotated, op).real)
            report.fidelity = rotated.fidelity(reference)

            # single-qubit gates leave every bipartite entropy unchanged
            for cut in cuts or default_cuts(p.n_qubits):
                key = ','.join(str(q) for q in cut)
                gap = abs(
                    self.simulator.entanglement_entropy(graph, cut)
                    - self.simulator.entanglement_entropy(reference, cut)
                )
                report.entropy_gaps[key] = gap

            self.logger.info(
                f"Equivalence L={p.L}: pipeline {'ok' if report.pipeline_matches_closed_form else 'MISMATCH'}, "
                f"fidelity {report.fidelity:.12f}, passed={report.passed}"
            )
            return report
        except Exception as e:
            self.logger.error(f"Error verifying standard-form equivalence for L={p.L}: {str(e)}")
            raise


def verify_standard_form_equivalence(p: LatticeParams, allow_large: bool = False) -> EquivalenceReport:
    return EquivalenceChecker().verify(p, allow_large=allow_large)
