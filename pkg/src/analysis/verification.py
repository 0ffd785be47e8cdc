"""
Verification suites behind the `verify` command.

Each suite returns a list of checks; the report is
{suite, status, checks: [{check, status, witness}]} and passes only when every
check does.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from config.settings import AMPLITUDE_TOLERANCE, DEFAULT_SEED, ENCODER_SAMPLES
from src.errors import SizeError
from src.graphs.graph_states import Adjacency, Graph, graph_state, half_graph, product_state, star_graph
from src.lattice.toric import LatticeParams
from src.reduction.decomposition import decompose_adjacency
from src.reduction.equivalence import EquivalenceChecker
from src.reduction.standard_form import closed_form_adjacency, expected_edge_count, reduce_to_graph
from src.simulation.distance import DistanceChecker, m_copy_ghz_code
from src.simulation.reference import encoder_input_state, encoder_target_state, mstar_target_state
from src.simulation.simulator import StatevectorSimulator
from src.simulation.statevector import StateVec
from src.synthesis.circuit import Circuit
from src.synthesis.synthesizer import (
    CircuitSynthesizer,
    half_depth,
    star_depth,
    toric_depth_bound,
)

SUITES = ('pipeline', 'state', 'distance', 'encode', 'all')
FAULTS = ('adjacency',)
PASS, FAIL = 'pass', 'fail'


@dataclass
class CheckResult:
    check: str
    status: str
    witness: Any = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict:
        return {'check': self.check, 'status': self.status, 'witness': self.witness}


@dataclass
class VerificationReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict:
        return {'suite': self.suite, 'status': self.status, 'checks': [c.to_dict() for c in self.checks]}


def _check(name: str, ok: bool, witness: Any = None) -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, witness)


def _max_gap(a: StateVec, b: StateVec) -> float:
    return float(np.max(np.abs(a.amplitudes - b.amplitudes)))


class Verifier:
    def __init__(self, inject_fault: Optional[str] = None, tol: float = AMPLITUDE_TOLERANCE):
        self.logger = logging.getLogger(__name__)
        if inject_fault is not None and inject_fault not in FAULTS:
            raise ValueError(f"unknown fault {inject_fault!r}, expected one of {FAULTS}")
        self.inject_fault = inject_fault
        self.tol = tol
        self.simulator = StatevectorSimulator()
        self.synthesizer = CircuitSynthesizer()

    def _adjacency(self, p: LatticeParams) -> Adjacency:
        adjacency, _ = reduce_to_graph(p)
        if self.inject_fault == 'adjacency':
            self.logger.warning(f"Injecting fault: toggling edge (1,2) of the L={p.L} adjacency")
            adjacency = adjacency.toggled(1, 2)
        return adjacency

    # -- suites ---------------------------------------------------------------

    def pipeline_checks(self, L: int) -> List[CheckResult]:
        """Pipeline against closed form, decomposition and depth counts for every size 2..L."""
        checks = []
        for size in range(2, L + 1):
            p = LatticeParams(size)
            adjacency = self._adjacency(p)
            closed = closed_form_adjacency(p)
            diff = (adjacency + closed).edges()
            checks.append(_check(f"pipeline_equals_closed_form_L{size}", not diff, {'differing_edges': diff[:5]}))
            checks.append(
                _check(
                    f"edge_count_L{size}",
                    adjacency.edge_count() == expected_edge_count(p),
                    {'edges': adjacency.edge_count(), 'expected': expected_edge_count(p)},
                )
            )
            try:
                decompose_adjacency(adjacency, p)
                checks.append(_check(f"decomposition_L{size}", True))
            except Exception as e:
                checks.append(_check(f"decomposition_L{size}", False, str(e)))
            depth = self.synthesizer.synth_toric(p).depth_report().non_h
            bound = toric_depth_bound(p)
            checks.append(_check(f"toric_depth_L{size}", depth <= bound, {'non_h': depth, 'bound': bound}))
        for m in range(2, 17):
            depth = self.synthesizer.synth_star(m).depth_report().non_h
            checks.append(_check(f"star_depth_m{m}", depth == star_depth(m), {'non_h': depth}))
        for n in range(1, 17):
            depth = self.synthesizer.synth_half(n).depth_report().non_h
            checks.append(_check(f"half_depth_n{n}", depth == half_depth(n), {'non_h': depth}))
        return checks

    def state_checks(self, L: int) -> List[CheckResult]:
        """Dense-simulation checks: LC equivalence, synthesized circuits against oracles, GHZ equivalence."""
        p = LatticeParams(L)
        checks = []
        report = EquivalenceChecker(self.simulator).verify(
            p, allow_large=L == 3, tol=self.tol, adjacency=self._adjacency(p)
        )
        passing = sum(1 for v in report.expectations.values() if abs(v - 1.0) <= self.tol)
        checks.append(
            _check(
                f"stabilizer_expectations_L{L}",
                report.stabilizers_ok,
                {'passing': passing, 'total': len(report.expectations)},
            )
        )
        checks.append(_check(f"reference_fidelity_L{L}", report.fidelity_ok, {'fidelity': report.fidelity}))
        checks.append(
            _check(
                f"entanglement_entropies_L{L}",
                report.entropies_ok,
                {'max_gap': max(report.entropy_gaps.values(), default=0.0)},
            )
        )

        for m in range(2, 11):
            gap = _max_gap(self.simulator.run(self.synthesizer.synth_star(m)), graph_state(star_graph(m)))
            checks.append(_check(f"star_circuit_m{m}", gap <= self.tol, {'max_gap': gap}))
        for n in range(1, 6):
            gap = _max_gap(self.simulator.run(self.synthesizer.synth_half(n)), graph_state(half_graph(n)))
            checks.append(_check(f"half_circuit_n{n}", gap <= self.tol, {'max_gap': gap}))
        toric = graph_state(Graph.from_adjacency(self._adjacency(p)))
        gap = _max_gap(self.simulator.run(self.synthesizer.synth_toric(p)), toric)
        checks.append(_check(f"toric_circuit_L{L}", gap <= self.tol, {'max_gap': gap}))

        for m in range(2, 9):
            star = graph_state(star_graph(m))
            rotated = self.simulator.apply_circuit(star, Circuit.hadamard_layer(m, [m - 1]))
            ghz = (product_state(m, '+') + product_state(m, '-')).scaled(1 / np.sqrt(2))
            gap = _max_gap(rotated, ghz)
            checks.append(_check(f"ghz_equivalence_m{m}", gap <= self.tol, {'max_gap': gap}))
        return checks

    def distance_checks(self, m: int) -> List[CheckResult]:
        checker = DistanceChecker(self.simulator)
        checks = []
        single = checker.kl_report(m_copy_ghz_code(m, copies=1), d_max=m, tol=self.tol)
        checks.append(_check(f"ghz_pair_distance_m{m}", single.distance == 1, single.to_dict()))
        copies = checker.kl_report(m_copy_ghz_code(m), d_max=m, tol=self.tol)
        checks.append(_check(f"m_copy_distance_m{m}", copies.distance == m, copies.to_dict()))
        return checks

    def encode_checks(self, L: int, samples: int = ENCODER_SAMPLES, seed: int = DEFAULT_SEED) -> List[CheckResult]:
        """Encoder output and its post-mstar intermediate state for seeded random inputs."""
        if samples < 1:
            raise SizeError(f"encoder check needs at least one sample, got {samples}")
        p = LatticeParams(L)
        rng = np.random.default_rng(seed)
        stages = self.synthesizer.encoder_stages(p)
        front = stages['ghz'].compose(stages['mstar'])
        encoder = front.compose(stages['mhalf'])
        worst_final, worst_mstar = 1.0, 1.0
        for _ in range(samples):
            raw = rng.normal(size=4) + 1j * rng.normal(size=4)
            coeffs = raw / np.linalg.norm(raw)
            start = encoder_input_state(p, coeffs)
            worst_mstar = min(
                worst_mstar, self.simulator.apply_circuit(start, front).fidelity(mstar_target_state(p, coeffs))
            )
            worst_final = min(
                worst_final, self.simulator.apply_circuit(start, encoder).fidelity(encoder_target_state(p, coeffs))
            )
        return [
            _check(
                f"encoder_mstar_stage_L{L}",
                worst_mstar >= 1 - self.tol,
                {'min_fidelity': worst_mstar, 'samples': samples},
            ),
            _check(
                f"encoder_output_L{L}",
                worst_final >= 1 - self.tol,
                {'min_fidelity': worst_final, 'samples': samples},
            ),
        ]

    def run(
        self, suite: str, L: int = 2, m: int = 3, samples: int = ENCODER_SAMPLES, seed: int = DEFAULT_SEED
    ) -> VerificationReport:
        """
        Run one suite, or all of them.

        Args:
            suite: One of pipeline, state, distance, encode, all
            L: Lattice size for the lattice suites
            m: GHZ size for the distance suite
            samples: Random encoder inputs
            seed: Seed for the encoder inputs
        """
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
        runners: Dict[str, Callable[[], List[CheckResult]]] = {
            'pipeline': lambda: self.pipeline_checks(L),
            'state': lambda: self.state_checks(L),
            'distance': lambda: self.distance_checks(m),
            'encode': lambda: self.encode_checks(L, samples, seed),
        }
        selected = [s for s in SUITES[:-1] if suite in (s, 'all')]
        report = VerificationReport(suite)
        for name in selected:
            try:
                report.checks.extend(runners[name]())
            except Exception as e:
                self.logger.error(f"Error running {name} suite: {str(e)}")
                report.checks.append(_check(f"{name}_suite", False, str(e)))
        self.logger.info(
            f"Suite {suite}: {len(report.checks) - len(report.failures())}/{len(report.checks)} checks passed"
        )
        for failure in report.failures():
            self.logger.warning(f"Check {failure.check} failed: {failure.witness}")
        return report
