from typing import Dict, List, Sequence
import json
import logging

import numpy as np
import pandas as pd

from src.graphs.graph_states import Graph, star_graph
from src.lattice.toric import LatticeParams
from src.reduction.standard_form import closed_form_adjacency
from src.synthesis.synthesizer import CircuitSynthesizer, half_depth, star_depth, toric_depth_bound

# line graphs of larger toric graphs get expensive
NAIVE_TORIC_MAX_L = 8


class DepthMetrics:
    def __init__(self, synthesizer: CircuitSynthesizer = None):
        self.logger = logging.getLogger(__name__)
        self.synthesizer = synthesizer or CircuitSynthesizer()

    def calculate_size_metrics(self, L: int) -> Dict:
        """
        Depths of every synthesized circuit for one lattice size.

        Args:
            L: Lattice side length
        """
        try:
            p = LatticeParams(L)
            toric = self.synthesizer.synth_toric(p).depth_report()
            metrics = {
                'L': L,
                'n_qubits': p.n_qubits,
                'log2_n': float(np.log2(p.n_qubits)),
                'star_depth': self.synthesizer.synth_star(L).depth_report().non_h,
                'half_depth': self.synthesizer.synth_half(L - 1).depth_report().non_h,
                'toric_depth': toric.non_h,
                'toric_bound': toric_depth_bound(p),
                'toric_cz': toric.gates_by_kind.get('cz', 0),
                'toric_cx': toric.gates_by_kind.get('cx', 0),
                'naive_star_depth': self.synthesizer.naive_graph_circuit(star_graph(L)).depth_report().non_h,
                'naive_toric_depth': self._naive_toric_depth(p),
            }
            self.logger.info(f"L={L}: toric non-H depth {metrics['toric_depth']} (bound {metrics['toric_bound']})")
            return metrics
        except Exception as e:
            self.logger.error(f"Error calculating depth metrics for L={L}: {str(e)}")
            raise

    def _naive_toric_depth(self, p: LatticeParams) -> float:
        """Greedy edge-coloring depth of the toric graph, NaN above NAIVE_TORIC_MAX_L."""
        if p.L > NAIVE_TORIC_MAX_L:
            return float('nan')
        graph = Graph.from_adjacency(closed_form_adjacency(p))
        return float(self.synthesizer.naive_graph_circuit(graph).depth_report().non_h)

    def scaling_table(self, sizes: Sequence[int]) -> pd.DataFrame:
        try:
            df = pd.DataFrame([self.calculate_size_metrics(L) for L in sizes])
            df['formula_star'] = [star_depth(L) for L in df['L']]
            df['formula_half'] = [half_depth(L - 1) for L in df['L']]
            return df
        except Exception as e:
            self.logger.error(f"Error building scaling table: {str(e)}")
            raise

    def analyze_scaling(self, df: pd.DataFrame) -> Dict:
        """
        Fit toric depth against log2 L and summarize the table.

        Args:
            df: Output of scaling_table
        """
        try:
            log_l = np.log2(df['L'].astype(float))
            analysis = {
                'sizes': [int(L) for L in df['L']],
                'max_depth': int(df['toric_depth'].max()),
                'within_bound': bool((df['toric_depth'] <= df['toric_bound']).all()),
                'log_fit': self._fit(log_l, df['toric_depth']),
                'depth_trend': self._calculate_trend(df['toric_depth'] / df['log2_n']),
            }
            return analysis
        except Exception as e:
            self.logger.error(f"Error analyzing depth scaling: {str(e)}")
            raise

    def _fit(self, x: pd.Series, y: pd.Series) -> Dict:
        """Least-squares line y = slope * x + intercept."""
        if len(x) < 2:
            return {'slope': None, 'intercept': None}
        slope, intercept = np.polyfit(x, y, 1)
        return {'slope': float(slope), 'intercept': float(intercept)}

    def _calculate_trend(self, series: pd.Series) -> str:
        """Direction of depth per log2 N: bounded growth shows up as stable or decreasing."""
        try:
            if len(series) < 2:
                return 'insufficient_data'

            slope = np.polyfit(range(len(series)), series, 1)[0]
            if slope > 0.1:
                return 'increasing'
            elif slope < -0.1:
                return 'decreasing'
            else:
                return 'stable'
        except Exception as e:
            self.logger.error(f"Error calculating trend: {str(e)}")
            return 'unknown'

    def to_records(self, df: pd.DataFrame) -> List[Dict]:
        """Plain JSON-ready rows; NaN becomes None."""
        return json.loads(df.to_json(orient='records'))
