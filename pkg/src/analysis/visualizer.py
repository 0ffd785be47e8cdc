import logging
from typing import Dict, List

import pandas as pd
import plotly.graph_objects as go


class DepthVisualizer:
    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def create_depth_scaling_plot(self, records: List[Dict]) -> go.Figure:
        """
        Line plot of synthesized non-H depths against lattice size, with the additive bound.

        Args:
            records: Rows of the depth-scaling table
        """
        try:
            df = pd.DataFrame(records)

            fig = go.Figure()
            for column, name in (
                ('toric_depth', 'Toric (synthesized)'),
                ('toric_bound', 'Toric bound'),
                ('star_depth', 'Star L'),
                ('half_depth', 'Half L-1'),
            ):
                fig.add_trace(go.Scatter(x=df['L'], y=df[column], mode='lines+markers', name=name))

            fig.update_layout(
                title='Non-H Circuit Depth vs Lattice Size',
                xaxis_title='L',
                yaxis_title='Non-H depth',
                xaxis_type='log',
                showlegend=True
            )

            return fig
        except Exception as e:
            self.logger.error(f"Error creating depth scaling plot: {str(e)}")
            raise

    def create_naive_comparison_plot(self, records: List[Dict]) -> go.Figure:
        """
        Grouped bars of naive edge-coloring depth against the log-depth networks.

        Args:
            records: Rows of the depth-scaling table
        """
        try:
            df = pd.DataFrame(records)
            labels = [str(L) for L in df['L']]

            fig = go.Figure(data=[
                go.Bar(name='Star, naive', x=labels, y=df['naive_star_depth']),
                go.Bar(name='Star, parity network', x=labels, y=df['star_depth']),
                go.Bar(name='Toric, naive', x=labels, y=df['naive_toric_depth']),
                go.Bar(name='Toric, synthesized', x=labels, y=df['toric_depth'])
            ])

            fig.update_layout(
                title='Naive vs Synthesized Depth',
                xaxis_title='L',
                yaxis_title='Non-H depth',
                barmode='group'
            )

            return fig
        except Exception as e:
            self.logger.error(f"Error creating naive comparison plot: {str(e)}")
            raise

    def save_plot(self, fig: go.Figure, filename: str) -> None:
        """
        Save a plot to a file.

        Args:
            fig: Plotly figure object
            filename: Output filename
        """
        try:
            fig.write_html(filename)
            self.logger.info(f"Saved plot to {filename}")
        except Exception as e:
            self.logger.error(f"Error saving plot: {str(e)}")
            raise
