"""Toy-model perturbation series: Wick moments, graph weights and the graph-sum identities."""
from hopfflow.feynman.model import ModelData
from hopfflow.feynman.series import FormalSeries, difference_report
from hopfflow.feynman.fields import FieldPolynomial
from hopfflow.feynman.wick import wick_moment, wick_pairings, wick_expansion
from hopfflow.feynman.weights import graph_weight
from hopfflow.feynman.partition import (
    partition_series_graphs, partition_series_wick, connected_series, tree_series,
)
from hopfflow.feynman.stationary import stationary_point, action_residual, critical_value
from hopfflow.feynman.trees import tree_identity_report
from hopfflow.feynman.quadrature import numeric_gaussian_check

__all__ = [
    "ModelData", "FormalSeries", "FieldPolynomial", "difference_report",
    "wick_moment", "wick_pairings", "wick_expansion", "graph_weight",
    "partition_series_graphs", "partition_series_wick", "connected_series", "tree_series",
    "stationary_point", "action_residual", "critical_value", "tree_identity_report",
    "numeric_gaussian_check",
]
