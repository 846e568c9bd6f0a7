"""Partition-function series: graph sums and the independent Wick expansion."""
import logging
from fractions import Fraction
from typing import Callable, List, Optional

from hopfflow.feynman.model import ModelData
from hopfflow.feynman.series import FormalSeries
from hopfflow.feynman.stationary import interaction_polynomial
from hopfflow.feynman.weights import graph_weight
from hopfflow.graphs.canonical import CanonicalForm
from hopfflow.graphs.combinatorial import euler_characteristic
from hopfflow.graphs.enumeration import enumerate_graph_classes
from hopfflow.graphs.structure import classify

logger = logging.getLogger(__name__)


def _check_weight(max_weight: int) -> None:
    if max_weight < 0:
        raise ValueError("max_coupling_weight must be non-negative")


def contributing_classes(model: ModelData, max_weight: int) -> List[CanonicalForm]:
    """Tail-free graph classes whose vertex valences are ranks of active couplings."""
    ranks = model.active_ranks()
    if not ranks:
        return enumerate_graph_classes(0)
    return enumerate_graph_classes(max_weight // 2, valence_profile=ranks)


def graph_sum(
    model: ModelData,
    max_weight: int,
    include: Optional[Callable[[CanonicalForm], bool]] = None,
) -> FormalSeries:
    """Sum of lambda^{-chi} / |Aut| * w over the selected graph classes."""
    _check_weight(max_weight)
    total = FormalSeries.zero(max_weight)
    classes = contributing_classes(model, max_weight)
    used = 0
    for form in classes:
        if include is not None and not include(form):
            continue
        used += 1
        weight = graph_weight(form.graph, model, max_weight=max_weight)
        if weight.is_zero():
            continue
        chi = euler_characteristic(form.graph)
        total = total + (weight * Fraction(1, form.automorphisms)).lambda_shift(-chi)
    logger.debug(f"Graph sum over {used} of {len(classes)} classes up to weight {max_weight}")
    return total


def partition_series_graphs(model: ModelData, max_weight: int) -> FormalSeries:
    """The partition function as a sum over all isomorphism classes of graphs."""
    return graph_sum(model, max_weight)


def partition_series_wick(model: ModelData, max_weight: int) -> FormalSeries:
    """
    The partition function by termwise Gaussian integration of exp(S_1 / lambda).

    No graph is enumerated on this path: the exponential is expanded as a
    polynomial in the fields and each field monomial is replaced by its Wick
    moment.
    """
    _check_weight(max_weight)
    if max_weight == 0:
        return FormalSeries.one(0)
    scaled = interaction_polynomial(model, max_weight) * FormalSeries.constant(1, max_weight, lambda_power=-1)
    return scaled.exp().expectation(model)


def connected_series(model: ModelData, max_weight: int) -> FormalSeries:
    """The graph sum restricted to connected non-empty graphs."""
    return graph_sum(
        model, max_weight,
        include=lambda form: bool(form.graph.vertices) and classify(form.graph).is_connected,
    )


def tree_series(model: ModelData, max_weight: int) -> FormalSeries:
    """The graph sum restricted to trees with at least one edge."""
    return graph_sum(
        model, max_weight,
        include=lambda form: bool(form.graph.edges) and classify(form.graph).is_tree,
    )
