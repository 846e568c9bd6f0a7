"""Tensor-network weights of graphs."""
import itertools
from collections import Counter
from fractions import Fraction
from typing import Dict, Mapping, Optional

from hopfflow.core.exceptions import MissingCouplingError, ModelError
from hopfflow.feynman.model import ModelData
from hopfflow.feynman.series import FormalSeries, Monomial
from hopfflow.graphs.combinatorial import CombinatorialGraph


def graph_weight(
    graph: CombinatorialGraph,
    model: ModelData,
    tail_colors: Optional[Mapping[str, str]] = None,
    max_weight: Optional[int] = None,
) -> FormalSeries:
    """
    Sum over colorings of the flags of prod_edges g^{u(e)} * prod_vertices C_{u(F(v))}.

    Tails are not summed over: each keeps the color given in tail_colors, and a
    one-color model colors them automatically. The result is lambda-free with
    weight equal to the number of flags.
    """
    flags = sorted(graph.flags)
    weight = max_weight if max_weight is not None else len(flags)
    for v in graph.vertices:
        if graph.valence(v) > model.rank_bound:
            raise MissingCouplingError(
                f"Vertex {v} has valence {graph.valence(v)} above the coupling rank bound {model.rank_bound}"
            )

    fixed: Dict[str, str] = {}
    for tail in graph.tails:
        if tail_colors is not None and tail in tail_colors:
            fixed[tail] = tail_colors[tail]
        elif len(model.colors) == 1:
            fixed[tail] = model.colors[0]
        else:
            raise ModelError(f"Tail {tail} needs an external color")
        if fixed[tail] not in model.colors:
            raise ModelError(f"Tail {tail} has unknown color {fixed[tail]}")

    free = [f for f in flags if f not in fixed]
    edges = graph.edges
    at_vertex = {v: graph.flags_at(v) for v in graph.vertices}
    terms: Dict[Monomial, Fraction] = {}
    for choice in itertools.product(model.colors, repeat=len(free)):
        coloring = dict(fixed)
        coloring.update(zip(free, choice))
        factor = Fraction(1)
        for f, g in edges:
            factor *= model.ginv(coloring[f], coloring[g])
            if not factor:
                break
        if not factor:
            continue
        symbols = []
        for v, incident in at_vertex.items():
            symbol = model.symbol(coloring[f] for f in incident)
            if not model.is_active(symbol):
                break
            symbols.append(symbol)
        else:
            monomial = tuple(sorted(Counter(symbols).items()))
            terms[monomial] = terms.get(monomial, Fraction(0)) + factor
    return FormalSeries({(mono, 0): c for mono, c in terms.items()}, weight)
