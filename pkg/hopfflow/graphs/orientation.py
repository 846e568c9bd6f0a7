"""Orientation analysis: oriented wheels, directedness and height functions."""
import logging
from typing import Dict, List, Optional
import networkx as nx
from pydantic import BaseModel

from hopfflow.graphs.combinatorial import CombinatorialGraph, Orientation

logger = logging.getLogger(__name__)


class DirectednessReport(BaseModel):
    """Outcome of is_directed with a witness either way."""
    directed: bool
    heights: Optional[Dict[str, int]] = None
    wheel: Optional[List[str]] = None


def orientation_digraph(graph: CombinatorialGraph) -> nx.MultiDiGraph:
    """One arc per edge, from the vertex of its out half to the vertex of its in half."""
    digraph = nx.MultiDiGraph()
    digraph.add_nodes_from(graph.vertices)
    for source, target, out_flag, _ in graph.oriented_edges():
        digraph.add_edge(source, target, key=out_flag)
    return digraph


def directedness(graph: CombinatorialGraph) -> DirectednessReport:
    """
    Decide whether the oriented graph has no oriented wheel.

    An oriented loop counts as a wheel of length one. When the graph is
    directed the report carries a height function that strictly decreases
    along every edge.
    """
    digraph = orientation_digraph(graph)
    if not nx.is_directed_acyclic_graph(digraph):
        cycle = nx.find_cycle(digraph)
        wheel = [arc[0] for arc in cycle]
        logger.debug(f"Oriented wheel through {wheel}")
        return DirectednessReport(directed=False, wheel=wheel)

    heights: Dict[str, int] = {}
    for v in reversed(list(nx.lexicographical_topological_sort(digraph))):
        successors = [heights[w] for w in digraph.successors(v)]
        heights[v] = 1 + max(successors) if successors else 0
    return DirectednessReport(directed=True, heights=heights)


def is_directed(graph: CombinatorialGraph) -> bool:
    return directedness(graph).directed


def strongly_connected_parts(graph: CombinatorialGraph) -> List[List[str]]:
    """Vertex sets that any cut must keep on one side."""
    return sorted(sorted(part) for part in nx.strongly_connected_components(orientation_digraph(graph)))


def global_inputs(graph: CombinatorialGraph) -> List[str]:
    return [t for t in graph.tails if graph.decoration.orientation(t) == Orientation.IN]


def global_outputs(graph: CombinatorialGraph) -> List[str]:
    return [t for t in graph.tails if graph.decoration.orientation(t) == Orientation.OUT]
