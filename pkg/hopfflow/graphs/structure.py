"""Connectivity analysis on the geometric realization of a combinatorial graph."""
from typing import List
import networkx as nx
from pydantic import BaseModel

from hopfflow.graphs.combinatorial import CombinatorialGraph


class ComponentInfo(BaseModel):
    """Shape of one connected component."""
    vertices: List[str]
    edge_count: int
    tail_count: int
    is_tree: bool
    is_corolla: bool


class Classification(BaseModel):
    components: List[ComponentInfo]
    is_connected: bool
    is_tree: bool
    is_forest: bool


def to_networkx(graph: CombinatorialGraph) -> nx.MultiGraph:
    """Vertices joined by one multigraph edge per graph edge; loops kept."""
    realization = nx.MultiGraph()
    realization.add_nodes_from(graph.vertices)
    for f, g in graph.edges:
        realization.add_edge(graph.boundary[f], graph.boundary[g], key=f)
    return realization


def connected_components(graph: CombinatorialGraph) -> List[List[str]]:
    """Vertex sets of the components, each sorted, ordered by their smallest vertex."""
    components = [sorted(c) for c in nx.connected_components(to_networkx(graph))]
    return sorted(components)


def component_subgraphs(graph: CombinatorialGraph) -> List[CombinatorialGraph]:
    return [graph.induced(vertices) for vertices in connected_components(graph)]


def is_connected(graph: CombinatorialGraph) -> bool:
    return len(connected_components(graph)) == 1


def classify(graph: CombinatorialGraph) -> Classification:
    components = []
    for vertices in connected_components(graph):
        part = graph.induced(vertices)
        edge_count = len(part.edges)
        components.append(ComponentInfo(
            vertices=vertices,
            edge_count=edge_count,
            tail_count=len(part.tails),
            is_tree=edge_count == len(vertices) - 1,
            is_corolla=len(vertices) == 1 and edge_count == 0,
        ))
    is_forest = all(c.is_tree for c in components)
    return Classification(
        components=components,
        is_connected=len(components) == 1,
        is_tree=len(components) == 1 and is_forest,
        is_forest=is_forest,
    )
