"""Combinatorial graphs with decorations, isomorphism machinery, orientation analysis and cuts."""
from hopfflow.graphs.combinatorial import (
    CombinatorialGraph, Decoration, FlagLabel, Orientation, ValidationReport, Violation,
    validate_graph, ensure_valid, euler_characteristic, disjoint_union, disjoint_union_all,
)
from hopfflow.graphs.structure import classify, connected_components, component_subgraphs, is_connected
from hopfflow.graphs.canonical import (
    CanonicalForm, canonicalize, canonical_form, canonical_graph, automorphism_count,
    are_isomorphic, brute_force_automorphisms,
)
from hopfflow.graphs.orientation import is_directed, directedness
from hopfflow.graphs.cuts import Cut, enumerate_cuts, apply_cut, crossing_edges, is_cut
from hopfflow.graphs.enumeration import enumerate_graphs, enumerate_graph_classes, enumerate_oriented_graphs

__all__ = [
    "CombinatorialGraph", "Decoration", "FlagLabel", "Orientation", "ValidationReport", "Violation",
    "validate_graph", "ensure_valid", "euler_characteristic", "disjoint_union", "disjoint_union_all",
    "classify", "connected_components", "component_subgraphs", "is_connected",
    "CanonicalForm", "canonicalize", "canonical_form", "canonical_graph", "automorphism_count",
    "are_isomorphic", "brute_force_automorphisms",
    "is_directed", "directedness",
    "Cut", "enumerate_cuts", "apply_cut", "crossing_edges", "is_cut",
    "enumerate_graphs", "enumerate_graph_classes", "enumerate_oriented_graphs",
]
