"""Tests for combinatorial graphs: validation, classification, canonical forms, enumeration and cuts."""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hopfflow.core.exceptions import InvalidCutError, MissingOrientationError, ResourceLimitError
from hopfflow.graphs import (
    CombinatorialGraph, Cut, Decoration, FlagLabel, Orientation, apply_cut, automorphism_count,
    brute_force_automorphisms, canonical_form, classify, crossing_edges, directedness, disjoint_union,
    enumerate_cuts, enumerate_graph_classes, enumerate_graphs, enumerate_oriented_graphs,
    euler_characteristic, is_directed, validate_graph,
)
from hopfflow.graphs.cuts import severed_graph
from hopfflow.graphs.io import graph_document, parse_graph
from hopfflow.graphs.library import (
    STANDARD_GRAPHS, corolla, directed_chain, directed_path, dumbbell_graph, loop_graph,
    oriented_corolla, oriented_loop, oriented_two_cycle, single_edge, theta_graph,
)


def renamed(graph: CombinatorialGraph) -> CombinatorialGraph:
    """Isomorphic copy with identifiers renamed so that their sort order is reversed."""
    flags = {f: f"z{len(graph.flags) - i:02d}" for i, f in enumerate(sorted(graph.flags))}
    vertices = {v: f"n{len(graph.vertices) - i:02d}" for i, v in enumerate(sorted(graph.vertices))}
    decoration = Decoration.model_construct(
        flag_labels={flags[f]: lab for f, lab in graph.decoration.flag_labels.items()},
        vertex_labels={vertices[v]: lab for v, lab in graph.decoration.vertex_labels.items()},
    )
    return CombinatorialGraph.build(
        [flags[f] for f in reversed(graph.flags)],
        [vertices[v] for v in reversed(graph.vertices)],
        {flags[f]: vertices[v] for f, v in graph.boundary.items()},
        {flags[f]: flags[g] for f, g in graph.involution.items()},
        decoration,
    )


class TestValidation:
    """Test graph invariant checks."""

    def test_empty_graph_valid(self):
        """Test the empty graph satisfies every invariant."""
        assert validate_graph(CombinatorialGraph.empty()).valid

    def test_loop_graph_valid(self):
        """Test a single loop is valid."""
        assert validate_graph(loop_graph()).valid

    def test_broken_involution(self):
        """Test that j(f1) = f2, j(f2) = f3 is reported as not an involution."""
        graph = CombinatorialGraph.build(
            ["f1", "f2", "f3"], ["v"], {"f1": "v", "f2": "v", "f3": "v"},
            {"f1": "f2", "f2": "f3", "f3": "f3"},
        )
        report = validate_graph(graph)
        assert not report.valid
        assert any(v.code == "not_involution" and v.flag == "f1" for v in report.violations)

    def test_unknown_vertex_and_isolated_vertex(self):
        """Test every violation is reported, not only the first."""
        graph = CombinatorialGraph.build(["f"], ["v", "w"], {"f": "x"}, {"f": "f"})
        codes = {v.code for v in validate_graph(graph).violations}
        assert {"boundary_unknown_vertex", "isolated_vertex"} <= codes

    def test_orientation_clash(self):
        """Test that both halves of an edge cannot point the same way."""
        base = single_edge()
        f, g = base.edges[0]
        labels = {f: FlagLabel(orient=Orientation.OUT), g: FlagLabel(orient=Orientation.OUT)}
        graph = base.with_decoration(Decoration(flag_labels=labels))
        codes = [v.code for v in validate_graph(graph).violations]
        assert codes == ["orientation_clash"]

    def test_raise_for_violations(self):
        """Test ensure-style validation raises a graph error."""
        graph = CombinatorialGraph.build(["f"], ["v"], {"f": "v"}, {})
        with pytest.raises(ValueError):
            validate_graph(graph).raise_for_violations()

    @pytest.mark.parametrize("name", sorted(STANDARD_GRAPHS))
    def test_standard_graphs_valid(self, name):
        """Test the sample graphs are valid."""
        assert validate_graph(STANDARD_GRAPHS[name]()).valid


class TestShape:
    """Test Euler characteristic and classification."""

    @pytest.mark.parametrize("graph,chi", [
        (loop_graph(), 0), (single_edge(), 1), (theta_graph(), -1), (dumbbell_graph(), -1),
        (CombinatorialGraph.empty(), 0),
    ])
    def test_euler_characteristic(self, graph, chi):
        """Test χ = |V| - |E|."""
        assert euler_characteristic(graph) == chi

    def test_corolla(self):
        """Test a 3-tailed corolla is a connected tree and a corolla."""
        info = classify(corolla(3))
        assert info.is_connected and info.is_tree and info.is_forest
        assert info.components[0].is_corolla
        assert info.components[0].tail_count == 3

    def test_loop_is_not_tree(self):
        """Test a loop graph has a cycle."""
        info = classify(loop_graph())
        assert info.is_connected
        assert not info.is_tree

    def test_two_trees_forest(self):
        """Test the union of two edges is a forest with two components."""
        info = classify(disjoint_union(single_edge(), single_edge()))
        assert len(info.components) == 2
        assert info.is_forest
        assert not info.is_tree


class TestCanonicalForm:
    """Test canonical keys and automorphism counts."""

    @pytest.mark.parametrize("name", sorted(STANDARD_GRAPHS))
    def test_relabeling_invariance(self, name):
        """Test canonical_form ignores identifiers."""
        graph = STANDARD_GRAPHS[name]()
        assert canonical_form(renamed(graph)) == canonical_form(graph)

    def test_distinguishes_shapes(self):
        """Test non-isomorphic graphs get different keys."""
        assert canonical_form(loop_graph()) != canonical_form(single_edge())
        assert canonical_form(theta_graph()) != canonical_form(dumbbell_graph())

    def test_orientation_matters(self):
        """Test a corolla with one input differs from one with two inputs."""
        assert canonical_form(oriented_corolla(1, 1)) != canonical_form(oriented_corolla(2, 0))
        assert canonical_form(oriented_corolla(1, 1)) != canonical_form(corolla(2))

    def test_empty_graph_key(self):
        """Test the empty graph key."""
        assert canonical_form(CombinatorialGraph.empty()) == b"[]"

    @pytest.mark.parametrize("graph,count", [
        (loop_graph(), 2), (single_edge(), 2), (theta_graph(), 12), (dumbbell_graph(), 8),
        (corolla(3), 6), (oriented_corolla(1, 1), 1), (directed_chain(), 1), (oriented_two_cycle(), 2),
        (CombinatorialGraph.empty(), 1),
    ])
    def test_automorphism_count(self, graph, count):
        """Test automorphism group orders of small graphs."""
        assert automorphism_count(graph) == count

    def test_loop_union_loop(self):
        """Test loop ∐ loop has 8 automorphisms and is symmetric in its arguments."""
        union = disjoint_union(loop_graph(), loop_graph())
        assert automorphism_count(union) == 8
        assert brute_force_automorphisms(union) == 8

    def test_union_order_independent(self):
        """Test canonical_form(a ∐ b) = canonical_form(b ∐ a)."""
        a, b = directed_chain(), oriented_corolla()
        assert canonical_form(disjoint_union(a, b)) == canonical_form(disjoint_union(b, a))
        assert len(classify(disjoint_union(a, b)).components) == 2

    def test_union_with_empty(self):
        """Test the empty graph is a unit for disjoint union."""
        assert canonical_form(disjoint_union(theta_graph(), CombinatorialGraph.empty())) == \
            canonical_form(theta_graph())

    def test_matches_brute_force_on_enumerated_graphs(self):
        """Test automorphism_count against flag permutations for every graph with at most 6 flags."""
        for graph in enumerate_graphs(3):
            assert automorphism_count(graph) == brute_force_automorphisms(graph)

    def test_matches_brute_force_on_oriented_graphs(self):
        """Test automorphism_count against flag permutations for oriented graphs with tails."""
        for form in enumerate_oriented_graphs(4):
            assert form.automorphisms == brute_force_automorphisms(form.graph)

    def test_representative_has_same_key(self):
        """Test the canonical representative is isomorphic to the input."""
        for form in enumerate_graph_classes(2):
            assert canonical_form(form.graph) == form.key


class TestEnumeration:
    """Test enumeration of isomorphism classes."""

    def test_no_edges(self):
        """Test max_edges = 0 yields only the empty graph."""
        graphs = enumerate_graphs(0)
        assert len(graphs) == 1
        assert graphs[0].is_empty

    def test_one_edge(self):
        """Test max_edges = 1 yields the empty graph, the loop and the single edge."""
        keys = [canonical_form(g) for g in enumerate_graphs(1)]
        assert len(keys) == 3
        assert set(keys) == {canonical_form(CombinatorialGraph.empty()), canonical_form(loop_graph()),
                             canonical_form(single_edge())}

    def test_trivalent_needs_three_edges(self):
        """Test no nonempty trivalent graph has at most 2 edges."""
        assert [g for g in enumerate_graphs(2, valence_profile=[3]) if not g.is_empty] == []

    def test_trivalent_three_edges(self):
        """Test the trivalent graphs with 3 edges are the theta and the dumbbell."""
        keys = {canonical_form(g) for g in enumerate_graphs(3, valence_profile=[3]) if not g.is_empty}
        assert keys == {canonical_form(theta_graph()), canonical_form(dumbbell_graph())}

    def test_classes_distinct_and_ordered(self):
        """Test every class appears once, ordered by edge count."""
        forms = enumerate_graph_classes(3)
        assert len({f.key for f in forms}) == len(forms)
        edges = [len(f.graph.edges) for f in forms]
        assert edges == sorted(edges)

    def test_class_cap(self):
        """Test the class cap raises a resource error."""
        with pytest.raises(ResourceLimitError):
            enumerate_graphs(1, max_classes=2)

    def test_negative_edges(self):
        """Test a negative bound is rejected."""
        with pytest.raises(ValueError):
            enumerate_graphs(-1)

    def test_oriented_tail_free(self):
        """Test oriented tail-free graphs with at most 2 flags: empty, loop, edge."""
        forms = enumerate_oriented_graphs(2, allow_tails=False)
        assert {f.key for f in forms} == {
            canonical_form(CombinatorialGraph.empty()), canonical_form(oriented_loop()),
            canonical_form(directed_chain(tails=False)),
        }


class TestDirectedness:
    """Test oriented wheels and height functions."""

    def test_tree_is_directed(self):
        """Test an oriented path is directed with decreasing heights."""
        report = directedness(directed_path(3))
        assert report.directed
        assert report.heights == {"v0": 2, "v1": 1, "v2": 0}

    def test_oriented_loop(self):
        """Test an oriented loop is a wheel."""
        assert not is_directed(oriented_loop())

    def test_two_cycle(self):
        """Test an oriented 2-cycle is a wheel and reports its vertices."""
        report = directedness(oriented_two_cycle())
        assert not report.directed
        assert sorted(report.wheel) == ["u", "w"]

    def test_needs_orientation(self):
        """Test directedness refuses unoriented graphs."""
        with pytest.raises(MissingOrientationError):
            is_directed(theta_graph())


class TestCuts:
    """Test cut enumeration and application."""

    def test_corolla_only_improper(self):
        """Test a corolla has exactly the two improper cuts."""
        cuts = enumerate_cuts(oriented_corolla())
        assert len(cuts) == 2
        assert not any(c.proper for c in cuts)

    def test_chain(self):
        """Test a 2-vertex chain has 3 cuts, the proper one with v0 above."""
        cuts = enumerate_cuts(directed_chain())
        assert len(cuts) == 3
        proper = [c for c in cuts if c.proper]
        assert proper == [Cut(upper_vertices=frozenset({"v0"}), lower_vertices=frozenset({"v1"}))]
        assert not cuts[0].upper_vertices
        assert not cuts[-1].lower_vertices

    def test_two_cycle_only_improper(self):
        """Test the wheel of a 2-cycle cannot be split."""
        assert len(enumerate_cuts(oriented_two_cycle())) == 2

    def test_needs_orientation(self):
        """Test cut enumeration refuses unoriented graphs."""
        with pytest.raises(MissingOrientationError):
            enumerate_cuts(single_edge())

    def test_apply_improper_cut(self):
        """Test (∅, V) splits into the empty graph and the whole graph."""
        graph = directed_chain()
        upper, lower = apply_cut(graph, Cut(upper_vertices=frozenset(), lower_vertices=frozenset(graph.vertices)))
        assert upper.is_empty
        assert canonical_form(lower) == canonical_form(graph)

    def test_apply_chain_cut(self):
        """Test the chain splits into two corollas carrying the severed edge as tails."""
        graph = directed_chain(tails=False)
        upper, lower = apply_cut(graph, Cut(upper_vertices=frozenset({"v0"}), lower_vertices=frozenset({"v1"})))
        assert canonical_form(upper) == canonical_form(oriented_corolla(0, 1))
        assert canonical_form(lower) == canonical_form(oriented_corolla(1, 0))

    def test_apply_path_cut(self):
        """Test cutting a 3-vertex path below its middle vertex."""
        graph = directed_path(3)
        cut = Cut(upper_vertices=frozenset({"v0", "v1"}), lower_vertices=frozenset({"v2"}))
        upper, lower = apply_cut(graph, cut)
        assert canonical_form(upper) == canonical_form(directed_chain())
        assert canonical_form(lower) == canonical_form(oriented_corolla(1, 1))
        severed = [t for t in upper.tails if t not in graph.tails]
        assert [upper.decoration.orientation(t) for t in severed] == [Orientation.OUT]

    def test_invalid_cut(self):
        """Test a lower-to-upper edge makes a bipartition invalid."""
        with pytest.raises(InvalidCutError):
            apply_cut(directed_chain(), Cut(upper_vertices=frozenset({"v1"}), lower_vertices=frozenset({"v0"})))
        with pytest.raises(InvalidCutError):
            apply_cut(oriented_two_cycle(), Cut(upper_vertices=frozenset({"u"}), lower_vertices=frozenset({"w"})))

    @pytest.mark.parametrize("name", ["chain", "path3", "two_cycle", "oriented_loop", "corolla"])
    def test_parts_match_severed_graph(self, name):
        """Test flag and edge counts of upper ∐ lower for every cut."""
        graph = STANDARD_GRAPHS[name]()
        for cut in enumerate_cuts(graph):
            upper, lower = apply_cut(graph, cut)
            union = disjoint_union(upper, lower)
            assert len(union.flags) == len(graph.flags)
            assert len(union.edges) == len(graph.edges) - len(crossing_edges(graph, cut))
            assert canonical_form(union) == canonical_form(severed_graph(graph, cut))

    def test_directed_cuts_respect_orientation(self):
        """Test no proper cut of a directed graph has an edge running from lower to upper."""
        for form in enumerate_oriented_graphs(4):
            if not is_directed(form.graph):
                continue
            for cut in enumerate_cuts(form.graph):
                for upper_half, _ in crossing_edges(form.graph, cut):
                    assert form.graph.decoration.orientation(upper_half) == Orientation.OUT


class TestGraphFiles:
    """Test the JSON graph format."""

    @pytest.mark.parametrize("name", sorted(STANDARD_GRAPHS))
    def test_document_round_trip(self, name):
        """Test parse then print is the identity on documents."""
        document = graph_document(STANDARD_GRAPHS[name]())
        assert graph_document(parse_graph(document)) == document

    def test_labels_omitted_when_absent(self):
        """Test unlabeled graphs carry no label maps."""
        document = graph_document(loop_graph())
        assert "flag_labels" not in document
        assert "vertex_labels" not in document

    def test_orientation_written(self):
        """Test orientations are written as in/out strings."""
        document = graph_document(oriented_loop())
        assert sorted(lab["orient"] for lab in document["flag_labels"].values()) == ["in", "out"]
