"""Cuts of oriented graphs and the severing construction."""
import itertools
from typing import FrozenSet, List, Tuple
from pydantic import BaseModel, ConfigDict

from hopfflow.core.exceptions import InvalidCutError
from hopfflow.graphs.combinatorial import CombinatorialGraph, Orientation
from hopfflow.graphs.orientation import strongly_connected_parts


class Cut(BaseModel):
    """Bipartition of the vertices into an upper and a lower part."""
    model_config = ConfigDict(frozen=True)

    upper_vertices: FrozenSet[str]
    lower_vertices: FrozenSet[str]

    @property
    def proper(self) -> bool:
        return bool(self.upper_vertices) and bool(self.lower_vertices)

    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        # improper (empty upper) first, improper (empty lower) last
        rank = 0 if not self.upper_vertices else (2 if not self.lower_vertices else 1)
        return (rank, tuple(sorted(self.upper_vertices)))


def crossing_edges(graph: CombinatorialGraph, cut: Cut) -> List[Tuple[str, str]]:
    """Edges with one endpoint on each side, as (upper half, lower half)."""
    crossing = []
    for f, g in graph.edges:
        vf, vg = graph.boundary[f], graph.boundary[g]
        if vf in cut.upper_vertices and vg in cut.lower_vertices:
            crossing.append((f, g))
        elif vg in cut.upper_vertices and vf in cut.lower_vertices:
            crossing.append((g, f))
    return crossing


def cut_violations(graph: CombinatorialGraph, cut: Cut) -> List[str]:
    """Reasons the bipartition fails to be a cut; empty when it is one."""
    vertices = set(graph.vertices)
    problems = []
    if cut.upper_vertices | cut.lower_vertices != vertices or cut.upper_vertices & cut.lower_vertices:
        problems.append("upper and lower parts must partition the vertex set")
        return problems
    if not cut.proper:
        return problems
    for part in strongly_connected_parts(graph):
        if set(part) & cut.upper_vertices and set(part) & cut.lower_vertices:
            problems.append(f"oriented wheel through {part} is split")
    for upper_half, lower_half in crossing_edges(graph, cut):
        if graph.decoration.orientation(upper_half) != Orientation.OUT:
            problems.append(f"edge {upper_half}/{lower_half} runs from lower to upper")
    return problems


def is_cut(graph: CombinatorialGraph, cut: Cut) -> bool:
    return not cut_violations(graph, cut)


def enumerate_cuts(graph: CombinatorialGraph) -> List[Cut]:
    """
    All cuts of an oriented graph, the two improper ones included.

    Proper cuts are found by testing every bipartition, which is fine for
    the graph sizes handled here.
    """
    graph.require_oriented()
    vertices = sorted(graph.vertices)
    everything = frozenset(vertices)
    cuts = {Cut(upper_vertices=frozenset(), lower_vertices=everything),
            Cut(upper_vertices=everything, lower_vertices=frozenset())}
    for size in range(1, len(vertices)):
        for upper in itertools.combinations(vertices, size):
            cut = Cut(upper_vertices=frozenset(upper), lower_vertices=everything - set(upper))
            if is_cut(graph, cut):
                cuts.add(cut)
    return sorted(cuts, key=Cut.sort_key)


def apply_cut(graph: CombinatorialGraph, cut: Cut) -> Tuple[CombinatorialGraph, CombinatorialGraph]:
    """
    Split the graph along a cut into (upper, lower).

    Crossing edges are severed: the upper half becomes an output tail of the
    upper graph and the lower half an input tail of the lower graph. Flag
    identifiers and all labels are kept, so the flag count is preserved.
    """
    graph.require_oriented()
    problems = cut_violations(graph, cut)
    if problems:
        raise InvalidCutError(f"Not a cut: {'; '.join(problems)}")
    return graph.induced(cut.upper_vertices), graph.induced(cut.lower_vertices)


def severed_graph(graph: CombinatorialGraph, cut: Cut) -> CombinatorialGraph:
    """The graph with every crossing edge of the cut replaced by two tails."""
    apply_cut(graph, cut)
    involution = dict(graph.involution)
    for f, g in crossing_edges(graph, cut):
        involution[f], involution[g] = f, g
    return CombinatorialGraph.build(
        graph.flags, graph.vertices, graph.boundary, involution, graph.decoration
    )
