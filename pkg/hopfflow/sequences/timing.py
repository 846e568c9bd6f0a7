"""
Running time of directed graphs and flowcharts as a max-plus quantity.

Each vertex costs a non-negative amount and may start once all vertices
feeding it have finished; the running time is the latest finish, i.e. the
heaviest oriented path.
"""
import logging
import math
from fractions import Fraction
from functools import total_ordering
from typing import Dict, List, Mapping, Optional, Union

import networkx as nx
from pydantic import BaseModel

from hopfflow.core.exceptions import DirectednessError, SequenceError
from hopfflow.graphs.combinatorial import CombinatorialGraph, disjoint_union
from hopfflow.graphs.cuts import apply_cut, enumerate_cuts
from hopfflow.graphs.orientation import directedness, orientation_digraph
from hopfflow.prim.flowchart import Flowchart, oriented_graph

logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]


@total_ordering
class MaxPlus:
    """
    Element of the max-plus semiring: a ⊕ b = max(a, b), a ⊗ b = a + b.

    + and * are ⊕ and ⊗. The additive identity is -inf, the multiplicative
    identity 0; every other value is a non-negative time.
    """

    __slots__ = ("value",)

    def __init__(self, value: Number):
        if value != -math.inf and value < 0:
            raise SequenceError(f"Max-plus times are non-negative, got {value}")
        self.value = value

    @classmethod
    def zero(cls) -> "MaxPlus":
        return cls(-math.inf)

    @classmethod
    def one(cls) -> "MaxPlus":
        return cls(0)

    def __add__(self, other: "MaxPlus") -> "MaxPlus":
        return MaxPlus(max(self.value, other.value))

    def __mul__(self, other: "MaxPlus") -> "MaxPlus":
        if self.value == -math.inf or other.value == -math.inf:
            return MaxPlus.zero()
        return MaxPlus(self.value + other.value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MaxPlus) and self.value == other.value

    def __lt__(self, other: "MaxPlus") -> bool:
        return self.value < other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"MaxPlus({self.value})"


def _dag(graph: CombinatorialGraph) -> nx.DiGraph:
    report = directedness(graph)
    if not report.directed:
        raise DirectednessError(f"Running time needs a directed graph; oriented wheel through {report.wheel}")
    return nx.DiGraph(orientation_digraph(graph))


def _cost(costs: Mapping[str, Number], vertex: str) -> Number:
    value = costs.get(vertex, 0)
    if value < 0:
        raise SequenceError(f"Vertex {vertex} has negative cost {value}")
    return value


def finish_times(graph: CombinatorialGraph, costs: Mapping[str, Number]) -> Dict[str, Number]:
    """Earliest finish time of every vertex; vertices missing from costs cost 0."""
    dag = _dag(graph)
    finish: Dict[str, Number] = {}
    for v in nx.topological_sort(dag):
        start = max((finish[u] for u in dag.predecessors(v)), default=0)
        finish[v] = start + _cost(costs, v)
    return finish


def running_time(subject: Union[CombinatorialGraph, Flowchart], costs: Mapping[str, Number]) -> MaxPlus:
    """
    Latest finish over all vertices; 0 for the empty graph.

    A flowchart runs with data flowing from the leaves to its roots.
    """
    graph = oriented_graph(subject.graph, subject.roots) if isinstance(subject, Flowchart) else subject
    graph.require_oriented()
    return MaxPlus(max(finish_times(graph, costs).values(), default=0))


def _prefixed(costs: Mapping[str, Number], prefix: str) -> Dict[str, Number]:
    return {f"{prefix}{v}": c for v, c in costs.items()}


class UnionTiming(BaseModel):
    union: float
    first: float
    second: float

    @property
    def holds(self) -> bool:
        return self.union == max(self.first, self.second)


def disjoint_union_timing(first: CombinatorialGraph, first_costs: Mapping[str, Number],
                          second: CombinatorialGraph, second_costs: Mapping[str, Number]) -> UnionTiming:
    """Compare T(τ1 ∐ τ2) with max(T(τ1), T(τ2))."""
    union = disjoint_union(first, second)
    if first.is_empty:
        costs = dict(second_costs)
    elif second.is_empty:
        costs = dict(first_costs)
    else:
        costs = {**_prefixed(first_costs, "a."), **_prefixed(second_costs, "b.")}
    return UnionTiming(
        union=float(running_time(union, costs).value),
        first=float(running_time(first, first_costs).value),
        second=float(running_time(second, second_costs).value),
    )


class CutTiming(BaseModel):
    """T(τ) against T(τ^C) + T(τ_C) for one proper cut."""
    upper_vertices: List[str]
    lower_vertices: List[str]
    total: float
    upper: float
    lower: float

    @property
    def bounded(self) -> bool:
        return self.total <= self.upper + self.lower

    @property
    def equality(self) -> bool:
        return self.total == self.upper + self.lower


def cut_timing_report(graph: CombinatorialGraph, costs: Mapping[str, Number],
                      cuts: Optional[List] = None) -> List[CutTiming]:
    """
    One entry per proper cut. The bound T(τ) <= T(τ^C) + T(τ_C) always holds
    for the critical-path model; equality fails e.g. when a cut separates two
    unrelated parts.
    """
    total = float(running_time(graph, costs).value)
    rows = []
    for cut in cuts if cuts is not None else enumerate_cuts(graph):
        if not cut.proper:
            continue
        upper, lower = apply_cut(graph, cut)
        row = CutTiming(
            upper_vertices=sorted(cut.upper_vertices),
            lower_vertices=sorted(cut.lower_vertices),
            total=total,
            upper=float(running_time(upper, costs).value),
            lower=float(running_time(lower, costs).value),
        )
        if not row.bounded:
            logger.warning(f"Cut timing bound fails for upper part {row.upper_vertices}")
        rows.append(row)
    return rows
