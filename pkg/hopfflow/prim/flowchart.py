"""
Prim flowcharts: decorated oriented forests whose vertices compose, bracket or recurse.

Every component is a tree with a marked root tail (its global output); the
remaining tails are global inputs. The orientation of every flag is derived
from the root: flags pointing toward the root are outputs of their vertex.
"""
import logging
from typing import Dict, List, Literal, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field

from hopfflow.core.exceptions import FlowchartError
from hopfflow.graphs.combinatorial import (
    CombinatorialGraph, Decoration, FlagLabel, Orientation, validate_graph,
)
from hopfflow.prim.functions import BasicFunction

logger = logging.getLogger(__name__)

Op = Literal["c", "b", "r"]
Arity = Tuple[int, int]


class Flowchart(BaseModel):
    """A Prim flowchart; open when some global input carries no basic function."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: CombinatorialGraph
    roots: Dict[str, str]
    component_order: List[str]
    input_order: Dict[str, List[str]]
    arity: Dict[str, Arity]
    ops: Dict[str, Op]
    basics: Dict[str, BasicFunction] = Field(default_factory=dict)

    def root_vertex(self, component: str) -> str:
        return self.graph.boundary[self.roots[component]]

    def component_vertices(self, component: str) -> List[str]:
        """Vertices reachable from the root vertex of the component."""
        start = self.root_vertex(component)
        seen: Set[str] = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for f in self.graph.flags_at(v):
                partner = self.graph.involution[f]
                if partner != f:
                    w = self.graph.boundary[partner]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return sorted(seen)

    def output_flag(self, vertex: str) -> str:
        inputs = set(self.input_order.get(vertex, ()))
        for f in self.graph.flags_at(vertex):
            if f not in inputs:
                return f
        raise FlowchartError(f"Vertex {vertex} has no output flag")

    def global_inputs(self) -> List[str]:
        roots = set(self.roots.values())
        return [t for t in self.graph.tails if t not in roots]

    def component_inputs(self, component: str) -> List[str]:
        """Global inputs of one component in depth-first input order."""
        result: List[str] = []

        def walk(v: str) -> None:
            for f in self.input_order[v]:
                partner = self.graph.involution[f]
                if partner == f:
                    result.append(f)
                else:
                    walk(self.graph.boundary[partner])

        walk(self.root_vertex(component))
        return result

    def root_arity(self, component: Optional[str] = None) -> Arity:
        """Arity/coarity of one root, or the summed total over all components."""
        if component is not None:
            return self.arity[self.roots[component]]
        a = sum(self.arity[self.roots[c]][0] for c in self.component_order)
        c = sum(self.arity[self.roots[name]][1] for name in self.component_order)
        return (a, c)

    def is_closed(self) -> bool:
        return all(t in self.basics for t in self.global_inputs())

    def with_basics(self, basics: Dict[str, BasicFunction]) -> "Flowchart":
        return self.model_copy(update={"basics": {**self.basics, **basics}})


def derive_orientation(graph: CombinatorialGraph, roots: Dict[str, str]) -> Dict[str, Orientation]:
    """
    Orient every flag from the roots.

    Raises FlowchartError when a root is not a tail or the component of a root
    contains a cycle; flags outside every rooted component stay unoriented.
    """
    orientation: Dict[str, Orientation] = {}
    visited: Set[str] = set()
    for component, root in sorted(roots.items()):
        if root not in graph.boundary or graph.involution.get(root) != root:
            raise FlowchartError(f"Root {root} of component {component} is not a tail")
        orientation[root] = Orientation.OUT
        stack = [(graph.boundary[root], root)]
        while stack:
            v, output = stack.pop()
            if v in visited:
                raise FlowchartError(f"Component {component} is not a tree (vertex {v} reached twice)")
            visited.add(v)
            for f in graph.flags_at(v):
                if f == output:
                    continue
                orientation[f] = Orientation.IN
                partner = graph.involution[f]
                if partner != f:
                    orientation[partner] = Orientation.OUT
                    stack.append((graph.boundary[partner], partner))
    return orientation


def oriented_graph(graph: CombinatorialGraph, roots: Dict[str, str]) -> CombinatorialGraph:
    """The graph with orientation labels set from the roots, auxiliary labels kept."""
    orientation = derive_orientation(graph, roots)
    labels = {}
    for f in graph.flags:
        old = graph.decoration.flag_label(f)
        labels[f] = FlagLabel(orient=orientation.get(f, old.orient), label=old.label)
    return graph.with_decoration(
        Decoration.model_construct(flag_labels=labels, vertex_labels=dict(graph.decoration.vertex_labels))
    )


class FlowchartIssue(BaseModel):
    code: str
    message: str
    vertex: Optional[str] = None
    flag: Optional[str] = None


class FlowchartReport(BaseModel):
    issues: List[FlowchartIssue] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.issues

    def raise_for_issues(self) -> None:
        if self.issues:
            raise FlowchartError("Invalid flowchart: " + "; ".join(i.message for i in self.issues))


def expected_output_arity(op: Op, inputs: List[Arity]) -> Tuple[Optional[Arity], Optional[str]]:
    """Output arity forced by the operator, or the reason the inputs are incompatible."""
    if not inputs:
        return None, "vertex has no inputs"
    if op == "c":
        for (_, c_prev), (a_next, _) in zip(inputs, inputs[1:]):
            if c_prev != a_next:
                return None, f"composition chain breaks: coarity {c_prev} feeds arity {a_next}"
        return (inputs[0][0], inputs[-1][1]), None
    if op == "b":
        arities = {a for a, _ in inputs}
        if len(arities) != 1:
            return None, f"bracket inputs have different arities {sorted(arities)}"
        return (inputs[0][0], sum(c for _, c in inputs)), None
    if len(inputs) != 2:
        return None, f"recursion needs exactly two inputs, got {len(inputs)}"
    (a, c), second = inputs
    if second != (a + c, c):
        return None, f"recursion step input must have arity/coarity {(a + c, c)}, got {second}"
    return (a + 1, c), None


def validate_flowchart(chart: Flowchart) -> FlowchartReport:
    """Check tree shape, root orientation, input orders, arities, operator compatibility and basics."""
    issues: List[FlowchartIssue] = []
    graph = chart.graph

    def issue(code: str, message: str, vertex: Optional[str] = None, flag: Optional[str] = None) -> None:
        issues.append(FlowchartIssue(code=code, message=message, vertex=vertex, flag=flag))

    structural = validate_graph(graph)
    for v in structural.violations:
        if v.code not in ("orientation_clash", "orientation_partial"):
            issue(f"graph.{v.code}", v.message, v.vertex, v.flag)
    if issues:
        return FlowchartReport(issues=issues)

    if sorted(chart.component_order) != sorted(chart.roots):
        issue("component_order", "component_order must list every component exactly once")
    try:
        orientation = derive_orientation(graph, chart.roots)
    except FlowchartError as exc:
        issue("tree", exc.detail)
        return FlowchartReport(issues=issues)

    owner: Dict[str, str] = {}
    for component in sorted(chart.roots):
        vertices = chart.component_vertices(component)
        for v in vertices:
            if v in owner:
                issue("root_count", f"components {owner[v]} and {component} share vertex {v}", vertex=v)
            owner[v] = component
        inputs = [f for f in graph.tails
                  if graph.boundary[f] in vertices and f != chart.roots[component]]
        if not inputs:
            issue("no_inputs", f"component {component} has no global input")
    for v in graph.vertices:
        if v not in owner:
            issue("unrooted", f"vertex {v} belongs to no rooted component", vertex=v)
        if graph.valence(v) < 2:
            issue("valence", f"vertex {v} is incident to fewer than two flags", vertex=v)
    if issues:
        return FlowchartReport(issues=issues)

    for f in graph.flags:
        present = graph.decoration.orientation(f)
        if present is not None and present != orientation[f]:
            issue("orientation", f"flag {f} is oriented against its root", flag=f)

    for v in graph.vertices:
        local_inputs = sorted(f for f in graph.flags_at(v) if orientation[f] == Orientation.IN)
        order = chart.input_order.get(v)
        if order is None or sorted(order) != local_inputs:
            issue("input_order", f"input order of {v} must list its inputs {local_inputs}", vertex=v)

    for f in graph.flags:
        if f not in chart.arity:
            issue("arity_missing", f"flag {f} has no arity/coarity", flag=f)
        elif min(chart.arity[f]) < 0:
            issue("arity_negative", f"flag {f} has a negative arity/coarity", flag=f)
    for f, g in graph.edges:
        if f in chart.arity and g in chart.arity and tuple(chart.arity[f]) != tuple(chart.arity[g]):
            issue("edge_arity", f"edge {f}/{g} has different arities on its halves", flag=f)

    for v in graph.vertices:
        op = chart.ops.get(v)
        if op not in ("c", "b", "r"):
            issue("op", f"vertex {v} has no operator in c, b, r", vertex=v)
            continue
        order = chart.input_order.get(v) or []
        if any(f not in chart.arity for f in order):
            continue
        expected, reason = expected_output_arity(op, [tuple(chart.arity[f]) for f in order])
        if reason is not None:
            issue(f"op_{op}", f"vertex {v}: {reason}", vertex=v)
            continue
        outputs = [f for f in graph.flags_at(v) if orientation[f] == Orientation.OUT]
        if outputs and outputs[0] in chart.arity and tuple(chart.arity[outputs[0]]) != expected:
            issue(f"op_{op}", f"vertex {v}: output must have arity/coarity {expected}", vertex=v)

    global_inputs = set(chart.global_inputs())
    for tail, basic in chart.basics.items():
        if tail not in global_inputs:
            issue("basic_target", f"basic function attached to {tail}, which is not a global input", flag=tail)
        elif tail in chart.arity and tuple(chart.arity[tail]) != (basic.arity, basic.coarity):
            issue("basic_arity", f"basic {basic.name} on {tail} does not match arity {chart.arity[tail]}", flag=tail)

    return FlowchartReport(issues=issues)


def ensure_valid_flowchart(chart: Flowchart) -> Flowchart:
    validate_flowchart(chart).raise_for_issues()
    return chart
