"""
Build flowcharts from nested terms.

A term is an operator node over child terms, a basic function leaf, or an
open leaf of given arity/coarity. Arities propagate bottom-up; identifiers
are deterministic: vertices v0, v1, ... in preorder, edges e<n>.out (child
side) and e<n>.in (parent side), global inputs in<n>, roots r<i>.
"""
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict

from hopfflow.core.exceptions import ArityMismatchError
from hopfflow.graphs.combinatorial import CombinatorialGraph, Decoration, FlagLabel, Orientation
from hopfflow.prim.flowchart import Arity, Flowchart, Op, ensure_valid_flowchart, expected_output_arity
from hopfflow.prim.functions import BasicFunction


class OpenLeaf(BaseModel):
    """An undecorated global input of the given arity/coarity."""
    model_config = ConfigDict(frozen=True)

    arity: int
    coarity: int = 1


class Node(BaseModel):
    """An operator vertex over ordered child terms."""
    model_config = ConfigDict(frozen=True)

    op: Op
    children: List["Term"]


Term = Union[Node, BasicFunction, OpenLeaf]
Node.model_rebuild()


def c(*children: Term) -> Node:
    return Node(op="c", children=list(children))


def b(*children: Term) -> Node:
    return Node(op="b", children=list(children))


def r(base: Term, step: Term) -> Node:
    return Node(op="r", children=[base, step])


def term_arity(term: Term) -> Arity:
    if isinstance(term, BasicFunction):
        return (term.arity, term.coarity)
    if isinstance(term, OpenLeaf):
        return (term.arity, term.coarity)
    expected, reason = expected_output_arity(term.op, [term_arity(child) for child in term.children])
    if reason is not None:
        raise ArityMismatchError(f"Cannot build {term.op}-vertex: {reason}")
    return expected


class _Assembly:
    def __init__(self) -> None:
        self.flags: List[str] = []
        self.vertices: List[str] = []
        self.boundary: Dict[str, str] = {}
        self.involution: Dict[str, str] = {}
        self.labels: Dict[str, FlagLabel] = {}
        self.arity: Dict[str, Arity] = {}
        self.input_order: Dict[str, List[str]] = {}
        self.ops: Dict[str, Op] = {}
        self.basics: Dict[str, BasicFunction] = {}
        self.edge_count = 0
        self.input_count = 0

    def flag(self, name: str, vertex: str, orient: Orientation, arity: Arity) -> str:
        self.flags.append(name)
        self.boundary[name] = vertex
        self.involution[name] = name
        self.labels[name] = FlagLabel(orient=orient)
        self.arity[name] = arity
        return name

    def vertex(self, node: Node, output: str, output_arity: Arity) -> None:
        """Add the vertex for node; output is the name of its output flag."""
        v = f"v{len(self.vertices)}"
        self.vertices.append(v)
        self.ops[v] = node.op
        self.flag(output, v, Orientation.OUT, output_arity)
        order: List[str] = []
        for child in node.children:
            child_arity = term_arity(child)
            if isinstance(child, Node):
                n = self.edge_count
                self.edge_count += 1
                upper = self.flag(f"e{n}.in", v, Orientation.IN, child_arity)
                order.append(upper)
                lower = f"e{n}.out"
                self.vertex(child, lower, child_arity)
                self.involution[upper], self.involution[lower] = lower, upper
            else:
                tail = self.flag(f"in{self.input_count}", v, Orientation.IN, child_arity)
                self.input_count += 1
                if isinstance(child, BasicFunction):
                    self.basics[tail] = child
                order.append(tail)
        self.input_order[v] = order


def build_flowchart(*terms: Term, validate: bool = True) -> Flowchart:
    """
    One component per term, in the given order.

    A top-level leaf is wrapped in a unary c-vertex so that every component has
    a vertex, a root and at least one input.
    """
    assembly = _Assembly()
    roots: Dict[str, str] = {}
    order: List[str] = []
    for index, term in enumerate(terms):
        node = term if isinstance(term, Node) else c(term)
        root = f"r{index}"
        assembly.vertex(node, root, term_arity(node))
        roots[f"c{index}"] = root
        order.append(f"c{index}")
    graph = CombinatorialGraph.build(
        assembly.flags, assembly.vertices, assembly.boundary, assembly.involution,
        Decoration.model_construct(flag_labels=assembly.labels, vertex_labels={}),
    )
    chart = Flowchart(
        graph=graph, roots=roots, component_order=order, input_order=assembly.input_order,
        arity=assembly.arity, ops=assembly.ops, basics=assembly.basics,
    )
    return ensure_valid_flowchart(chart) if validate else chart


# Frequently used charts.
def successor_chart() -> Flowchart:
    return build_flowchart(BasicFunction.succ())


def addition_term() -> Node:
    """add(x, k) = x + k."""
    return r(BasicFunction.succ(), c(BasicFunction.proj(2, 2), BasicFunction.succ()))


def shifted_addition_term() -> Node:
    """g(x, k) = x + k - 1."""
    return r(BasicFunction.proj(1, 1), c(BasicFunction.proj(2, 2), BasicFunction.succ()))


def multiplication_term() -> Node:
    """mul(x, k) = x * k."""
    return r(BasicFunction.proj(1, 1), addition_term())


def term_summary(term: Term, depth: Optional[int] = None) -> str:
    """Compact text form, e.g. r(pr1^1,c(pr2^2,succ))."""
    if isinstance(term, BasicFunction):
        return term.name
    if isinstance(term, OpenLeaf):
        return f"?{term.arity},{term.coarity}"
    if depth == 0:
        return f"{term.op}(...)"
    inner = ",".join(term_summary(child, None if depth is None else depth - 1) for child in term.children)
    return f"{term.op}({inner})"


def term_from_document(document: Union[dict, str]) -> Term:
    """Parse {"op": .., "children": [..]}, {"kind": ..} basics and {"open": [a, c]} leaves."""
    if isinstance(document, str):
        if document == "succ":
            return BasicFunction.succ()
        raise ArityMismatchError(f"Unknown term shorthand {document!r}")
    if "op" in document:
        return Node(op=document["op"], children=[term_from_document(x) for x in document.get("children", [])])
    if "open" in document:
        a, co = document["open"]
        return OpenLeaf(arity=a, coarity=co)
    return BasicFunction(**document)
