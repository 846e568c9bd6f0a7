"""Grafting composition, c/b localization and canonical forms of flowcharts."""
import logging
from typing import Dict, List, Sequence

from hopfflow.core.exceptions import ArityMismatchError, FlowchartError
from hopfflow.graphs.canonical import canonical_form
from hopfflow.graphs.combinatorial import (
    CombinatorialGraph, Decoration, FlagLabel, Orientation, disjoint_union_all,
)
from hopfflow.prim.flowchart import Flowchart, ensure_valid_flowchart

logger = logging.getLogger(__name__)


def compose_programs(parts: Sequence[Flowchart]) -> Flowchart:
    """
    Graft a fresh c-corolla onto the roots of the parts.

    The parts are applied first to last, so the result computes
    parts[-1] o ... o parts[0]. Identifiers of part i get the prefix "i.";
    the new vertex is "v", its inputs "in<i>" and its root "root".
    """
    if not parts:
        raise FlowchartError("compose_programs needs at least one part")
    for index, part in enumerate(parts):
        ensure_valid_flowchart(part)
        if len(part.roots) != 1:
            raise FlowchartError(f"Part {index} has {len(part.roots)} components; only trees can be grafted")
    arities = [part.root_arity() for part in parts]
    for index in range(len(parts) - 1):
        if arities[index][1] != arities[index + 1][0]:
            raise ArityMismatchError(
                f"Coarity {arities[index][1]} of part {index} does not match arity {arities[index + 1][0]} of part {index + 1}"
            )

    union = disjoint_union_all(part.graph for part in parts)
    flags = list(union.flags)
    boundary = dict(union.boundary)
    involution = dict(union.involution)
    labels = dict(union.decoration.flag_labels)
    arity: Dict[str, tuple] = {}
    input_order: Dict[str, List[str]] = {}
    ops: Dict[str, str] = {}
    basics = {}
    corolla_inputs = []
    for index, part in enumerate(parts):
        prefix = f"{index}."
        arity.update({prefix + f: value for f, value in part.arity.items()})
        input_order.update({prefix + v: [prefix + f for f in order] for v, order in part.input_order.items()})
        ops.update({prefix + v: op for v, op in part.ops.items()})
        basics.update({prefix + t: basic for t, basic in part.basics.items()})
        old_root = prefix + next(iter(part.roots.values()))
        new_input = f"in{index}"
        flags.append(new_input)
        boundary[new_input] = "v"
        involution[new_input], involution[old_root] = old_root, new_input
        labels[new_input] = FlagLabel(orient=Orientation.IN)
        arity[new_input] = arities[index]
        corolla_inputs.append(new_input)

    flags.append("root")
    boundary["root"] = "v"
    involution["root"] = "root"
    labels["root"] = FlagLabel(orient=Orientation.OUT)
    arity["root"] = (arities[0][0], arities[-1][1])
    input_order["v"] = corolla_inputs
    ops["v"] = "c"

    graph = CombinatorialGraph.build(
        flags, list(union.vertices) + ["v"], boundary, involution,
        Decoration.model_construct(flag_labels=labels, vertex_labels=dict(union.decoration.vertex_labels)),
    )
    return Flowchart(
        graph=graph, roots={"c0": "root"}, component_order=["c0"], input_order=input_order,
        arity=arity, ops=ops, basics=basics,
    )


def _mergeable_edge(chart: Flowchart):
    """Smallest (parent, child, parent flag, child flag) whose endpoints share a c or b label."""
    graph = chart.graph
    for f, g in graph.edges:
        for upper, lower in ((f, g), (g, f)):
            parent, child = graph.boundary[upper], graph.boundary[lower]
            if upper in chart.input_order[parent] and chart.ops[parent] == chart.ops[child] \
                    and chart.ops[parent] in ("c", "b"):
                return parent, child, upper, lower
    return None


def normalize(chart: Flowchart) -> Flowchart:
    """
    Contract every edge joining two c-vertices or two b-vertices.

    The child's inputs are spliced into the parent's input order in place of
    the contracted edge; surviving identifiers are kept. Idempotent and
    evaluation-preserving.
    """
    ensure_valid_flowchart(chart)
    current = chart
    contracted = 0
    while True:
        found = _mergeable_edge(current)
        if found is None:
            break
        parent, child, upper, lower = found
        graph = current.graph
        removed = {upper, lower}
        flags = [f for f in graph.flags if f not in removed]
        boundary = {f: (parent if graph.boundary[f] == child else graph.boundary[f]) for f in flags}
        involution = {f: graph.involution[f] for f in flags}
        decoration = graph.decoration.restrict(flags, [v for v in graph.vertices if v != child])
        new_graph = CombinatorialGraph.build(
            flags, [v for v in graph.vertices if v != child], boundary, involution, decoration,
        )
        input_order = {v: list(order) for v, order in current.input_order.items() if v != child}
        position = input_order[parent].index(upper)
        input_order[parent][position:position + 1] = current.input_order[child]
        current = current.model_copy(update={
            "graph": new_graph,
            "input_order": input_order,
            "arity": {f: value for f, value in current.arity.items() if f not in removed},
            "ops": {v: op for v, op in current.ops.items() if v != child},
        })
        contracted += 1
    if contracted:
        logger.debug(f"Normalization contracted {contracted} edges")
    return current


def flowchart_decoration(chart: Flowchart) -> Decoration:
    """
    Decoration encoding everything the semantics depends on.

    Vertices carry their operator; flags carry their input position (or "o"
    for outputs), arity/coarity and basic function code. The component order
    is left out.
    """
    labels = {}
    for v in chart.graph.vertices:
        output = chart.output_flag(v)
        labels[output] = FlagLabel(
            orient=Orientation.OUT, label=f"o|{chart.arity[output][0]},{chart.arity[output][1]}|",
        )
        for position, f in enumerate(chart.input_order[v]):
            basic = chart.basics.get(f)
            code = basic.code() if basic is not None else ""
            labels[f] = FlagLabel(
                orient=Orientation.IN, label=f"{position}|{chart.arity[f][0]},{chart.arity[f][1]}|{code}",
            )
    return Decoration.model_construct(flag_labels=labels, vertex_labels=dict(chart.ops))


def flowchart_canonical_form(chart: Flowchart) -> bytes:
    return canonical_form(chart.graph, flowchart_decoration(chart))
