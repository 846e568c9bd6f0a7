"""
Operational semantics of flowcharts.

op_apply turns an open flowchart plus one function per global input into the
function computed at the root, by induction over the vertices from the root:
c composes its inputs right to left, b juxtaposes them and r runs primitive
recursion with base case k = 1.
"""
import logging
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Union

from hopfflow.core.exceptions import ArityMismatchError, DomainError, FlowchartError
from hopfflow.prim.flowchart import Flowchart, ensure_valid_flowchart
from hopfflow.prim.functions import BasicFunction, Contract, StepCounter, Values, check_arguments

logger = logging.getLogger(__name__)

FunctionTable = Mapping[tuple, tuple]
InputFunction = Union[Contract, BasicFunction, FunctionTable]
Inputs = Union[Mapping[str, InputFunction], Sequence[InputFunction]]


def _as_tuple(value) -> tuple:
    return tuple(value) if isinstance(value, (tuple, list)) else (value,)


def table_contract(table: FunctionTable, arity: int, coarity: int, name: str = "table") -> Contract:
    """A contract backed by a finite table; arguments outside the table raise DomainError."""
    normalized = {_as_tuple(k): _as_tuple(v) for k, v in table.items()}

    def lookup(args: Values) -> Values:
        if args not in normalized:
            raise DomainError(f"{name} is not defined at {args}")
        return normalized[args]

    return Contract(arity, coarity, lookup, name)


def as_contract(value: InputFunction, arity: int, coarity: int, name: str) -> Contract:
    if isinstance(value, BasicFunction):
        contract = value.contract()
    elif isinstance(value, Contract):
        contract = value
    elif isinstance(value, Mapping):
        contract = table_contract(value, arity, coarity, name)
    else:
        raise FlowchartError(f"Input {name} must be a basic function, a contract or a table")
    if (contract.arity, contract.coarity) != (arity, coarity):
        raise ArityMismatchError(
            f"Input {name} has arity/coarity {(contract.arity, contract.coarity)}, expected {(arity, coarity)}"
        )
    return contract


def open_inputs(chart: Flowchart) -> List[str]:
    """Undecorated global inputs in component order, depth first."""
    result = []
    for component in chart.component_order:
        result += [t for t in chart.component_inputs(component) if t not in chart.basics]
    return result


def _leaf_contracts(chart: Flowchart, inputs: Optional[Inputs]) -> Dict[str, Contract]:
    if inputs is None:
        supplied: Dict[str, InputFunction] = {}
    elif isinstance(inputs, Mapping):
        supplied = dict(inputs)
    else:
        targets = open_inputs(chart)
        if len(inputs) != len(targets):
            raise ArityMismatchError(f"Chart has {len(targets)} open inputs, got {len(inputs)} functions")
        supplied = dict(zip(targets, inputs))

    unknown = set(supplied) - set(chart.global_inputs())
    if unknown:
        raise FlowchartError(f"Functions supplied for unknown inputs: {', '.join(sorted(unknown))}")

    leaves: Dict[str, Contract] = {}
    for tail in chart.global_inputs():
        value = supplied.get(tail, chart.basics.get(tail))
        if value is None:
            raise FlowchartError(f"Global input {tail} has neither a basic function nor a supplied function")
        a, co = chart.arity[tail]
        leaves[tail] = as_contract(value, a, co, tail)
    return leaves


class _Run:
    """State of one evaluation call: the step counter and the leaf functions."""

    def __init__(self, chart: Flowchart, leaves: Dict[str, Contract], counter: StepCounter):
        self.chart = chart
        self.leaves = {tail: contract.bind(counter) for tail, contract in leaves.items()}
        self.counter = counter

    def child(self, flag: str) -> Callable[..., Values]:
        graph = self.chart.graph
        partner = graph.involution[flag]
        if partner == flag:
            return self.leaves[flag]
        vertex = graph.boundary[partner]
        return lambda *args: self.vertex(vertex, args)

    def vertex(self, v: str, args: Values) -> Values:
        chart = self.chart
        a, co = chart.arity[chart.output_flag(v)]
        args = check_arguments(args, a, f"vertex {v}")
        self.counter.tick()
        children = [self.child(f) for f in chart.input_order[v]]
        op = chart.ops[v]
        if op == "c":
            values = args
            for f in children:
                values = f(*values)
            result = values
        elif op == "b":
            result = ()
            for f in children:
                result += f(*args)
        else:
            base, step = children
            x, k = args[:-1], args[-1]
            result = base(*x)
            for _ in range(k - 1):
                result = step(*x, *result)
        return check_arguments(result, co, f"result of vertex {v}")


def op_apply(chart: Flowchart, inputs: Optional[Inputs] = None, budget: Optional[int] = None) -> Contract:
    """
    The function Op(chart) applied to the given input functions.

    inputs maps global-input tails to functions, or lists functions for the
    undecorated inputs in open_inputs order; decorated inputs fall back to their
    basic function. A forest acts componentwise on consecutive argument blocks.
    Each call of the returned contract gets its own step budget.
    """
    ensure_valid_flowchart(chart)
    leaves = _leaf_contracts(chart, inputs)
    components = list(chart.component_order)
    arity, coarity = chart.root_arity()

    def run(args: Values) -> Values:
        state = _Run(chart, leaves, StepCounter(budget))
        result: Values = ()
        offset = 0
        for component in components:
            a, _ = chart.root_arity(component)
            result += state.vertex(chart.root_vertex(component), args[offset:offset + a])
            offset += a
        logger.debug(f"Flowchart evaluation used {state.counter.steps} steps")
        return result

    return Contract(arity, coarity, run, "flowchart")


def evaluate(chart: Flowchart, args: Sequence[int], budget: Optional[int] = None) -> Values:
    """Total output of a closed flowchart at args."""
    if not chart.is_closed():
        missing = [t for t in chart.global_inputs() if t not in chart.basics]
        raise FlowchartError(f"Flowchart is open; undecorated inputs: {', '.join(missing)}")
    return op_apply(chart, budget=budget)(*args)
