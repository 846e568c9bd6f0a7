"""Standard small graphs used throughout the test-suite and the CLI samples."""
from typing import Dict, List, Optional, Sequence, Tuple

from hopfflow.graphs.combinatorial import CombinatorialGraph, Decoration, FlagLabel, Orientation

EdgeSpec = Tuple[str, str]


def assemble(
    vertices: Sequence[str],
    edges: Sequence[EdgeSpec] = (),
    tails: Sequence[Tuple[str, Optional[Orientation]]] = (),
    oriented: bool = False,
    vertex_labels: Optional[Dict[str, str]] = None,
) -> CombinatorialGraph:
    """
    Build a graph from vertex names, edges and tails.

    Edge (u, w) gets flags "u>w#k" at u and "w<u#k" at w; when oriented is set
    the edge runs from u to w. Tails get flags "t#k" at their vertex.
    """
    flags: List[str] = []
    boundary: Dict[str, str] = {}
    involution: Dict[str, str] = {}
    labels: Dict[str, FlagLabel] = {}
    for index, (u, w) in enumerate(edges):
        out_flag, in_flag = f"{u}>{w}#{index}", f"{w}<{u}#{index}"
        flags += [out_flag, in_flag]
        boundary[out_flag], boundary[in_flag] = u, w
        involution[out_flag], involution[in_flag] = in_flag, out_flag
        if oriented:
            labels[out_flag] = FlagLabel(orient=Orientation.OUT)
            labels[in_flag] = FlagLabel(orient=Orientation.IN)
    for index, (v, orient) in enumerate(tails):
        tail = f"t#{index}"
        flags.append(tail)
        boundary[tail] = v
        involution[tail] = tail
        if orient is not None:
            labels[tail] = FlagLabel(orient=orient)
    return CombinatorialGraph.build(
        flags, vertices, boundary, involution,
        Decoration.model_construct(flag_labels=labels, vertex_labels=dict(vertex_labels or {})),
    )


def corolla(tails: int = 3, orientations: Optional[Sequence[Orientation]] = None) -> CombinatorialGraph:
    orients = list(orientations) if orientations is not None else [None] * tails
    return assemble(["v"], tails=[("v", o) for o in orients])


def loop_graph() -> CombinatorialGraph:
    return assemble(["v"], [("v", "v")])


def single_edge() -> CombinatorialGraph:
    return assemble(["u", "w"], [("u", "w")])


def banana(edges: int = 2) -> CombinatorialGraph:
    return assemble(["u", "w"], [("u", "w")] * edges)


def theta_graph() -> CombinatorialGraph:
    return banana(3)


def dumbbell_graph() -> CombinatorialGraph:
    return assemble(["u", "w"], [("u", "u"), ("u", "w"), ("w", "w")])


def directed_path(length: int = 2, tails: bool = True) -> CombinatorialGraph:
    """
    Oriented path v0 -> v1 -> ... of the given vertex count.

    With tails, the first vertex carries an input tail and the last an output tail.
    """
    vertices = [f"v{i}" for i in range(length)]
    edges = [(vertices[i], vertices[i + 1]) for i in range(length - 1)]
    tail_specs = [(vertices[0], Orientation.IN), (vertices[-1], Orientation.OUT)] if tails else []
    return assemble(vertices, edges, tail_specs, oriented=True)


def directed_chain(tails: bool = True) -> CombinatorialGraph:
    return directed_path(2, tails)


def oriented_two_cycle() -> CombinatorialGraph:
    return assemble(["u", "w"], [("u", "w"), ("w", "u")], oriented=True)


def oriented_loop() -> CombinatorialGraph:
    return assemble(["v"], [("v", "v")], oriented=True)


def oriented_corolla(inputs: int = 1, outputs: int = 1) -> CombinatorialGraph:
    return corolla(inputs + outputs, [Orientation.IN] * inputs + [Orientation.OUT] * outputs)


STANDARD_GRAPHS = {
    "loop": loop_graph,
    "edge": single_edge,
    "banana": banana,
    "theta": theta_graph,
    "dumbbell": dumbbell_graph,
    "chain": directed_chain,
    "path3": lambda: directed_path(3),
    "two_cycle": oriented_two_cycle,
    "oriented_loop": oriented_loop,
    "corolla": oriented_corolla,
}
