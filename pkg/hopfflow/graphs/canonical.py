"""
Canonical forms and automorphism counts of decorated combinatorial graphs.

Vertices are first split into color classes by iterated refinement over
labels, valences, tails and neighbourhoods. Every ordering of the vertices
compatible with the classes is then encoded and the smallest encoding wins.
Orderings reaching the minimum are exactly the vertex images of automorphisms,
so the automorphism group order falls out of the same search once the
automorphisms fixing every vertex (permutations of parallel edges, equal
tails and loop flips) are multiplied in.
"""
import itertools
import json
import logging
import math
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from hopfflow.graphs.combinatorial import (
    CombinatorialGraph, Decoration, FlagLabel, Orientation,
)
from hopfflow.graphs.structure import connected_components

logger = logging.getLogger(__name__)

FlagKey = Tuple[str, str]
EdgeCode = Tuple[int, int, FlagKey, FlagKey]


class CanonicalForm(BaseModel):
    """Canonical key, automorphism group order and canonical representative of one graph."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    key: bytes
    automorphisms: int
    graph: CombinatorialGraph


class _ComponentForm(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    text: str
    automorphisms: int
    order: List[str]
    vertex_codes: List[Tuple]
    edge_codes: List[EdgeCode]


def _relabel(signatures: Dict[str, Tuple]) -> Dict[str, int]:
    ranking = {sig: index for index, sig in enumerate(sorted(set(signatures.values())))}
    return {v: ranking[sig] for v, sig in signatures.items()}


def _incidence(graph: CombinatorialGraph, vertices: Sequence[str]) -> Dict[str, List[str]]:
    incident: Dict[str, List[str]] = {v: [] for v in vertices}
    for f in graph.flags:
        v = graph.boundary[f]
        if v in incident:
            incident[v].append(f)
    return incident


def _refine(graph: CombinatorialGraph, dec: Decoration, vertices: Sequence[str],
            incident: Dict[str, List[str]]) -> Dict[str, int]:
    def base(v: str) -> Tuple:
        tails = sorted(dec.flag_key(f) for f in incident[v] if graph.involution[f] == f)
        return (dec.vertex_label(v), len(incident[v]), tuple(tails))

    colors = _relabel({v: base(v) for v in vertices})
    while True:
        signatures = {}
        for v in vertices:
            neighbourhood = sorted(
                (dec.flag_key(f), dec.flag_key(graph.involution[f]), colors[graph.boundary[graph.involution[f]]])
                for f in incident[v] if graph.involution[f] != f
            )
            signatures[v] = (colors[v], tuple(neighbourhood))
        refined = _relabel(signatures)
        if len(set(refined.values())) == len(set(colors.values())):
            return refined
        colors = refined


def _fixing_automorphisms(edge_codes: List[EdgeCode], tail_codes: List[Tuple[int, FlagKey]]) -> int:
    """Order of the group of automorphisms inducing the identity on vertices."""
    count = 1
    for multiplicity in Counter(tail_codes).values():
        count *= math.factorial(multiplicity)
    for code, multiplicity in Counter(edge_codes).items():
        count *= math.factorial(multiplicity)
        pos_a, pos_b, key_a, key_b = code
        if pos_a == pos_b and key_a == key_b:
            count *= 2 ** multiplicity
    return count


def _component_form(graph: CombinatorialGraph, dec: Decoration, vertices: List[str]) -> _ComponentForm:
    incident = _incidence(graph, vertices)
    colors = _refine(graph, dec, vertices, incident)

    cells: Dict[int, List[str]] = {}
    for v in sorted(vertices):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]

    edges = [
        (f, graph.involution[f]) for v in vertices for f in incident[v]
        if graph.involution[f] != f and f < graph.involution[f]
    ]

    def tails(v: str) -> Tuple[FlagKey, ...]:
        return tuple(sorted(dec.flag_key(f) for f in incident[v] if graph.involution[f] == f))

    best: Optional[List[EdgeCode]] = None
    best_order: List[str] = []
    hits = 0
    for combination in itertools.product(*(itertools.permutations(cell) for cell in ordered_cells)):
        order = [v for cell in combination for v in cell]
        position = {v: i for i, v in enumerate(order)}
        codes = []
        for f, g in edges:
            a = (position[graph.boundary[f]], dec.flag_key(f))
            b = (position[graph.boundary[g]], dec.flag_key(g))
            if b < a:
                a, b = b, a
            codes.append((a[0], b[0], a[1], b[1]))
        codes.sort()
        if best is None or codes < best:
            best, best_order, hits = codes, order, 1
        elif codes == best:
            hits += 1

    best = best or []
    vertex_codes = [(colors[v], dec.vertex_label(v), tails(v)) for v in best_order]
    tail_codes = [(i, key) for i, code in enumerate(vertex_codes) for key in code[2]]
    text = json.dumps([vertex_codes, best], separators=(",", ":"))
    return _ComponentForm(
        text=text,
        automorphisms=hits * _fixing_automorphisms(best, tail_codes),
        order=best_order,
        vertex_codes=vertex_codes,
        edge_codes=best,
    )


def _label_from_key(key: FlagKey) -> Optional[FlagLabel]:
    orient, label = key
    if not orient and not label:
        return None
    return FlagLabel(orient=Orientation(orient) if orient else None, label=label or None)


def _representative(forms: List[_ComponentForm]) -> CombinatorialGraph:
    flags: List[str] = []
    vertices: List[str] = []
    boundary: Dict[str, str] = {}
    involution: Dict[str, str] = {}
    flag_labels: Dict[str, FlagLabel] = {}
    vertex_labels: Dict[str, str] = {}

    def new_flag(vertex: str, key: FlagKey) -> str:
        name = f"f{len(flags)}"
        flags.append(name)
        boundary[name] = vertex
        label = _label_from_key(key)
        if label is not None:
            flag_labels[name] = label
        return name

    for form in forms:
        offset = len(vertices)
        for _, vertex_label, tail_keys in form.vertex_codes:
            name = f"v{len(vertices)}"
            vertices.append(name)
            if vertex_label:
                vertex_labels[name] = vertex_label
            for key in tail_keys:
                tail = new_flag(name, tuple(key))
                involution[tail] = tail
        for pos_a, pos_b, key_a, key_b in form.edge_codes:
            a = new_flag(vertices[offset + pos_a], tuple(key_a))
            b = new_flag(vertices[offset + pos_b], tuple(key_b))
            involution[a], involution[b] = b, a

    return CombinatorialGraph.build(
        flags, vertices, boundary, involution,
        Decoration.model_construct(flag_labels=flag_labels, vertex_labels=vertex_labels),
    )


def canonicalize(graph: CombinatorialGraph, decoration: Optional[Decoration] = None) -> CanonicalForm:
    """Canonical key, automorphism count and representative in one pass."""
    dec = decoration if decoration is not None else graph.decoration
    forms = sorted(
        (_component_form(graph, dec, vertices) for vertices in connected_components(graph)),
        key=lambda form: form.text,
    )
    automorphisms = 1
    for form in forms:
        automorphisms *= form.automorphisms
    for multiplicity in Counter(form.text for form in forms).values():
        automorphisms *= math.factorial(multiplicity)
    key = ("[" + ",".join(form.text for form in forms) + "]").encode("utf-8")
    return CanonicalForm(key=key, automorphisms=automorphisms, graph=_representative(forms))


def canonical_form(graph: CombinatorialGraph, decoration: Optional[Decoration] = None) -> bytes:
    return canonicalize(graph, decoration).key


def automorphism_count(graph: CombinatorialGraph, decoration: Optional[Decoration] = None) -> int:
    return canonicalize(graph, decoration).automorphisms


def canonical_graph(graph: CombinatorialGraph, decoration: Optional[Decoration] = None) -> CombinatorialGraph:
    return canonicalize(graph, decoration).graph


def are_isomorphic(first: CombinatorialGraph, second: CombinatorialGraph) -> bool:
    return canonical_form(first) == canonical_form(second)


def brute_force_automorphisms(graph: CombinatorialGraph, decoration: Optional[Decoration] = None) -> int:
    """
    Count automorphisms by trying every flag permutation.

    A permutation counts when it commutes with the involution, preserves flag
    labels and induces a label-preserving bijection on vertices. Only usable for
    small graphs; it is the reference for automorphism_count.
    """
    dec = decoration if decoration is not None else graph.decoration
    flags = list(graph.flags)
    count = 0
    for image in itertools.permutations(flags):
        h = dict(zip(flags, image))
        if any(dec.flag_key(f) != dec.flag_key(h[f]) for f in flags):
            continue
        if any(h[graph.involution[f]] != graph.involution[h[f]] for f in flags):
            continue
        vertex_map: Dict[str, str] = {}
        consistent = True
        for f in flags:
            source, target = graph.boundary[f], graph.boundary[h[f]]
            if vertex_map.setdefault(source, target) != target:
                consistent = False
                break
        if not consistent or len(set(vertex_map.values())) != len(vertex_map):
            continue
        if any(dec.vertex_label(v) != dec.vertex_label(w) for v, w in vertex_map.items()):
            continue
        count += 1
    return count
