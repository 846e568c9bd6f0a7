"""Enumeration of isomorphism classes of small graphs."""
import itertools
import logging
from typing import Collection, Dict, Iterator, List, Optional, Sequence, Tuple

from hopfflow.config import settings
from hopfflow.core.exceptions import ResourceLimitError
from hopfflow.graphs.canonical import CanonicalForm, canonicalize
from hopfflow.graphs.combinatorial import CombinatorialGraph, Decoration, FlagLabel, Orientation
from hopfflow.graphs.structure import is_connected

logger = logging.getLogger(__name__)


def valence_partitions(total: int, allowed: Optional[Collection[int]] = None,
                       largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of positive valences summing to total."""
    if total == 0:
        yield ()
        return
    top = min(total, largest if largest is not None else total)
    for part in range(top, 0, -1):
        if allowed is not None and part not in allowed:
            continue
        for rest in valence_partitions(total - part, allowed, part):
            yield (part,) + rest


def perfect_matchings(items: Sequence[str]) -> Iterator[List[Tuple[str, str]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for index, partner in enumerate(rest):
        remaining = rest[:index] + rest[index + 1:]
        for matching in perfect_matchings(remaining):
            yield [(first, partner)] + matching


def involutions(items: Sequence[str]) -> Iterator[Dict[str, str]]:
    """Every involution of the items: partial matchings with the rest fixed."""
    if not items:
        yield {}
        return
    first, rest = items[0], items[1:]
    for tail in involutions(rest):
        yield {first: first, **tail}
    for index, partner in enumerate(rest):
        remaining = rest[:index] + rest[index + 1:]
        for tail in involutions(remaining):
            yield {first: partner, partner: first, **tail}


def _layout(valences: Tuple[int, ...]) -> Tuple[List[str], List[str], Dict[str, str]]:
    flags, vertices, boundary = [], [], {}
    for index, valence in enumerate(valences):
        vertex = f"v{index}"
        vertices.append(vertex)
        for _ in range(valence):
            flag = f"f{len(flags)}"
            flags.append(flag)
            boundary[flag] = vertex
    return flags, vertices, boundary


class _ClassCollector:
    """Deduplicates canonical forms and enforces the class cap."""

    def __init__(self, max_classes: Optional[int]):
        self.cap = max_classes if max_classes is not None else settings.MAX_CLASSES
        self.classes: Dict[bytes, CanonicalForm] = {}

    def add(self, graph: CombinatorialGraph) -> None:
        form = canonicalize(graph)
        if form.key in self.classes:
            return
        self.classes[form.key] = form
        if len(self.classes) > self.cap:
            logger.error(f"Enumeration exceeded the class cap of {self.cap}")
            raise ResourceLimitError(
                f"More than {self.cap} isomorphism classes; raise HOPFFLOW_MAX_CLASSES to continue"
            )

    def ordered(self) -> List[CanonicalForm]:
        return sorted(
            self.classes.values(),
            key=lambda f: (len(f.graph.edges), len(f.graph.vertices), len(f.graph.flags), f.key),
        )


def enumerate_graph_classes(
    max_edges: int,
    valence_profile: Optional[Collection[int]] = None,
    max_classes: Optional[int] = None,
) -> List[CanonicalForm]:
    """
    One canonical form per isomorphism class of tail-free graphs with at most max_edges edges.

    valence_profile restricts the allowed vertex valences. Classes are ordered
    by edge count, then vertex count, then canonical key.
    """
    if max_edges < 0:
        raise ValueError("max_edges must be non-negative")
    allowed = set(valence_profile) if valence_profile is not None else None
    collector = _ClassCollector(max_classes)
    for edge_count in range(max_edges + 1):
        for valences in valence_partitions(2 * edge_count, allowed):
            flags, vertices, boundary = _layout(valences)
            for matching in perfect_matchings(flags):
                involution = {}
                for f, g in matching:
                    involution[f], involution[g] = g, f
                collector.add(CombinatorialGraph.build(flags, vertices, boundary, involution))
        logger.info(f"Enumerated {len(collector.classes)} classes up to {edge_count} edges")
    return collector.ordered()


def enumerate_graphs(
    max_edges: int,
    valence_profile: Optional[Collection[int]] = None,
    max_classes: Optional[int] = None,
) -> List[CombinatorialGraph]:
    return [form.graph for form in enumerate_graph_classes(max_edges, valence_profile, max_classes)]


def enumerate_oriented_graphs(
    max_flags: int,
    allow_tails: bool = True,
    connected_only: bool = False,
    max_classes: Optional[int] = None,
) -> List[CanonicalForm]:
    """
    Oriented graphs with at most max_flags flags, every edge and tail oriented.

    Tails may be inputs or outputs; no auxiliary labels are attached.
    """
    if max_flags < 0:
        raise ValueError("max_flags must be non-negative")
    collector = _ClassCollector(max_classes)
    for flag_count in range(max_flags + 1):
        for valences in valence_partitions(flag_count):
            flags, vertices, boundary = _layout(valences)
            for involution in involutions(flags):
                tails = [f for f in flags if involution[f] == f]
                if tails and not allow_tails:
                    continue
                base = CombinatorialGraph.build(flags, vertices, boundary, involution)
                if connected_only and flags and not is_connected(base):
                    continue
                edges = base.edges
                for edge_flips in itertools.product((False, True), repeat=len(edges)):
                    for tail_outs in itertools.product((False, True), repeat=len(tails)):
                        labels: Dict[str, FlagLabel] = {}
                        for (f, g), flip in zip(edges, edge_flips):
                            out_flag, in_flag = (g, f) if flip else (f, g)
                            labels[out_flag] = FlagLabel(orient=Orientation.OUT)
                            labels[in_flag] = FlagLabel(orient=Orientation.IN)
                        for t, is_out in zip(tails, tail_outs):
                            labels[t] = FlagLabel(orient=Orientation.OUT if is_out else Orientation.IN)
                        collector.add(base.with_decoration(
                            Decoration.model_construct(flag_labels=labels, vertex_labels={})
                        ))
        logger.info(f"Enumerated {len(collector.classes)} oriented classes up to {flag_count} flags")
    return collector.ordered()
