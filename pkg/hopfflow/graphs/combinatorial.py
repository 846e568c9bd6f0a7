"""Combinatorial graphs: flags, vertices, boundary map and involution, plus decorations."""
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field

from hopfflow.core.exceptions import GraphValidationError, MissingOrientationError


class Orientation(str, Enum):
    """Flag orientation relative to its vertex."""
    IN = "in"
    OUT = "out"


class FlagLabel(BaseModel):
    """Decoration of one flag: orientation plus an optional auxiliary label."""
    model_config = ConfigDict(frozen=True)

    orient: Optional[Orientation] = None
    label: Optional[str] = None

    def key(self) -> Tuple[str, str]:
        return (self.orient.value if self.orient else "", self.label or "")


_BLANK_LABEL = FlagLabel()


class Decoration(BaseModel):
    """L-decoration: labels on flags and vertices."""
    model_config = ConfigDict(frozen=True)

    flag_labels: Dict[str, FlagLabel] = Field(default_factory=dict)
    vertex_labels: Dict[str, str] = Field(default_factory=dict)

    def flag_label(self, flag: str) -> FlagLabel:
        return self.flag_labels.get(flag, _BLANK_LABEL)

    def flag_key(self, flag: str) -> Tuple[str, str]:
        return self.flag_label(flag).key()

    def vertex_label(self, vertex: str) -> str:
        return self.vertex_labels.get(vertex, "")

    def orientation(self, flag: str) -> Optional[Orientation]:
        return self.flag_label(flag).orient

    def restrict(self, flags: Iterable[str], vertices: Iterable[str]) -> "Decoration":
        flag_set, vertex_set = set(flags), set(vertices)
        return Decoration.model_construct(
            flag_labels={f: lab for f, lab in self.flag_labels.items() if f in flag_set},
            vertex_labels={v: lab for v, lab in self.vertex_labels.items() if v in vertex_set},
        )


class CombinatorialGraph(BaseModel):
    """
    A graph as two finite sets with a boundary map and an involution on flags.

    Edges are the 2-element orbits of the involution, tails its fixed points.
    The decoration travels with the graph; operations taking an explicit
    decoration use it instead.
    """
    model_config = ConfigDict(frozen=True)

    flags: Tuple[str, ...] = ()
    vertices: Tuple[str, ...] = ()
    boundary: Dict[str, str] = Field(default_factory=dict)
    involution: Dict[str, str] = Field(default_factory=dict)
    decoration: Decoration = Field(default_factory=Decoration)

    @classmethod
    def build(
        cls,
        flags: Iterable[str],
        vertices: Iterable[str],
        boundary: Dict[str, str],
        involution: Dict[str, str],
        decoration: Optional[Decoration] = None,
    ) -> "CombinatorialGraph":
        """Construct without re-validating trusted internal data."""
        return cls.model_construct(
            flags=tuple(flags),
            vertices=tuple(vertices),
            boundary=dict(boundary),
            involution=dict(involution),
            decoration=decoration if decoration is not None else Decoration.model_construct(
                flag_labels={}, vertex_labels={}
            ),
        )

    @classmethod
    def empty(cls) -> "CombinatorialGraph":
        return cls.build((), (), {}, {})

    def with_decoration(self, decoration: Decoration) -> "CombinatorialGraph":
        return CombinatorialGraph.build(
            self.flags, self.vertices, self.boundary, self.involution, decoration
        )

    @property
    def is_empty(self) -> bool:
        return not self.flags and not self.vertices

    @property
    def edges(self) -> List[Tuple[str, str]]:
        """Edges as (f, j(f)) pairs with f < j(f)."""
        return sorted(
            (f, self.involution[f]) for f in self.flags
            if f in self.involution and f < self.involution[f]
        )

    @property
    def tails(self) -> List[str]:
        return sorted(f for f in self.flags if self.involution.get(f) == f)

    def flags_at(self, vertex: str) -> List[str]:
        return sorted(f for f in self.flags if self.boundary.get(f) == vertex)

    def valence(self, vertex: str) -> int:
        return sum(1 for f in self.flags if self.boundary.get(f) == vertex)

    def is_oriented(self) -> bool:
        return all(self.decoration.orientation(f) is not None for f in self.flags)

    def require_oriented(self) -> None:
        missing = [f for f in self.flags if self.decoration.orientation(f) is None]
        if missing:
            raise MissingOrientationError(f"Flags without orientation: {', '.join(sorted(missing))}")

    def oriented_edges(self) -> List[Tuple[str, str, str, str]]:
        """Oriented edges as (source vertex, target vertex, out flag, in flag)."""
        self.require_oriented()
        result = []
        for f, g in self.edges:
            if self.decoration.orientation(f) == Orientation.OUT:
                out_flag, in_flag = f, g
            else:
                out_flag, in_flag = g, f
            result.append((self.boundary[out_flag], self.boundary[in_flag], out_flag, in_flag))
        return result

    def induced(self, vertices: Iterable[str]) -> "CombinatorialGraph":
        """
        Subgraph on the given vertices keeping every incident flag.

        Edges leaving the vertex set are severed: both halves become tails and
        keep their own identifiers and labels.
        """
        vertex_set = set(vertices)
        flags = [f for f in self.flags if self.boundary[f] in vertex_set]
        flag_set = set(flags)
        involution = {
            f: (self.involution[f] if self.involution[f] in flag_set else f) for f in flags
        }
        kept_vertices = [v for v in self.vertices if v in vertex_set]
        return CombinatorialGraph.build(
            flags,
            kept_vertices,
            {f: self.boundary[f] for f in flags},
            involution,
            self.decoration.restrict(flags, kept_vertices),
        )

    def relabeled(self, prefix: str) -> "CombinatorialGraph":
        """Copy with every identifier prefixed (used for disjoint unions)."""
        def rename(x: str) -> str:
            return f"{prefix}{x}"

        decoration = Decoration.model_construct(
            flag_labels={rename(f): lab for f, lab in self.decoration.flag_labels.items()},
            vertex_labels={rename(v): lab for v, lab in self.decoration.vertex_labels.items()},
        )
        return CombinatorialGraph.build(
            [rename(f) for f in self.flags],
            [rename(v) for v in self.vertices],
            {rename(f): rename(v) for f, v in self.boundary.items()},
            {rename(f): rename(g) for f, g in self.involution.items()},
            decoration,
        )


class Violation(BaseModel):
    """One failed invariant."""
    code: str
    message: str
    flag: Optional[str] = None
    vertex: Optional[str] = None


class ValidationReport(BaseModel):
    """Result of validate_graph; valid iff no violations."""
    violations: List[Violation] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def raise_for_violations(self) -> None:
        if self.violations:
            summary = "; ".join(v.message for v in self.violations)
            raise GraphValidationError(f"Invalid graph: {summary}")


def validate_graph(graph: CombinatorialGraph, decoration: Optional[Decoration] = None) -> ValidationReport:
    """
    Check every combinatorial graph invariant and report each violation.

    Never raises; callers that need a valid graph use ensure_valid.
    """
    dec = decoration if decoration is not None else graph.decoration
    violations: List[Violation] = []
    flag_set = set(graph.flags)
    vertex_set = set(graph.vertices)

    if len(flag_set) != len(graph.flags):
        violations.append(Violation(code="duplicate_flag", message="Duplicate flag identifiers"))
    if len(vertex_set) != len(graph.vertices):
        violations.append(Violation(code="duplicate_vertex", message="Duplicate vertex identifiers"))

    for f in graph.flags:
        v = graph.boundary.get(f)
        if v is None:
            violations.append(Violation(
                code="boundary_missing", message=f"Flag {f} has no boundary vertex", flag=f
            ))
        elif v not in vertex_set:
            violations.append(Violation(
                code="boundary_unknown_vertex",
                message=f"Flag {f} is bounded to unknown vertex {v}", flag=f, vertex=v
            ))
        partner = graph.involution.get(f)
        if partner is None:
            violations.append(Violation(
                code="involution_missing", message=f"Involution undefined on flag {f}", flag=f
            ))
        elif partner not in flag_set:
            violations.append(Violation(
                code="involution_unknown_flag",
                message=f"Involution sends {f} to unknown flag {partner}", flag=f
            ))
        elif graph.involution.get(partner) != f:
            violations.append(Violation(
                code="not_involution",
                message=f"Involution is not self-inverse at flag {f}", flag=f
            ))

    for extra in sorted(set(graph.boundary) - flag_set):
        violations.append(Violation(
            code="boundary_unknown_flag", message=f"Boundary defined on unknown flag {extra}", flag=extra
        ))
    for extra in sorted(set(graph.involution) - flag_set):
        violations.append(Violation(
            code="involution_unknown_flag", message=f"Involution defined on unknown flag {extra}", flag=extra
        ))

    covered = {graph.boundary.get(f) for f in graph.flags}
    for v in graph.vertices:
        if v not in covered:
            violations.append(Violation(
                code="isolated_vertex", message=f"Vertex {v} is incident to no flag", vertex=v
            ))

    for f in sorted(set(dec.flag_labels) - flag_set):
        violations.append(Violation(
            code="label_unknown_flag", message=f"Label attached to unknown flag {f}", flag=f
        ))
    for v in sorted(set(dec.vertex_labels) - vertex_set):
        violations.append(Violation(
            code="label_unknown_vertex", message=f"Label attached to unknown vertex {v}", vertex=v
        ))

    for f in graph.flags:
        partner = graph.involution.get(f)
        if partner is None or partner == f or partner not in flag_set or f > partner:
            continue
        a, b = dec.orientation(f), dec.orientation(partner)
        if a is not None and b is not None and a == b:
            violations.append(Violation(
                code="orientation_clash",
                message=f"Edge halves {f} and {partner} carry the same orientation {a.value}",
                flag=f,
            ))
        elif (a is None) != (b is None):
            violations.append(Violation(
                code="orientation_partial",
                message=f"Only one half of edge {f}/{partner} is oriented",
                flag=f,
            ))

    return ValidationReport(violations=violations)


def ensure_valid(graph: CombinatorialGraph) -> CombinatorialGraph:
    validate_graph(graph).raise_for_violations()
    return graph


def euler_characteristic(graph: CombinatorialGraph) -> int:
    """|V| - |E|."""
    return len(graph.vertices) - len(graph.edges)


def disjoint_union(first: CombinatorialGraph, second: CombinatorialGraph) -> CombinatorialGraph:
    """Coproduct of structured sets; identifiers are made disjoint by prefixing."""
    if first.is_empty:
        return second
    if second.is_empty:
        return first
    left, right = first.relabeled("a."), second.relabeled("b.")
    decoration = Decoration.model_construct(
        flag_labels={**left.decoration.flag_labels, **right.decoration.flag_labels},
        vertex_labels={**left.decoration.vertex_labels, **right.decoration.vertex_labels},
    )
    return CombinatorialGraph.build(
        left.flags + right.flags,
        left.vertices + right.vertices,
        {**left.boundary, **right.boundary},
        {**left.involution, **right.involution},
        decoration,
    )


def disjoint_union_all(graphs: Iterable[CombinatorialGraph]) -> CombinatorialGraph:
    result = CombinatorialGraph.empty()
    for index, g in enumerate(graphs):
        if g.is_empty:
            continue
        part = g.relabeled(f"{index}.")
        decoration = Decoration.model_construct(
            flag_labels={**result.decoration.flag_labels, **part.decoration.flag_labels},
            vertex_labels={**result.decoration.vertex_labels, **part.decoration.vertex_labels},
        )
        result = CombinatorialGraph.build(
            result.flags + part.flags,
            result.vertices + part.vertices,
            {**result.boundary, **part.boundary},
            {**result.involution, **part.involution},
            decoration,
        )
    return result
