"""Graph file schema."""
from typing import Dict, List, Optional
from pydantic import BaseModel, Field

from hopfflow.graphs.combinatorial import CombinatorialGraph, Decoration, FlagLabel, Orientation


class FlagLabelSchema(BaseModel):
    """Schema for one flag decoration."""
    orient: Optional[Orientation] = None
    label: Optional[str] = None


class GraphFile(BaseModel):
    """Schema for a decorated combinatorial graph file."""
    flags: List[str] = Field(default_factory=list)
    vertices: List[str] = Field(default_factory=list)
    boundary: Dict[str, str] = Field(default_factory=dict)
    involution: Dict[str, str] = Field(default_factory=dict)
    flag_labels: Dict[str, FlagLabelSchema] = Field(default_factory=dict)
    vertex_labels: Dict[str, str] = Field(default_factory=dict)

    def to_graph(self) -> CombinatorialGraph:
        """Build the graph; structural invariants are left to validate_graph."""
        decoration = Decoration(
            flag_labels={
                f: FlagLabel(orient=lab.orient, label=lab.label) for f, lab in self.flag_labels.items()
            },
            vertex_labels=dict(self.vertex_labels),
        )
        return CombinatorialGraph.build(
            self.flags, self.vertices, self.boundary, self.involution, decoration
        )

    @classmethod
    def from_graph(cls, graph: CombinatorialGraph) -> "GraphFile":
        return cls(
            flags=list(graph.flags),
            vertices=list(graph.vertices),
            boundary=dict(graph.boundary),
            involution=dict(graph.involution),
            flag_labels={
                f: FlagLabelSchema(orient=lab.orient, label=lab.label)
                for f, lab in graph.decoration.flag_labels.items()
            },
            vertex_labels=dict(graph.decoration.vertex_labels),
        )

    def to_document(self) -> dict:
        """JSON-ready dict; empty label maps and absent label fields are omitted."""
        document = self.model_dump(mode="json", exclude_none=True)
        for key in ("flag_labels", "vertex_labels"):
            if not document[key]:
                del document[key]
        return document
