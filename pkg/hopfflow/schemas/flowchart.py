"""Flowchart file schema: the graph file format plus the Prim decorations."""
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from hopfflow.core.exceptions import FlowchartError
from hopfflow.prim.flowchart import Flowchart, oriented_graph
from hopfflow.prim.functions import BasicFunction
from hopfflow.schemas.graph import GraphFile


class BasicSchema(BaseModel):
    kind: Literal["succ", "proj", "const"]
    i: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None


class FlowchartFile(GraphFile):
    """Schema for a flowchart file."""
    roots: Dict[str, str]
    component_order: List[str] = Field(default_factory=list)
    input_order: Dict[str, List[str]] = Field(default_factory=dict)
    arity: Dict[str, Tuple[int, int]] = Field(default_factory=dict)
    ops: Dict[str, Literal["c", "b", "r"]] = Field(default_factory=dict)
    basics: Dict[str, BasicSchema] = Field(default_factory=dict)

    def to_flowchart(self) -> Flowchart:
        """Build the chart; orientations missing from the file are derived from the roots."""
        graph = self.to_graph()
        try:
            graph = oriented_graph(graph, self.roots)
        except FlowchartError:
            # left for validate_flowchart to itemize
            pass
        return Flowchart(
            graph=graph,
            roots=dict(self.roots),
            component_order=list(self.component_order) or sorted(self.roots),
            input_order={v: list(order) for v, order in self.input_order.items()},
            arity=dict(self.arity),
            ops=dict(self.ops),
            basics={t: BasicFunction(**b.model_dump()) for t, b in self.basics.items()},
        )

    @classmethod
    def from_flowchart(cls, chart: Flowchart) -> "FlowchartFile":
        base = GraphFile.from_graph(chart.graph)
        return cls(
            **base.model_dump(),
            roots=dict(chart.roots),
            component_order=list(chart.component_order),
            input_order={v: list(order) for v, order in chart.input_order.items()},
            arity={f: tuple(value) for f, value in chart.arity.items()},
            ops=dict(chart.ops),
            basics={t: BasicSchema(**b.model_dump()) for t, b in chart.basics.items()},
        )

    def to_document(self) -> dict:
        document = super().to_document()
        if not document["basics"]:
            del document["basics"]
        return document
