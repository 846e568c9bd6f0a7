"""Hopf element and finite category file schemas."""
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, Field, field_validator

from hopfflow.hopf.algebra import HopfElement
from hopfflow.hopf.category import FiniteCategory
from hopfflow.schemas.graph import GraphFile
from hopfflow.utils.rationals import format_rational, parse_rational


class HopfTerm(BaseModel):
    """One term: a rational coefficient times a graph or a product of graphs."""
    coeff: str = "1"
    graph: Union[GraphFile, List[GraphFile]]

    @field_validator("coeff", mode="before")
    @classmethod
    def stringify_coeff(cls, value):
        return str(value) if isinstance(value, int) and not isinstance(value, bool) else value


def element_from_terms(terms: List[HopfTerm], family: str = "oriented") -> HopfElement:
    result = HopfElement.zero(family)
    for term in terms:
        graphs = term.graph if isinstance(term.graph, list) else [term.graph]
        result = result + HopfElement.from_product(
            [g.to_graph() for g in graphs], parse_rational(term.coeff), family,
        )
    return result


def element_document(x: HopfElement) -> List[dict]:
    return [
        {"coeff": format_rational(coeff), "graph": GraphFile.from_graph(graph).to_document()}
        for graph, coeff in x.items()
    ]


def tensor_document(items) -> List[dict]:
    return [
        {"coeff": format_rational(coeff),
         "factors": [GraphFile.from_graph(graph).to_document() for graph in factors]}
        for factors, coeff in items
    ]


class CategoryFile(BaseModel):
    """Finite category: composition lists [g, h, g∘h]."""
    objects: List[str]
    morphisms: Dict[str, Tuple[str, str]]
    identities: Dict[str, str]
    composition: List[Tuple[str, str, str]] = Field(default_factory=list)

    def to_category(self) -> FiniteCategory:
        return FiniteCategory.create(
            self.objects, dict(self.morphisms), dict(self.identities),
            {(g, h): gh for g, h, gh in self.composition},
        )
