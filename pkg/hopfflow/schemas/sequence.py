"""Sequence, polynomial and vertex-cost file schemas."""
from typing import Dict, List, Literal, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from hopfflow.sequences.algebra import TruncatedSequence
from hopfflow.sequences.gamma import PolyInT
from hopfflow.utils.rationals import parse_rational

Number = Union[int, float, str]


class SequenceFile(BaseModel):
    """
    {"mode": "exact"|"float", "entries": [...]}. A bare JSON array is read as
    exact when every entry is an integer or a rational string, float otherwise.
    """
    mode: Literal["exact", "float"] = "exact"
    entries: List[Number] = Field(default_factory=list)

    @model_validator(mode="before")
    @classmethod
    def from_array(cls, data):
        if isinstance(data, list):
            exact = all(isinstance(x, (int, str)) and not isinstance(x, bool) for x in data)
            return {"mode": "exact" if exact else "float", "entries": data}
        return data

    @model_validator(mode="after")
    def check_entries(self) -> "SequenceFile":
        for x in self.entries:
            if self.mode == "exact":
                if isinstance(x, float):
                    raise ValueError(f"Float entry {x} in an exact sequence")
                parse_rational(x)
            else:
                float(x)
        return self

    def to_sequence(self) -> TruncatedSequence:
        return TruncatedSequence(self.entries, self.mode)

    @classmethod
    def from_sequence(cls, sequence: TruncatedSequence) -> "SequenceFile":
        return cls.model_validate(sequence.to_document())


class PolynomialFile(BaseModel):
    """A JSON array of coefficients, index = degree."""
    coefficients: List[Number] = Field(default_factory=list)

    @model_validator(mode="before")
    @classmethod
    def from_array(cls, data):
        if isinstance(data, list):
            return {"coefficients": data}
        return data

    def to_polynomial(self) -> PolyInT:
        return PolyInT.from_document(self.coefficients)


class CostsFile(BaseModel):
    """Vertex costs, {"costs": {vertex: cost}}; vertices left out cost 0."""
    costs: Dict[str, float] = Field(default_factory=dict)

    @field_validator("costs")
    @classmethod
    def non_negative(cls, costs: Dict[str, float]) -> Dict[str, float]:
        negative = [v for v, c in costs.items() if c < 0]
        if negative:
            raise ValueError(f"Negative costs at {negative}")
        return costs
