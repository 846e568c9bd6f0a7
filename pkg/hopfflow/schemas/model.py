"""Toy-model file schema."""
from typing import Dict, List
from pydantic import BaseModel, Field, field_validator

from hopfflow.feynman.model import ModelData
from hopfflow.utils.rationals import format_rational, parse_rational


class ModelFile(BaseModel):
    """Schema for a model file: colors, metric rows and couplings keyed by "a1,a2,..."."""
    colors: List[str] = Field(..., min_length=1)
    g: List[List[str]]
    C: Dict[str, str] = Field(default_factory=dict)

    @field_validator("g", mode="before")
    @classmethod
    def stringify_metric(cls, rows):
        """Accept integer entries as well as "p/q" strings."""
        if isinstance(rows, list):
            return [[str(x) if isinstance(x, int) and not isinstance(x, bool) else x for x in row]
                    if isinstance(row, list) else row for row in rows]
        return rows

    @field_validator("C", mode="before")
    @classmethod
    def stringify_couplings(cls, values):
        if isinstance(values, dict):
            return {k: str(v) if isinstance(v, int) and not isinstance(v, bool) else v for k, v in values.items()}
        return values

    def to_model(self) -> ModelData:
        return ModelData.create(
            colors=self.colors,
            metric=[[parse_rational(x) for x in row] for row in self.g],
            couplings={tuple(k.split(",")): parse_rational(v) for k, v in self.C.items()},
        )

    @classmethod
    def from_model(cls, model: ModelData) -> "ModelFile":
        return cls(
            colors=list(model.colors),
            g=[[format_rational(x) for x in row] for row in model.metric],
            C={",".join(symbol): format_rational(value) for symbol, value in model.couplings.items()},
        )
