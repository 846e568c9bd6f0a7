"""Character file schema."""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from hopfflow.core.exceptions import CharacterError
from hopfflow.graphs.structure import is_connected
from hopfflow.renorm.characters import Character, LinearMap, TableMap, key_of
from hopfflow.renorm.laurent import LaurentValue, MSAlgebra, make_algebra
from hopfflow.schemas.graph import GraphFile
from hopfflow.utils.rationals import parse_rational


class CharacterValue(BaseModel):
    graph: GraphFile
    laurent: Dict[str, str]

    @field_validator("laurent", mode="before")
    @classmethod
    def stringify(cls, values):
        if isinstance(values, dict):
            return {str(k): str(v) if isinstance(v, int) and not isinstance(v, bool) else v
                    for k, v in values.items()}
        return values


class CharacterFile(BaseModel):
    """Values on graph classes; multiplicative files list connected classes only."""
    degree_bound: int = Field(ge=0)
    values: List[CharacterValue] = Field(default_factory=list)
    multiplicative: bool = True
    scheme: Literal["laurent", "complementary"] = "laurent"
    pole_cap: Optional[int] = Field(default=None, ge=0)
    regular_cap: Optional[int] = Field(default=None, ge=0)
    z0: str = "1"

    def algebra(self) -> MSAlgebra:
        return make_algebra(self.scheme, self.pole_cap, self.regular_cap, parse_rational(self.z0))

    def to_map(self, algebra: Optional[MSAlgebra] = None) -> LinearMap:
        algebra = algebra or self.algebra()
        table = {}
        for entry in self.values:
            graph = entry.graph.to_graph()
            if self.multiplicative and not is_connected(graph):
                raise CharacterError("Multiplicative character files list values on connected graphs only")
            table[key_of(graph)] = LaurentValue.from_document(entry.laurent, algebra.pole_cap, algebra.regular_cap)
        if self.multiplicative:
            return Character(algebra, generators=table)
        return TableMap(algebra, table)