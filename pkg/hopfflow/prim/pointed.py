"""
Partial maps, pointed sets and the reduction of partial maps to bijections.

A partial map on X is totalized to a pointed map on X with a basepoint "*"
adjoined; given an abelian group law on X with "*" as zero, the pointed map f
becomes the permutation (x, y) -> (x + f(y), y) of pairs.
"""
import itertools
import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from hopfflow.core.exceptions import GroupLawError

logger = logging.getLogger(__name__)

STAR = "*"
Pair = Tuple[str, str]


class PartialMap(BaseModel):
    """phi: X -> Y defined on the keys of table."""
    model_config = ConfigDict(frozen=True)

    source: List[str]
    target: Optional[List[str]] = None
    table: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def default_target(cls, data):
        if isinstance(data, dict) and data.get("target") is None and "source" in data:
            data = {**data, "target": list(data["source"])}
        return data

    @model_validator(mode="after")
    def check_table(self) -> "PartialMap":
        if STAR in self.source or STAR in self.target:
            raise ValueError(f"Carriers must not contain the basepoint {STAR!r}")
        for x, y in self.table.items():
            if x not in self.source:
                raise ValueError(f"{x!r} is not in the source carrier")
            if y not in self.target:
                raise ValueError(f"{y!r} is not in the target carrier")
        return self

    @property
    def domain(self) -> List[str]:
        return [x for x in self.source if x in self.table]


class TotalPointedMap(BaseModel):
    """f: X u {*} -> Y u {*} with f(*) = *."""
    model_config = ConfigDict(frozen=True)

    source: List[str]
    target: List[str]
    table: Dict[str, str]

    @model_validator(mode="after")
    def check_table(self) -> "TotalPointedMap":
        points = set(self.source) | {STAR}
        if set(self.table) != points:
            raise ValueError("A pointed map must be defined on every point and the basepoint")
        if self.table[STAR] != STAR:
            raise ValueError("A pointed map must send the basepoint to the basepoint")
        values = set(self.target) | {STAR}
        bad = sorted(y for y in self.table.values() if y not in values)
        if bad:
            raise ValueError(f"Values outside the target carrier: {bad}")
        return self

    def __call__(self, x: str) -> str:
        return self.table[x]


def totalize(phi: PartialMap) -> TotalPointedMap:
    """f = phi on D(phi), f = * elsewhere, f(*) = *."""
    table = {x: phi.table.get(x, STAR) for x in phi.source}
    table[STAR] = STAR
    return TotalPointedMap(source=list(phi.source), target=list(phi.target), table=table)


def pointed_to_partial(f: TotalPointedMap) -> PartialMap:
    """The partial map defined where f does not hit the basepoint."""
    return PartialMap(
        source=list(f.source), target=list(f.target),
        table={x: y for x, y in f.table.items() if x != STAR and y != STAR},
    )


def compose_partial(second: PartialMap, first: PartialMap) -> PartialMap:
    """second o first, defined where first is defined and lands in the domain of second."""
    if list(first.target) != list(second.source):
        raise ValueError("Carriers do not chain: target of the first map must be the source of the second")
    table = {x: second.table[y] for x, y in first.table.items() if y in second.table}
    return PartialMap(source=list(first.source), target=list(second.target), table=table)


class GroupLaw(BaseModel):
    """An abelian group law on a finite pointed set with the basepoint as zero."""
    model_config = ConfigDict(frozen=True)

    elements: List[str]
    table: Dict[str, Dict[str, str]]

    @classmethod
    def create(cls, elements: List[str], table: Dict[str, Dict[str, str]]) -> "GroupLaw":
        """Validate closure, zero, inverses, commutativity and associativity."""
        if STAR not in elements:
            raise GroupLawError(f"The group must contain the basepoint {STAR!r} as zero")
        if len(set(elements)) != len(elements):
            raise GroupLawError("Group elements must be distinct")
        points = set(elements)
        for a in elements:
            row = table.get(a)
            if row is None or set(row) != points:
                raise GroupLawError(f"Row of {a!r} must list every element")
            if any(value not in points for value in row.values()):
                raise GroupLawError(f"Row of {a!r} leaves the carrier")
        for a in elements:
            if table[STAR][a] != a or table[a][STAR] != a:
                raise GroupLawError(f"{STAR!r} is not neutral for {a!r}")
            if not any(table[a][b] == STAR for b in elements):
                raise GroupLawError(f"{a!r} has no inverse")
        for a, b in itertools.product(elements, repeat=2):
            if table[a][b] != table[b][a]:
                raise GroupLawError(f"Law is not commutative at ({a!r}, {b!r})")
        for a, b, c in itertools.product(elements, repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupLawError(f"Law is not associative at ({a!r}, {b!r}, {c!r})")
        return cls(elements=list(elements), table={a: dict(row) for a, row in table.items()})

    def add(self, a: str, b: str) -> str:
        return self.table[a][b]

    def neg(self, a: str) -> str:
        for b in self.elements:
            if self.table[a][b] == STAR:
                return b
        raise GroupLawError(f"{a!r} has no inverse")

    def sub(self, a: str, b: str) -> str:
        return self.add(a, self.neg(b))


def cyclic_group(n: int) -> GroupLaw:
    """Z/n on {*, "1", ..., "n-1"} with * as 0."""
    if n < 1:
        raise GroupLawError("Cyclic group order must be positive")

    def name(k: int) -> str:
        return STAR if k == 0 else str(k)

    elements = [name(k) for k in range(n)]
    table = {name(a): {name(b): name((a + b) % n) for b in range(n)} for a in range(n)}
    return GroupLaw.create(elements, table)


class BijectionReport(BaseModel):
    """The permutation (x, y) -> (x + f(y), y) and its fixed-point analysis."""
    permutation: List[Tuple[Pair, Pair]]
    inverse: List[Tuple[Pair, Pair]]
    is_bijection: bool
    definition_domain: List[Pair]
    fixed_points: List[Pair]
    predicted_fixed_points: List[Pair]
    fixed_points_in_domain: List[Pair]
    domain_map_from_partial: bool
    unique_fixed_point_claim: bool
    complement_fixed_claim: bool
    discrepancy: Optional[str] = None

    def mapping(self) -> Dict[Pair, Pair]:
        return dict(self.permutation)


def bijectivize(f: TotalPointedMap, law: GroupLaw) -> BijectionReport:
    """
    Turn a pointed self-map into a permutation of pairs, with its fixed points.

    The fixed points are exactly the pairs whose second coordinate lies outside
    D(phi); inside D(g) = X* x (D(phi) u {*}) that is the whole row y = *, so the
    restriction has a single fixed point only for an empty carrier. The report
    records both claims and any deviation.
    """
    points = list(law.elements)
    if sorted(set(f.source) | {STAR}) != sorted(points) or sorted(set(f.target) | {STAR}) != sorted(points):
        raise GroupLawError("The group law must be defined on the carrier of the map")

    pairs = [(x, y) for y in points for x in points]
    forward = {(x, y): (law.add(x, f(y)), y) for x, y in pairs}
    backward = {(x, y): (law.sub(x, f(y)), y) for x, y in pairs}
    is_bijection = sorted(forward.values()) == sorted(pairs) and all(
        backward[forward[p]] == p for p in pairs
    )

    phi = pointed_to_partial(f)
    defined = set(phi.domain)
    domain = [(x, y) for x, y in pairs if y in defined or y == STAR]
    fixed = [p for p in pairs if forward[p] == p]
    predicted = [(x, y) for x, y in pairs if y not in defined]
    in_domain = [p for p in domain if forward[p] == p]

    from_partial = all(
        forward[(x, y)] == ((law.add(x, phi.table[y]), y) if y in defined else (x, y))
        for x, y in domain
    )
    complement = [p for p in pairs if p not in set(domain)]
    complement_fixed = all(forward[p] == p for p in complement)
    unique_claim = in_domain == [(STAR, STAR)]

    discrepancy = None
    if not unique_claim:
        discrepancy = (
            f"Restriction to D(g) has {len(in_domain)} fixed points (the whole basepoint row), "
            f"not the single point ({STAR}, {STAR})"
        )
        logger.warning(discrepancy)

    return BijectionReport(
        permutation=sorted(forward.items()),
        inverse=sorted(backward.items()),
        is_bijection=is_bijection,
        definition_domain=sorted(domain),
        fixed_points=sorted(fixed),
        predicted_fixed_points=sorted(predicted),
        fixed_points_in_domain=sorted(in_domain),
        domain_map_from_partial=from_partial,
        unique_fixed_point_claim=unique_claim,
        complement_fixed_claim=complement_fixed,
        discrepancy=discrepancy,
    )


def recover_total_map(report: BijectionReport, carrier: List[str]) -> TotalPointedMap:
    """f(y) is the first coordinate of the image of (*, y)."""
    mapping = report.mapping()
    points = [STAR] + [x for x in carrier if x != STAR]
    table = {y: mapping[(STAR, y)][0] for y in points}
    source = [x for x in carrier if x != STAR]
    return TotalPointedMap(source=source, target=source, table=table)
