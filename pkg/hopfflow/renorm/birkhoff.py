"""
Convolution in G(A), convolution inverses and the Birkhoff decomposition.

All recursions run over reduced coproducts of basis classes, which descend in
the flag grading; results are memoized inside the derived maps of one run.
"""
import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel

from hopfflow.core.exceptions import DegreeOverflowError
from hopfflow.hopf.algebra import (
    EMPTY_KEY, HopfElement, Key, basis_graph, coproduct, grading_degree, intern_graph, reduced_coproduct,
)
from hopfflow.graphs.combinatorial import disjoint_union
from hopfflow.renorm.characters import DerivedMap, LinearMap
from hopfflow.renorm.laurent import LaurentValue

logger = logging.getLogger(__name__)


def _basis(key: Key, family: str = "oriented") -> HopfElement:
    return HopfElement({key: Fraction(1)}, family)


def _check_degree(key: Key, degree_bound: Optional[int]) -> None:
    if degree_bound is None:
        return
    degree = grading_degree(basis_graph(key))
    if degree > degree_bound:
        raise DegreeOverflowError(f"Class of degree {degree} exceeds the degree bound {degree_bound}")


def convolve(phi: LinearMap, psi: LinearMap, x: HopfElement, degree_bound: Optional[int] = None) -> LaurentValue:
    """m_A (φ ⊗ ψ) Δ(x)."""
    for key in x.terms:
        _check_degree(key, degree_bound)
    total = phi.algebra.zero()
    for (a, b), coeff in coproduct(x).terms.items():
        total = total + phi.on_key(a) * psi.on_key(b) * coeff
    return total


def convolution(phi: LinearMap, psi: LinearMap, degree_bound: Optional[int] = None,
                family: str = "oriented") -> DerivedMap:
    """φ * ψ as a map."""
    return DerivedMap(
        phi.algebra, lambda key: convolve(phi, psi, _basis(key, family), degree_bound), f"{phi.name}*{psi.name}",
        multiplicative=phi.multiplicative and psi.multiplicative,
    )


def _difference_power(phi: LinearMap, m: int, memo: Dict[Tuple[int, Key], LaurentValue], key: Key,
                      family: str) -> LaurentValue:
    """(e - φ)^{*m} on one basis class."""
    algebra = phi.algebra
    cached = memo.get((m, key))
    if cached is not None:
        return cached
    if m == 0:
        value = algebra.one() if key == EMPTY_KEY else algebra.zero()
    elif key == EMPTY_KEY:
        value = algebra.zero()
    elif m == 1:
        value = -phi.on_key(key)
    else:
        value = algebra.zero()
        for (a, b), coeff in coproduct(_basis(key, family)).terms.items():
            if a == EMPTY_KEY or b == EMPTY_KEY:
                continue
            value = value - phi.on_key(a) * _difference_power(phi, m - 1, memo, b, family) * coeff
    memo[(m, key)] = value
    return value


def convolution_inverse(phi: LinearMap, degree_bound: Optional[int] = None,
                        family: str = "oriented") -> DerivedMap:
    """
    φ^{*-1} = e + Σ_{m>=1} (e - φ)^{*m}.

    (e - φ) vanishes on the unit, so its m-th power vanishes on classes with
    fewer than m flags and the sum on a class of degree n stops at m = n.
    """
    memo: Dict[Tuple[int, Key], LaurentValue] = {}

    def compute(key: Key) -> LaurentValue:
        _check_degree(key, degree_bound)
        degree = grading_degree(basis_graph(key))
        total = phi.algebra.zero()
        for m in range(degree + 1):
            total = total + _difference_power(phi, m, memo, key, family)
        return total

    return DerivedMap(phi.algebra, compute, f"{phi.name}^-1", multiplicative=phi.multiplicative)


def convolution_inverse_recursive(phi: LinearMap, degree_bound: Optional[int] = None,
                                  family: str = "oriented") -> DerivedMap:
    """ψ(1) = 1 and ψ(x) = -φ(x) - Σ ψ(x')φ(x''), solving ψ * φ = e."""
    algebra = phi.algebra

    def compute(key: Key) -> LaurentValue:
        _check_degree(key, degree_bound)
        if key == EMPTY_KEY:
            return algebra.one()
        value = -phi.on_key(key)
        for (a, b), coeff in reduced_coproduct(_basis(key, family)).terms.items():
            value = value - inverse.on_key(a) * phi.on_key(b) * coeff
        return value

    inverse = DerivedMap(algebra, compute, f"{phi.name}^-1", multiplicative=phi.multiplicative)
    return inverse


class BirkhoffResult:
    """The factors φ_- and φ_+ of one decomposition run, plus the map they decompose."""

    def __init__(self, phi: LinearMap, minus: DerivedMap, plus: DerivedMap, degree_bound: Optional[int],
                 family: str = "oriented"):
        self.phi = phi
        self.minus = minus
        self.plus = plus
        self.degree_bound = degree_bound
        self.family = family


def birkhoff(phi: LinearMap, degree_bound: Optional[int] = None, family: str = "oriented") -> BirkhoffResult:
    """
    φ = φ_-^{*-1} * φ_+ with φ_- polar off the unit and φ_+ regular.

    With the Bogoliubov preparation φ̄(x) = φ(x) + Σ φ_-(x')φ(x''):
    φ_-(x) = -π(φ̄(x)) and φ_+(x) = (id - π)(φ̄(x)).
    """
    algebra = phi.algebra
    prepared: Dict[Key, LaurentValue] = {}

    def bar(key: Key) -> LaurentValue:
        cached = prepared.get(key)
        if cached is not None:
            return cached
        _check_degree(key, degree_bound)
        value = phi.on_key(key)
        for (a, b), coeff in reduced_coproduct(_basis(key, family)).terms.items():
            value = value + minus.on_key(a) * phi.on_key(b) * coeff
        prepared[key] = value
        return value

    def compute_minus(key: Key) -> LaurentValue:
        if key == EMPTY_KEY:
            return algebra.one()
        return -algebra.polar(bar(key))

    def compute_plus(key: Key) -> LaurentValue:
        if key == EMPTY_KEY:
            return algebra.one()
        return algebra.regular(bar(key))

    minus = DerivedMap(algebra, compute_minus, f"{phi.name}_-", multiplicative=phi.multiplicative)
    plus = DerivedMap(algebra, compute_plus, f"{phi.name}_+", multiplicative=phi.multiplicative)
    return BirkhoffResult(phi, minus, plus, degree_bound, family)


def regularized_value(plus: LinearMap, x: HopfElement) -> Optional[Fraction]:
    """ε_A(φ_+(x)); None when the value has a polar part, where ε_A is undefined."""
    value = plus(x)
    if not plus.algebra.is_regular(value):
        logger.warning(f"Regularized value undefined: {plus.name} has polar part {plus.algebra.polar(value)}")
        return None
    return plus.algebra.augmentation(value)


class BirkhoffReport(BaseModel):
    classes_checked: int
    reconstruction_failures: List[str]
    plus_not_regular: List[str]
    minus_not_polar: List[str]
    multiplicativity_failures: List[str]

    @property
    def passed(self) -> bool:
        return not (self.reconstruction_failures or self.plus_not_regular
                    or self.minus_not_polar or self.multiplicativity_failures)


def _describe(key: Key) -> str:
    graph = basis_graph(key)
    return f"class with {len(graph.vertices)} vertices and {len(graph.flags)} flags"


def verify_birkhoff(result: BirkhoffResult, keys: Iterable[Key]) -> BirkhoffReport:
    """
    Reconstruction φ = φ_-^{*-1} * φ_+, containments, and multiplicativity of
    both factors on pairwise products of the given classes when φ is a character.
    """
    keys = list(dict.fromkeys(keys))
    algebra = result.phi.algebra
    inverse = convolution_inverse(result.minus, result.degree_bound, result.family)
    reconstruction, plus_bad, minus_bad, mult_bad = [], [], [], []
    for key in keys:
        rebuilt = convolve(inverse, result.plus, _basis(key, result.family))
        if rebuilt != result.phi.on_key(key):
            reconstruction.append(_describe(key))
        if not algebra.is_regular(result.plus.on_key(key)):
            plus_bad.append(_describe(key))
        if key != EMPTY_KEY and not algebra.is_polar(result.minus.on_key(key)):
            minus_bad.append(_describe(key))
    if result.phi.multiplicative:
        for a, b in combinations_with_replacement([k for k in keys if k != EMPTY_KEY], 2):
            # flag counts add under disjoint union
            degree = grading_degree(basis_graph(a)) + grading_degree(basis_graph(b))
            if result.degree_bound is not None and degree > result.degree_bound:
                continue
            joined = intern_graph(disjoint_union(basis_graph(a), basis_graph(b)))
            for factor in (result.minus, result.plus):
                if factor.on_key(joined) != factor.on_key(a) * factor.on_key(b):
                    mult_bad.append(f"{factor.name} on the product of two classes")
    report = BirkhoffReport(
        classes_checked=len(keys),
        reconstruction_failures=reconstruction,
        plus_not_regular=plus_bad,
        minus_not_polar=minus_bad,
        multiplicativity_failures=mult_bad,
    )
    if not report.passed:
        logger.warning(f"Birkhoff verification failed on {len(keys)} classes")
    return report