"""Polynomials in the field coordinates phi^a with formal-series coefficients."""
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple, Union

from hopfflow.feynman.model import ModelData
from hopfflow.feynman.series import FormalSeries
from hopfflow.feynman.wick import pairing_sum

PhiMonomial = Tuple[Tuple[str, int], ...]


def phi_indices(monomial: PhiMonomial) -> List[str]:
    return [color for color, exponent in monomial for _ in range(exponent)]


def _multiply(first: PhiMonomial, second: PhiMonomial) -> PhiMonomial:
    exponents = dict(first)
    for color, exponent in second:
        exponents[color] = exponents.get(color, 0) + exponent
    return tuple(sorted(exponents.items()))


class FieldPolynomial:
    """Finite sum of phi-monomials, each with a FormalSeries coefficient."""

    __slots__ = ("terms", "max_weight")

    def __init__(self, terms: Mapping[PhiMonomial, FormalSeries], max_weight: int):
        self.max_weight = max_weight
        self.terms: Dict[PhiMonomial, FormalSeries] = {}
        for monomial, coeff in terms.items():
            coeff = coeff.truncate(max_weight)
            if not coeff.is_zero():
                self.terms[monomial] = coeff

    @classmethod
    def zero(cls, max_weight: int) -> "FieldPolynomial":
        return cls({}, max_weight)

    @classmethod
    def constant(cls, coeff: FormalSeries) -> "FieldPolynomial":
        return cls({(): coeff}, coeff.max_weight)

    @classmethod
    def variable(cls, color: str, max_weight: int) -> "FieldPolynomial":
        return cls({((color, 1),): FormalSeries.one(max_weight)}, max_weight)

    def __add__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        max_weight = min(self.max_weight, other.max_weight)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms[monomial] + coeff if monomial in terms else coeff
        return FieldPolynomial(terms, max_weight)

    def __neg__(self) -> "FieldPolynomial":
        return FieldPolynomial({m: -c for m, c in self.terms.items()}, self.max_weight)

    def __sub__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["FieldPolynomial", FormalSeries, int, Fraction]) -> "FieldPolynomial":
        if isinstance(other, (int, Fraction, FormalSeries)):
            return FieldPolynomial({m: c * other for m, c in self.terms.items()}, self.max_weight)
        max_weight = min(self.max_weight, other.max_weight)
        terms: Dict[PhiMonomial, FormalSeries] = {}
        for mono_a, coeff_a in self.terms.items():
            for mono_b, coeff_b in other.terms.items():
                monomial = _multiply(mono_a, mono_b)
                product = coeff_a * coeff_b
                terms[monomial] = terms[monomial] + product if monomial in terms else product
        return FieldPolynomial(terms, max_weight)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def exp(self) -> "FieldPolynomial":
        """exp of a polynomial whose coefficients have no weight-zero terms."""
        if any(c.min_weight() == 0 for c in self.terms.values()):
            raise ValueError("exp needs coefficients without weight-zero terms")
        result = FieldPolynomial.constant(FormalSeries.one(self.max_weight))
        power = result
        for n in range(1, self.max_weight + 1):
            power = power * self * Fraction(1, n)
            if power.is_zero():
                break
            result = result + power
        return result

    def derivative(self, color: str) -> "FieldPolynomial":
        terms: Dict[PhiMonomial, FormalSeries] = {}
        for monomial, coeff in self.terms.items():
            exponents = dict(monomial)
            exponent = exponents.get(color, 0)
            if not exponent:
                continue
            if exponent == 1:
                del exponents[color]
            else:
                exponents[color] = exponent - 1
            key = tuple(sorted(exponents.items()))
            term = coeff * exponent
            terms[key] = terms[key] + term if key in terms else term
        return FieldPolynomial(terms, self.max_weight)

    def substitute(self, values: Mapping[str, FormalSeries]) -> FormalSeries:
        """Replace every phi^a by a formal series."""
        total = FormalSeries.zero(self.max_weight)
        for monomial, coeff in self.terms.items():
            term = coeff
            for color, exponent in monomial:
                term = term * (values[color] ** exponent)
            total = total + term
        return total

    def expectation(self, model: ModelData) -> FormalSeries:
        """Termwise Gaussian integration: each phi-monomial goes to its Wick moment."""
        total = FormalSeries.zero(self.max_weight)
        for monomial, coeff in self.terms.items():
            indices = phi_indices(monomial)
            if len(indices) % 2:
                continue
            moment = pairing_sum(indices, model)
            if moment:
                total = total + (coeff * moment).lambda_shift(len(indices) // 2)
        return total
