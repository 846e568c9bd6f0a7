"""
Exact multivariate formal series in coupling symbols and a formal Laurent parameter lambda.

A coupling symbol C_{a1..ak} is stored as the sorted tuple of its colors and has
weight k. A term is keyed by (monomial, lambda power), where a monomial is a
sorted tuple of (symbol, exponent) pairs. Every series carries the weight up to
which it is known; terms above it are dropped on construction.
"""
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

Symbol = Tuple[str, ...]
Monomial = Tuple[Tuple[Symbol, int], ...]
TermKey = Tuple[Monomial, int]
Scalar = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()


def monomial_weight(monomial: Monomial) -> int:
    return sum(len(symbol) * exponent for symbol, exponent in monomial)


def multiply_monomials(first: Monomial, second: Monomial) -> Monomial:
    exponents: Dict[Symbol, int] = dict(first)
    for symbol, exponent in second:
        exponents[symbol] = exponents.get(symbol, 0) + exponent
    return tuple(sorted(exponents.items()))


def format_symbol(symbol: Symbol) -> str:
    return "C[" + ",".join(symbol) + "]"


def format_monomial(monomial: Monomial) -> str:
    if not monomial:
        return "1"
    return "*".join(
        format_symbol(symbol) + (f"^{exponent}" if exponent > 1 else "") for symbol, exponent in monomial
    )


class FormalSeries:
    """Truncated formal series with exact rational coefficients."""

    __slots__ = ("terms", "max_weight")

    def __init__(self, terms: Optional[Mapping[TermKey, Scalar]] = None, max_weight: int = 0):
        if max_weight < 0:
            raise ValueError("max_weight must be non-negative")
        self.max_weight = max_weight
        self.terms: Dict[TermKey, Fraction] = {}
        for key, value in (terms or {}).items():
            value = Fraction(value)
            if value and monomial_weight(key[0]) <= max_weight:
                self.terms[key] = value

    # Constructors

    @classmethod
    def zero(cls, max_weight: int) -> "FormalSeries":
        return cls({}, max_weight)

    @classmethod
    def constant(cls, value: Scalar, max_weight: int, lambda_power: int = 0) -> "FormalSeries":
        return cls({(ONE_MONOMIAL, lambda_power): value}, max_weight)

    @classmethod
    def one(cls, max_weight: int) -> "FormalSeries":
        return cls.constant(1, max_weight)

    @classmethod
    def symbol(cls, symbol: Symbol, max_weight: int, coefficient: Scalar = 1) -> "FormalSeries":
        return cls({(((tuple(symbol), 1),), 0): coefficient}, max_weight)

    # Inspection

    def __iter__(self) -> Iterator[Tuple[TermKey, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Iterable[Tuple[Symbol, int]], lambda_power: int = 0) -> Fraction:
        key = (tuple(sorted((tuple(s), e) for s, e in monomial)), lambda_power)
        return self.terms.get(key, Fraction(0))

    def lambda_coefficients(self, monomial: Iterable[Tuple[Symbol, int]]) -> Dict[int, Fraction]:
        """Coefficients of one coupling monomial keyed by lambda power."""
        target = tuple(sorted((tuple(s), e) for s, e in monomial))
        return {lam: c for (mono, lam), c in self.terms.items() if mono == target}

    def lambda_powers(self) -> List[int]:
        return sorted({lam for _, lam in self.terms})

    def symbols(self) -> List[Symbol]:
        return sorted({symbol for mono, _ in self.terms for symbol, _ in mono})

    def weight_component(self, weight: int) -> "FormalSeries":
        return FormalSeries(
            {k: v for k, v in self.terms.items() if monomial_weight(k[0]) == weight}, self.max_weight
        )

    def truncate(self, max_weight: int) -> "FormalSeries":
        return FormalSeries(self.terms, min(max_weight, self.max_weight))

    def min_weight(self) -> Optional[int]:
        return min((monomial_weight(mono) for mono, _ in self.terms), default=None)

    # Arithmetic

    def _coerce(self, other: Union["FormalSeries", Scalar]) -> "FormalSeries":
        if isinstance(other, FormalSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return FormalSeries.constant(other, self.max_weight)
        return NotImplemented

    def __add__(self, other: Union["FormalSeries", Scalar]) -> "FormalSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + value
        return FormalSeries(terms, min(self.max_weight, other.max_weight))

    __radd__ = __add__

    def __neg__(self) -> "FormalSeries":
        return FormalSeries({k: -v for k, v in self.terms.items()}, self.max_weight)

    def __sub__(self, other: Union["FormalSeries", Scalar]) -> "FormalSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "FormalSeries":
        return (-self) + other

    def __mul__(self, other: Union["FormalSeries", Scalar]) -> "FormalSeries":
        if isinstance(other, (int, Fraction)):
            return FormalSeries({k: v * other for k, v in self.terms.items()}, self.max_weight)
        if not isinstance(other, FormalSeries):
            return NotImplemented
        max_weight = min(self.max_weight, other.max_weight)
        terms: Dict[TermKey, Fraction] = {}
        for (mono_a, lam_a), coeff_a in self.terms.items():
            weight_a = monomial_weight(mono_a)
            for (mono_b, lam_b), coeff_b in other.terms.items():
                if weight_a + monomial_weight(mono_b) > max_weight:
                    continue
                key = (multiply_monomials(mono_a, mono_b), lam_a + lam_b)
                terms[key] = terms.get(key, Fraction(0)) + coeff_a * coeff_b
        return FormalSeries(terms, max_weight)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FormalSeries":
        if exponent < 0:
            raise ValueError("Negative powers are not supported")
        result = FormalSeries.one(self.max_weight)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FormalSeries.constant(other, self.max_weight)
        if not isinstance(other, FormalSeries):
            return NotImplemented
        weight = min(self.max_weight, other.max_weight)
        return self.truncate(weight).terms == other.truncate(weight).terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"FormalSeries({str(self)}, max_weight={self.max_weight})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (mono, lam), coeff in self:
            factor = "" if lam == 0 else (" * lambda" if lam == 1 else f" * lambda^{lam}")
            parts.append(f"({coeff}) * {format_monomial(mono)}{factor}")
        return " + ".join(parts)

    # Series functions

    def _weight_zero_part(self) -> Dict[int, Fraction]:
        return {lam: c for (mono, lam), c in self.terms.items() if not mono}

    def exp(self) -> "FormalSeries":
        """exp of a series without weight-zero terms."""
        if self._weight_zero_part():
            raise ValueError("exp needs a series without weight-zero terms")
        result = FormalSeries.one(self.max_weight)
        power = FormalSeries.one(self.max_weight)
        for n in range(1, self.max_weight + 1):
            power = power * self * Fraction(1, n)
            if power.is_zero():
                break
            result = result + power
        return result

    def log(self) -> "FormalSeries":
        """log of a series whose weight-zero part is exactly 1."""
        if self._weight_zero_part() != {0: Fraction(1)}:
            raise ValueError("log needs a series with weight-zero part equal to 1")
        rest = self - 1
        result = FormalSeries.zero(self.max_weight)
        power = FormalSeries.one(self.max_weight)
        for n in range(1, self.max_weight + 1):
            power = power * rest
            if power.is_zero():
                break
            result = result + power * Fraction((-1) ** (n + 1), n)
        return result

    def derivative(self, symbol: Symbol) -> "FormalSeries":
        """Partial derivative with respect to one coupling symbol; the known weight drops by its rank."""
        symbol = tuple(symbol)
        terms: Dict[TermKey, Fraction] = {}
        for (mono, lam), coeff in self.terms.items():
            exponents = dict(mono)
            exponent = exponents.get(symbol, 0)
            if not exponent:
                continue
            if exponent == 1:
                del exponents[symbol]
            else:
                exponents[symbol] = exponent - 1
            key = (tuple(sorted(exponents.items())), lam)
            terms[key] = terms.get(key, Fraction(0)) + coeff * exponent
        return FormalSeries(terms, max(self.max_weight - len(symbol), 0))

    def lambda_shift(self, power: int) -> "FormalSeries":
        return FormalSeries({(mono, lam + power): c for (mono, lam), c in self.terms.items()}, self.max_weight)

    def at_lambda(self, value: Scalar = 1) -> "FormalSeries":
        """Substitute a nonzero rational for lambda."""
        value = Fraction(value)
        if value == 0:
            raise ValueError("lambda carries negative powers and cannot be set to zero")
        terms: Dict[TermKey, Fraction] = {}
        for (mono, lam), coeff in self.terms.items():
            key = (mono, 0)
            terms[key] = terms.get(key, Fraction(0)) + coeff * value ** lam
        return FormalSeries(terms, self.max_weight)

    def evaluate(self, values: Mapping[Symbol, Scalar], lam: Scalar = 1) -> Fraction:
        """Numeric value with every symbol and lambda substituted; absent symbols count as zero."""
        lam = Fraction(lam)
        total = Fraction(0)
        for (mono, power), coeff in self.terms.items():
            term = coeff * lam ** power
            for symbol, exponent in mono:
                term *= Fraction(values.get(symbol, 0)) ** exponent
            total += term
        return total

    def to_document(self) -> List[dict]:
        """JSON-ready term list in deterministic order."""
        return [
            {
                "monomial": [{"symbol": list(symbol), "exponent": exponent} for symbol, exponent in mono],
                "lambda": lam,
                "coeff": f"{coeff.numerator}/{coeff.denominator}",
            }
            for (mono, lam), coeff in self
        ]


def difference_report(first: FormalSeries, second: FormalSeries) -> List[dict]:
    """Terms on which two series disagree up to their common weight; empty when they agree."""
    weight = min(first.max_weight, second.max_weight)
    a, b = first.truncate(weight), second.truncate(weight)
    keys = sorted(set(a.terms) | set(b.terms))
    diff = []
    for mono, lam in keys:
        left, right = a.terms.get((mono, lam), Fraction(0)), b.terms.get((mono, lam), Fraction(0))
        if left != right:
            diff.append({
                "monomial": format_monomial(mono),
                "lambda": lam,
                "left": f"{left.numerator}/{left.denominator}",
                "right": f"{right.numerator}/{right.denominator}",
            })
    return diff
