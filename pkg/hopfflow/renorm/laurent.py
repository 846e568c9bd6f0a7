"""
Truncated Laurent values and the minimal-subtraction target algebras built on them.

A value holds exact coefficients c_k for -P <= k <= R. Arithmetic that would
put a nonzero coefficient outside the caps raises TruncationError instead of
dropping it.
"""
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, Mapping, Optional, Union

from hopfflow.config import settings
from hopfflow.core.exceptions import TruncationError
from hopfflow.utils.rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class LaurentValue:
    """Immutable truncated Laurent polynomial in z."""

    __slots__ = ("coeffs", "pole_cap", "regular_cap")

    def __init__(self, coeffs: Optional[Mapping[int, Scalar]] = None,
                 pole_cap: Optional[int] = None, regular_cap: Optional[int] = None):
        self.pole_cap = settings.LAURENT_POLE_CAP if pole_cap is None else pole_cap
        self.regular_cap = settings.LAURENT_REGULAR_CAP if regular_cap is None else regular_cap
        cleaned: Dict[int, Fraction] = {}
        for k, v in (coeffs or {}).items():
            v = Fraction(v)
            if v == 0:
                continue
            if k < -self.pole_cap or k > self.regular_cap:
                raise TruncationError(
                    f"Coefficient of z^{k} lies outside the caps [-{self.pole_cap}, {self.regular_cap}]"
                )
            cleaned[int(k)] = v
        self.coeffs = cleaned

    def _like(self, coeffs: Mapping[int, Scalar]) -> "LaurentValue":
        return LaurentValue(coeffs, self.pole_cap, self.regular_cap)

    def _caps(self, other: "LaurentValue") -> None:
        if (self.pole_cap, self.regular_cap) != (other.pole_cap, other.regular_cap):
            raise TruncationError("Laurent values with different truncation caps cannot be combined")

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: Union["LaurentValue", Scalar]) -> "LaurentValue":
        if not isinstance(other, LaurentValue):
            other = self._like({0: other})
        self._caps(other)
        result = dict(self.coeffs)
        for k, v in other.coeffs.items():
            result[k] = result.get(k, Fraction(0)) + v
        return self._like(result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentValue":
        return self._like({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: Union["LaurentValue", Scalar]) -> "LaurentValue":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentValue":
        return (-self) + other

    def __mul__(self, other: Union["LaurentValue", Scalar]) -> "LaurentValue":
        if not isinstance(other, LaurentValue):
            factor = Fraction(other)
            return self._like({k: v * factor for k, v in self.coeffs.items()})
        self._caps(other)
        result: Dict[int, Fraction] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                result[i + j] = result.get(i + j, Fraction(0)) + a * b
        return self._like(result)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ({0: Fraction(other)} if other else {})
        return isinstance(other, LaurentValue) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"LaurentValue({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = format_rational(self.coeffs[k])
            parts.append(c if k == 0 else f"{c}*z^{k}")
        return " + ".join(parts)

    def evaluate(self, z: Scalar) -> Fraction:
        z = Fraction(z)
        if z == 0 and any(k < 0 for k in self.coeffs):
            raise ZeroDivisionError("Cannot evaluate a pole at z = 0")
        return sum((v * z ** k for k, v in self.coeffs.items()), Fraction(0))

    def to_document(self) -> Dict[str, str]:
        return {str(k): format_rational(v) for k, v in sorted(self.coeffs.items())}

    @classmethod
    def from_document(cls, document: Mapping[str, object],
                      pole_cap: Optional[int] = None, regular_cap: Optional[int] = None) -> "LaurentValue":
        return cls({int(k): parse_rational(v) for k, v in document.items()}, pole_cap, regular_cap)


class MSAlgebra(ABC):
    """
    A unital commutative algebra A = A_- ⊕ A_+ with the polar projection π and
    an augmentation ε_A on the regular part A_+ (which contains the unit).
    """

    name = "abstract"

    def __init__(self, pole_cap: Optional[int] = None, regular_cap: Optional[int] = None):
        self.pole_cap = settings.LAURENT_POLE_CAP if pole_cap is None else pole_cap
        self.regular_cap = settings.LAURENT_REGULAR_CAP if regular_cap is None else regular_cap

    def value(self, coeffs: Optional[Mapping[int, Scalar]] = None) -> LaurentValue:
        return LaurentValue(coeffs, self.pole_cap, self.regular_cap)

    def zero(self) -> LaurentValue:
        return self.value()

    def one(self) -> LaurentValue:
        return self.value({0: 1})

    def z(self, power: int = 1, coeff: Scalar = 1) -> LaurentValue:
        return self.value({power: coeff})

    @abstractmethod
    def in_polar(self, k: int) -> bool:
        """Whether z^k belongs to the polar part."""

    def polar(self, a: LaurentValue) -> LaurentValue:
        """π(a)."""
        return a._like({k: v for k, v in a.coeffs.items() if self.in_polar(k)})

    def regular(self, a: LaurentValue) -> LaurentValue:
        """(id - π)(a)."""
        return a._like({k: v for k, v in a.coeffs.items() if not self.in_polar(k)})

    def is_polar(self, a: LaurentValue) -> bool:
        return self.regular(a).is_zero()

    def is_regular(self, a: LaurentValue) -> bool:
        return self.polar(a).is_zero()

    @abstractmethod
    def augmentation(self, a: LaurentValue) -> Fraction:
        """ε_A on the regular part."""


class LaurentAlgebra(MSAlgebra):
    """Minimal subtraction: polar part z^-1 C[z^-1], ε_A = constant coefficient."""

    name = "laurent"

    def in_polar(self, k: int) -> bool:
        return k < 0

    def augmentation(self, a: LaurentValue) -> Fraction:
        return a.coefficient(0)


class ComplementaryLaurentAlgebra(MSAlgebra):
    """
    The swapped splitting: the "polar" part is z C[z] and the regular part the
    pole polynomial plus constants, with ε' the evaluation at a point z0 != 0.
    """

    name = "complementary"

    def __init__(self, pole_cap: Optional[int] = None, regular_cap: Optional[int] = None,
                 z0: Scalar = 1):
        super().__init__(pole_cap, regular_cap)
        if Fraction(z0) == 0:
            raise ValueError("Evaluation point z0 must be nonzero")
        self.z0 = Fraction(z0)

    def in_polar(self, k: int) -> bool:
        return k > 0

    def augmentation(self, a: LaurentValue) -> Fraction:
        return self.regular(a).evaluate(self.z0)


def make_algebra(scheme: str = "laurent", pole_cap: Optional[int] = None,
                 regular_cap: Optional[int] = None, z0: Scalar = 1) -> MSAlgebra:
    if scheme == "laurent":
        return LaurentAlgebra(pole_cap, regular_cap)
    if scheme == "complementary":
        return ComplementaryLaurentAlgebra(pole_cap, regular_cap, z0)
    raise ValueError(f"Unknown subtraction scheme {scheme!r}")
