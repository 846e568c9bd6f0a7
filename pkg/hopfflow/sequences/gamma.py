"""
Polynomials in log N and the operator Γ(1 + ∂_t) acting on them.

Euler's constant and the zeta values enter as the formal symbols gamma,
zeta2, zeta3, ... so identities hold independently of their numeric values.
numeric() substitutes estimates from the oracles.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Union

import sympy

from hopfflow.core.exceptions import SequenceError
from hopfflow.sequences.oracles import euler_gamma_estimate, zeta_estimate

logger = logging.getLogger(__name__)

EULER_GAMMA = sympy.Symbol("gamma")
_X = sympy.Symbol("x")
MAX_ZETA = 64


def zeta_symbol(k: int) -> sympy.Symbol:
    return sympy.Symbol(f"zeta{k}")


# sympify would otherwise read "gamma" as the Gamma function
_LOCALS = {"gamma": EULER_GAMMA, **{f"zeta{k}": zeta_symbol(k) for k in range(2, MAX_ZETA + 1)}}

Coefficient = Union[sympy.Expr, int, float, str]


class PolyInT:
    """Polynomial Σ c_k t^k with coefficient index = degree; trailing zeros are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cleaned = [sympy.sympify(c, locals=_LOCALS) if isinstance(c, str) else sympy.sympify(c) for c in coeffs]
        cleaned = [sympy.expand(c) for c in cleaned]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        self.coeffs = tuple(cleaned)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> sympy.Expr:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else sympy.Integer(0)

    def derivative(self, times: int = 1) -> "PolyInT":
        coeffs = list(self.coeffs)
        for _ in range(times):
            coeffs = [k * c for k, c in enumerate(coeffs)][1:]
        return PolyInT(coeffs)

    def __add__(self, other: "PolyInT") -> "PolyInT":
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyInT(self.coefficient(k) + other.coefficient(k) for k in range(n))

    def __sub__(self, other: "PolyInT") -> "PolyInT":
        return self + other * -1

    def __mul__(self, scalar: Coefficient) -> "PolyInT":
        factor = sympy.sympify(scalar, locals=_LOCALS) if isinstance(scalar, str) else sympy.sympify(scalar)
        return PolyInT(c * factor for c in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyInT):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(sympy.expand(self.coefficient(k) - other.coefficient(k)) == 0 for k in range(n))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyInT({[str(c) for c in self.coeffs]})"

    def as_expr(self, variable: Optional[sympy.Symbol] = None) -> sympy.Expr:
        t = variable if variable is not None else sympy.Symbol("t")
        return sympy.Add(*(c * t ** k for k, c in enumerate(self.coeffs)))

    def free_constants(self) -> List[sympy.Symbol]:
        found = set()
        for c in self.coeffs:
            found |= c.free_symbols
        return sorted(found, key=str)

    def numeric(self, values: Optional[Dict[sympy.Symbol, float]] = None) -> "PolyInT":
        """Substitute floats for the formal constants; missing values come from the oracles."""
        values = dict(values or {})
        for symbol in self.free_constants():
            if symbol in values:
                continue
            if symbol == EULER_GAMMA:
                values[symbol] = euler_gamma_estimate(corrected=True)
            elif str(symbol).startswith("zeta"):
                values[symbol] = zeta_estimate(int(str(symbol)[4:]))
            else:
                raise SequenceError(f"No numeric value for constant {symbol}")
        return PolyInT(sympy.Float(c.subs(values)) for c in self.coeffs)

    def evaluate(self, t: float, values: Optional[Dict[sympy.Symbol, float]] = None) -> float:
        return float(sum(float(c) * t ** k for k, c in enumerate(self.numeric(values).coeffs)))

    def to_document(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_document(cls, document: Sequence[Coefficient]) -> "PolyInT":
        try:
            return cls(document)
        except (sympy.SympifyError, TypeError) as exc:
            raise SequenceError(f"Invalid polynomial coefficients: {exc}") from exc


@lru_cache(maxsize=None)
def _gamma_series(order: int) -> tuple:
    log_gamma = -EULER_GAMMA * _X + sum(
        ((-1) ** k * zeta_symbol(k) * _X ** k / k for k in range(2, order + 1)), sympy.Integer(0)
    )
    expansion = sympy.expand(sympy.series(sympy.exp(log_gamma), _X, 0, order + 1).removeO())
    return tuple(sympy.expand(expansion.coeff(_X, k)) if k else sympy.expand(expansion.subs(_X, 0))
                 for k in range(order + 1))


def gamma_series(order: int) -> List[sympy.Expr]:
    """
    Taylor coefficients a_0 .. a_order of Γ(1 + x), from
    log Γ(1 + x) = -γx + Σ_{k>=2} (-1)^k ζ(k) x^k / k.
    """
    if order < 0:
        raise SequenceError("Series order must be non-negative")
    if order > MAX_ZETA:
        raise SequenceError(f"Series order {order} exceeds {MAX_ZETA}")
    return list(_gamma_series(order))


def gamma_series_check(order: int) -> bool:
    """Compare gamma_series with sympy's own expansion of Γ(1 + x) after substituting γ and ζ(k)."""
    ours = gamma_series(order)
    substitution = {EULER_GAMMA: sympy.EulerGamma, **{zeta_symbol(k): sympy.zeta(k) for k in range(2, order + 1)}}
    reference = sympy.expand(sympy.series(sympy.gamma(1 + _X), _X, 0, order + 1).removeO())
    for k, coeff in enumerate(ours):
        expected = reference.coeff(_X, k) if k else reference.subs(_X, 0)
        if sympy.simplify(sympy.expand_func(coeff.subs(substitution) - expected)) != 0:
            logger.warning(f"Gamma series coefficient {k} disagrees with the reference expansion")
            return False
    return True


def gamma_transform(polynomial: PolyInT, order: Optional[int] = None) -> PolyInT:
    """Q(t) = Γ(1 + ∂_t) P(t) = Σ_k a_k P^(k)(t), truncated at the given order (default deg P)."""
    degree = max(polynomial.degree, 0)
    order = degree if order is None else order
    if order < degree:
        raise SequenceError(f"Transform order {order} is below the polynomial degree {degree}")
    result = PolyInT()
    for k, a in enumerate(gamma_series(order)):
        result = result + polynomial.derivative(k) * a
    return result
