"""Rota-Baxter identity checks: R(f)R(g) = R(R(f)g + fR(g) + θfg)."""
import logging
import operator
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from pydantic import BaseModel, ConfigDict

logger = logging.getLogger(__name__)

V = TypeVar("V")
Binary = Callable[[V, V], V]


def _scale(value, factor: Fraction):
    return value * factor


class RotaBaxterReport(BaseModel):
    """Outcome over all ordered sample pairs; required_weights lists the θ each failing pair would need."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    theta: Fraction
    pairs_checked: int
    failures: List[Tuple[int, int]]
    required_weights: Dict[str, Optional[Fraction]]

    @property
    def passed(self) -> bool:
        return not self.failures


def _nonzero(value) -> Dict:
    return {k: v for k, v in value.coefficients().items() if v != 0}


def required_weight(
    operator_r: Callable[[V], V], f: V, g: V,
    multiply: Binary = operator.mul, add: Binary = operator.add,
) -> Optional[Fraction]:
    """
    The θ making the identity hold for (f, g), if one exists.

    R(f)R(g) - R(R(f)g + fR(g)) must be θ R(fg); returns None when it is not a
    multiple of R(fg), and 0 when both sides vanish.
    """
    rf, rg = operator_r(f), operator_r(g)
    residual = _nonzero(add(multiply(rf, rg), _scale(operator_r(add(multiply(rf, g), multiply(f, rg))), Fraction(-1))))
    base = _nonzero(operator_r(multiply(f, g)))
    if not residual:
        return Fraction(0)
    if not base or set(residual) - set(base):
        return None
    ratios = {Fraction(residual.get(k, 0)) / Fraction(v) for k, v in base.items()}
    return ratios.pop() if len(ratios) == 1 else None


def rota_baxter_check(
    operator_r: Callable[[V], V],
    theta,
    samples: Sequence[V],
    multiply: Binary = operator.mul,
    add: Binary = operator.add,
) -> RotaBaxterReport:
    """
    Check the identity exactly on every ordered pair of samples.

    Values must support scalar multiplication by a Fraction and expose
    coefficients(); add and multiply default to + and *.
    """
    theta = Fraction(theta)
    failures: List[Tuple[int, int]] = []
    needed: Dict[str, Optional[Fraction]] = {}
    for i, f in enumerate(samples):
        for j, g in enumerate(samples):
            rf, rg = operator_r(f), operator_r(g)
            lhs = multiply(rf, rg)
            inner = add(add(multiply(rf, g), multiply(f, rg)), _scale(multiply(f, g), theta))
            if _nonzero(add(lhs, _scale(operator_r(inner), Fraction(-1)))):
                failures.append((i, j))
                needed[f"{i},{j}"] = required_weight(operator_r, f, g, multiply, add)
    if failures:
        logger.info(f"Rota-Baxter identity with weight {theta} fails on {len(failures)} sample pairs")
    return RotaBaxterReport(
        theta=theta, pairs_checked=len(samples) ** 2, failures=failures, required_weights=needed,
    )
