"""Numeric Gaussian moments by adaptive quadrature, compared with the Wick moments."""
import logging
import math
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel
from scipy import integrate

from hopfflow.config import settings
from hopfflow.core.exceptions import ModelError
from hopfflow.feynman.model import ModelData
from hopfflow.feynman.wick import pairing_sum

logger = logging.getLogger(__name__)

# Half-width of the integration box in units of the widest standard deviation.
BOX_WIDTH = 16.0


class GaussianCheckReport(BaseModel):
    indices: list
    numeric: float
    exact: float
    abs_error: float
    rel_error: Optional[float] = None
    passed: bool


def numeric_gaussian_check(
    indices: Sequence[str],
    model: ModelData,
    tolerance: float = 1e-8,
) -> GaussianCheckReport:
    """
    Integrate prod phi^{a_i} against exp(-1/2 phi^T g phi) at lambda = 1.

    The ratio of the weighted integral to the plain Gaussian integral is taken
    over a truncated box and compared with the exact pairing sum. Only one or
    two colors are supported and g must be positive definite.
    """
    n = len(model.colors)
    if n > 2:
        raise ModelError("Numeric Gaussian check supports at most two colors")
    if not model.is_positive_definite():
        raise ModelError("Metric must be positive definite for the Gaussian integral to converge")

    g = np.array([[float(x) for x in row] for row in model.metric])
    covariance = np.linalg.inv(g)
    half_width = BOX_WIDTH * math.sqrt(float(np.max(np.diag(covariance))))
    positions = [model.index(c) for c in indices]

    def density(*phi: float) -> float:
        vector = np.array(phi)
        return math.exp(-0.5 * float(vector @ g @ vector))

    def weighted(*phi: float) -> float:
        value = density(*phi)
        for p in positions:
            value *= phi[p]
        return value

    options = {"epsabs": 0.0, "epsrel": settings.QUADRATURE_EPSREL, "limit": 200}
    bounds = [(-half_width, half_width)] * n
    if n == 1:
        numerator, _ = integrate.quad(weighted, *bounds[0], **options)
        denominator, _ = integrate.quad(density, *bounds[0], **options)
    else:
        numerator, _ = integrate.nquad(weighted, bounds, opts=options)
        denominator, _ = integrate.nquad(density, bounds, opts=options)

    numeric = numerator / denominator
    exact = float(pairing_sum(list(indices), model))
    abs_error = abs(numeric - exact)
    rel_error = abs_error / abs(exact) if exact else None
    # odd moments are compared on an absolute scale
    passed = abs_error <= tolerance * max(1.0, abs(exact))
    if not passed:
        logger.warning(f"Quadrature moment {numeric} differs from Wick value {exact} for {list(indices)}")
    return GaussianCheckReport(
        indices=list(indices), numeric=numeric, exact=exact,
        abs_error=abs_error, rel_error=rel_error, passed=passed,
    )
