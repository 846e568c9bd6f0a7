"""Least-squares estimates of the polynomial P_f with S(f)_N ≈ P_f(log N)."""
import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from hopfflow.config import settings
from hopfflow.core.exceptions import FitError
from hopfflow.sequences.algebra import TruncatedSequence
from hopfflow.sequences.gamma import PolyInT

logger = logging.getLogger(__name__)


class FitReport(BaseModel):
    """
    Fitted coefficients over the window [lo, hi] of indices, with residuals
    S(f)_n - P(log n) measured at both ends of the window. A residual that
    decays across the window supports S(f)_N = P(log N) + o(1).
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    degree: int
    coefficients: List[float]
    window: Tuple[int, int]
    residual_rms: float
    residual_head: float
    residual_tail: float
    condition_number: float
    ill_conditioned: bool
    short_sequence: bool

    @property
    def polynomial(self) -> PolyInT:
        return PolyInT(self.coefficients)

    @property
    def residual_decaying(self) -> bool:
        return self.residual_tail <= self.residual_head

    def to_document(self) -> dict:
        return {**self.model_dump(), "residual_decaying": self.residual_decaying}


def _partial_sums(f: Union[TruncatedSequence, Sequence[float], np.ndarray]) -> np.ndarray:
    values = f.as_array() if isinstance(f, TruncatedSequence) else np.asarray(f, dtype=float)
    return np.cumsum(values)


def asymptotic_fit(f: Union[TruncatedSequence, Sequence[float], np.ndarray], degree: int,
                   window_start: Optional[int] = None) -> FitReport:
    """
    Ordinary least squares of S(f)_n against 1, log n, ..., (log n)^degree for
    n in [window_start, N], window_start defaulting to N // 2.
    """
    if degree < 0:
        raise FitError("Fit degree must be non-negative")
    sums = _partial_sums(f)
    length = len(sums)
    if length == 0:
        raise FitError("Cannot fit an empty sequence")
    lo = max(1, length // 2 if window_start is None else window_start)
    if length - lo + 1 < degree + 1:
        raise FitError(f"Window [{lo}, {length}] has too few points for degree {degree}")

    short = length < settings.FIT_MIN_LENGTH
    if short:
        logger.warning(f"Sequence of length {length} is shorter than {settings.FIT_MIN_LENGTH}; the fit is unreliable")

    n = np.arange(lo, length + 1, dtype=float)
    design = np.vander(np.log(n), degree + 1, increasing=True)
    target = sums[lo - 1:]
    coefficients, _, _, _ = np.linalg.lstsq(design, target, rcond=None)
    condition = float(np.linalg.cond(design))
    ill = not np.isfinite(condition) or condition > settings.FIT_CONDITION_LIMIT
    if ill:
        logger.warning(f"Ill-conditioned fit: condition number {condition:.3g}")

    residual = target - design @ coefficients
    edge = max(1, len(residual) // 10)
    report = FitReport(
        degree=degree,
        coefficients=[float(c) for c in coefficients],
        window=(lo, length),
        residual_rms=float(np.sqrt(np.mean(residual ** 2))),
        residual_head=float(np.mean(np.abs(residual[:edge]))),
        residual_tail=float(np.mean(np.abs(residual[-edge:]))),
        condition_number=condition,
        ill_conditioned=ill,
        short_sequence=short,
    )
    logger.debug(f"Fit of degree {degree} on [{lo}, {length}]: {report.coefficients}")
    return report
