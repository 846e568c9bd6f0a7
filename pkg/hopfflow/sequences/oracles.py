"""Independent numeric estimates of Euler's constant and zeta values."""
import logging
import math
from fractions import Fraction

import numpy as np

from hopfflow.core.exceptions import SequenceError
from hopfflow.sequences.algebra import Mode, TruncatedSequence

logger = logging.getLogger(__name__)


def harmonic_sequence(length: int, mode: Mode = "float") -> TruncatedSequence:
    """l = (1, 1/2, 1/3, ...)."""
    if mode == "exact":
        return TruncatedSequence([Fraction(1, n) for n in range(1, length + 1)], "exact")
    return TruncatedSequence(1.0 / np.arange(1, length + 1, dtype=float), "float")


def euler_gamma_estimate(length: int = 10 ** 6, corrected: bool = False) -> float:
    """
    S(l)_N - log N for the harmonic sequence l.

    The plain estimate is off by about 1/(2N); corrected subtracts the first
    two Euler-Maclaurin terms.
    """
    if length < 1:
        raise SequenceError("Need at least one term")
    estimate = math.fsum(1.0 / n for n in range(1, length + 1)) - math.log(length)
    if corrected:
        estimate -= 1.0 / (2 * length) - 1.0 / (12 * length ** 2)
    return estimate


def zeta_estimate(k: int, length: int = 1000) -> float:
    """Σ_{n<=N} n^-k plus the Euler-Maclaurin tail N^(1-k)/(k-1) - N^-k/2 + k N^(-k-1)/12."""
    if k < 2:
        raise SequenceError(f"zeta({k}) diverges")
    if length < 1:
        raise SequenceError("Need at least one term")
    head = math.fsum(float(n) ** -k for n in range(1, length + 1))
    n = float(length)
    tail = n ** (1 - k) / (k - 1) - n ** -k / 2 + k * n ** (-k - 1) / 12
    return head + tail
