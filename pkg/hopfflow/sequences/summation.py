"""
Partial-summation operators on truncated sequences.

S(f)_N = f_1 + ... + f_N keeps the length. The shifted sum S'(f)_N = S(f)_{N+1}
needs one entry beyond N, so on a length-N input it returns length N - 1.
The strict sum is S - id.
"""
import logging
from fractions import Fraction
from functools import partial
from itertools import accumulate
from typing import Callable, Dict, List, Sequence

import numpy as np

from hopfflow.core.exceptions import SequenceError
from hopfflow.renorm.rota_baxter import RotaBaxterReport, rota_baxter_check
from hopfflow.sequences.algebra import ProductMode, TruncatedSequence, pointwise, seq_product

logger = logging.getLogger(__name__)

SUM_KINDS = ("partial", "prime", "strict")

# Default θ in R(f)R(g) = R(R(f)g + fR(g) + θfg). partial and strict satisfy it
# for both products; prime does not hold on general pairs.
EXPECTED_WEIGHTS: Dict[str, int] = {"partial": -1, "strict": 1, "prime": -1}


def partial_sum(f: TruncatedSequence) -> TruncatedSequence:
    return f._like(accumulate(f.entries))


def prime_sum(f: TruncatedSequence) -> TruncatedSequence:
    """S'(f)_N = S(f)_{N+1} for N = 1 .. len(f) - 1."""
    return f._like(list(accumulate(f.entries))[1:])


def strict_sum(f: TruncatedSequence) -> TruncatedSequence:
    """(S - id)(f)_N = f_1 + ... + f_{N-1}."""
    return partial_sum(f) - f


def sum_operator(kind: str) -> Callable[[TruncatedSequence], TruncatedSequence]:
    try:
        return {"partial": partial_sum, "prime": prime_sum, "strict": strict_sum}[kind]
    except KeyError:
        raise SequenceError(f"Unknown summation {kind!r}; expected one of {', '.join(SUM_KINDS)}")


def _common_prefix(f: TruncatedSequence, g: TruncatedSequence):
    n = min(len(f), len(g))
    return f.truncate(n), g.truncate(n)


def _aligned(op: Callable[[TruncatedSequence, TruncatedSequence], TruncatedSequence]):
    """
    Lift a binary operation to sequences of different lengths by cutting both
    to their common prefix. Entry n of every product here depends only on
    entries up to n, so the prefix is exact.
    """
    def run(f: TruncatedSequence, g: TruncatedSequence) -> TruncatedSequence:
        return op(*_common_prefix(f, g))
    return run


def intertwining_check(f: TruncatedSequence, g: TruncatedSequence) -> bool:
    """S(f * g) == S(f) • S(g): partial summation maps maxconv to the pointwise product."""
    return partial_sum(seq_product(f, g, "maxconv")) == pointwise(partial_sum(f), partial_sum(g))


def rota_baxter_report(kind: str, samples: Sequence[TruncatedSequence],
                       product: ProductMode = "maxconv", theta=None) -> RotaBaxterReport:
    """
    Check the Rota-Baxter identity of one summation operator on every ordered
    pair of samples. theta defaults to the operator's entry in EXPECTED_WEIGHTS.

    For the shifted sum, both sides are compared on the indices they both
    determine.
    """
    if product == "cauchy":
        raise SequenceError("Rota-Baxter reports are defined for the pointwise and maxconv products")
    operator_r = sum_operator(kind)
    theta = Fraction(EXPECTED_WEIGHTS[kind] if theta is None else theta)
    multiply = _aligned(partial(seq_product, mode=product))
    add = _aligned(TruncatedSequence.__add__)
    report = rota_baxter_check(operator_r, theta, samples, multiply=multiply, add=add)
    if not report.passed:
        logger.info(f"{kind} sum is not Rota-Baxter of weight {theta} on ({product}); "
                    f"weights needed per pair: {report.required_weights}")
    return report


def random_samples(count: int, length: int, seed: int = 0, bound: int = 5) -> List[TruncatedSequence]:
    """Reproducible random rational sequences with entries p/q, |p| <= bound, 1 <= q <= bound."""
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(count):
        nums = rng.integers(-bound, bound + 1, size=length)
        dens = rng.integers(1, bound + 1, size=length)
        samples.append(TruncatedSequence([Fraction(int(p), int(q)) for p, q in zip(nums, dens)]))
    return samples
