"""Gaussian moments by Wick pairings."""
from fractions import Fraction
from typing import Iterator, List, Literal, Sequence, Tuple

from hopfflow.feynman.model import ModelData
from hopfflow.feynman.series import FormalSeries

Pairing = Tuple[Tuple[int, int], ...]
MetricMonomial = Tuple[Tuple[str, str], ...]


def wick_pairings(n: int) -> Iterator[Pairing]:
    """All partitions of {0..n-1} into unordered pairs; none for odd n."""
    if n % 2:
        return

    def pairings(items: List[int]) -> Iterator[List[Tuple[int, int]]]:
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for index, partner in enumerate(rest):
            for tail in pairings(rest[:index] + rest[index + 1:]):
                yield [(first, partner)] + tail

    for pairing in pairings(list(range(n))):
        yield tuple(pairing)


def wick_expansion(indices: Sequence[str]) -> List[MetricMonomial]:
    """
    Uncollected products of inverse-metric symbols g^{ab}, one per pairing.

    Each product is a sorted tuple of sorted color pairs.
    """
    return [
        tuple(sorted(tuple(sorted((indices[i], indices[j]))) for i, j in pairing))
        for pairing in wick_pairings(len(indices))
    ]


def pairing_sum(indices: Sequence[str], model: ModelData) -> Fraction:
    """Sum over pairings of the product of inverse-metric entries."""
    total = Fraction(0)
    for pairing in wick_pairings(len(indices)):
        term = Fraction(1)
        for i, j in pairing:
            term *= model.ginv(indices[i], indices[j])
            if not term:
                break
        total += term
    return total


def wick_moment(
    indices: Sequence[str],
    model: ModelData,
    lambda_power_mode: Literal["formal", "unit"] = "formal",
    max_weight: int = 0,
) -> FormalSeries:
    """
    Normalized Gaussian moment of a product of field coordinates.

    Zero for an odd number of fields; lambda^m times the pairing sum for 2m
    fields. In "unit" mode lambda is set to 1. The moment is a constant, so
    max_weight only sets how far the result is declared known.
    """
    if len(indices) % 2:
        return FormalSeries.zero(max_weight)
    power = len(indices) // 2 if lambda_power_mode == "formal" else 0
    return FormalSeries.constant(pairing_sum(indices, model), max_weight, lambda_power=power)
