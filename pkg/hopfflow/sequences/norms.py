"""The norm functional N(f) = sup_r r · #{n : f_n >= r} on finite non-negative data."""
from fractions import Fraction
from typing import Union

from hopfflow.core.exceptions import SequenceError
from hopfflow.sequences.algebra import TruncatedSequence


def levin_norm(f: TruncatedSequence) -> Union[Fraction, float]:
    """
    On finite data the supremum is attained at one of the entry values, where
    the count of entries >= r is the position of r in the descending order.
    """
    if any(x < 0 for x in f.entries):
        raise SequenceError("The norm functional needs non-negative entries")
    best = Fraction(0) if f.mode == "exact" else 0.0
    ordered = sorted(f.entries, reverse=True)
    for count, r in enumerate(ordered, start=1):
        if r == 0:
            break
        # ties: the last occurrence of r carries the full count
        if count < len(ordered) and ordered[count] == r:
            continue
        best = max(best, r * count)
    return best
