"""
Truncated sequences f_1, ..., f_N and the three products on them.

pointwise: (f·g)_n = f_n g_n, unit (1, 1, ...).
maxconv:   (f*g)_n = sum over max(p, q) = n of f_p g_q, unit (1, 0, 0, ...).
cauchy:    (f×g)_n = sum over p + q = n of f_p g_q with indices from 1; no unit.
"""
from fractions import Fraction
from itertools import accumulate
from typing import Dict, Iterable, List, Literal, Union

import numpy as np

from hopfflow.core.exceptions import SequenceError
from hopfflow.utils.rationals import format_rational, parse_rational

Mode = Literal["exact", "float"]
ProductMode = Literal["pointwise", "maxconv", "cauchy"]
Entry = Union[Fraction, float]


class TruncatedSequence:
    """Immutable finite sequence, exact (Fraction) or float."""

    __slots__ = ("entries", "mode")

    def __init__(self, entries: Iterable, mode: Mode = "exact"):
        if mode == "exact":
            self.entries = tuple(parse_rational(x) if not isinstance(x, Fraction) else x for x in entries)
        elif mode == "float":
            self.entries = tuple(float(x) for x in entries)
        else:
            raise SequenceError(f"Unknown sequence mode {mode!r}")
        self.mode = mode

    @classmethod
    def zeros(cls, length: int, mode: Mode = "exact") -> "TruncatedSequence":
        return cls([0] * length if mode == "exact" else [0.0] * length, mode)

    @classmethod
    def basis(cls, index: int, length: int, mode: Mode = "exact") -> "TruncatedSequence":
        """e_index: 1 at position index (1-based), 0 elsewhere."""
        return cls([1 if n == index else 0 for n in range(1, length + 1)], mode)

    def __len__(self) -> int:
        return len(self.entries)

    def at(self, n: int) -> Entry:
        """Entry f_n with 1-based n."""
        return self.entries[n - 1]

    def _like(self, entries: Iterable) -> "TruncatedSequence":
        return TruncatedSequence(entries, self.mode)

    def _check(self, other: "TruncatedSequence") -> None:
        if len(self) != len(other):
            raise SequenceError(f"Sequence lengths differ: {len(self)} and {len(other)}")
        if self.mode != other.mode:
            raise SequenceError(f"Sequence modes differ: {self.mode} and {other.mode}")

    def truncate(self, length: int) -> "TruncatedSequence":
        return self._like(self.entries[:length])

    def __add__(self, other: "TruncatedSequence") -> "TruncatedSequence":
        self._check(other)
        return self._like(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "TruncatedSequence") -> "TruncatedSequence":
        self._check(other)
        return self._like(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "TruncatedSequence":
        return self._like(-a for a in self.entries)

    def __mul__(self, scalar) -> "TruncatedSequence":
        """Scalar multiple; sequence products go through seq_product."""
        if isinstance(scalar, TruncatedSequence):
            raise SequenceError("Use seq_product with an explicit mode to multiply sequences")
        factor = Fraction(scalar) if self.mode == "exact" else float(scalar)
        return self._like(a * factor for a in self.entries)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSequence) and self.mode == other.mode and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.mode, self.entries))

    def __repr__(self) -> str:
        return f"TruncatedSequence({list(self.entries)!r}, mode={self.mode!r})"

    def coefficients(self) -> Dict[int, Entry]:
        return {n: v for n, v in enumerate(self.entries, start=1)}

    def as_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.entries], dtype=float)

    def to_document(self) -> dict:
        entries: List = [format_rational(x) for x in self.entries] if self.mode == "exact" else list(self.entries)
        return {"mode": self.mode, "entries": entries}


def pointwise(f: TruncatedSequence, g: TruncatedSequence) -> TruncatedSequence:
    f._check(g)
    return f._like(a * b for a, b in zip(f.entries, g.entries))


def maxconv(f: TruncatedSequence, g: TruncatedSequence) -> TruncatedSequence:
    """(f*g)_n = f_n S(g)_n + g_n S(f)_{n-1}."""
    f._check(g)
    zero = Fraction(0) if f.mode == "exact" else 0.0
    sf = [zero] + list(accumulate(f.entries))
    sg = list(accumulate(g.entries))
    return f._like(f.entries[i] * sg[i] + g.entries[i] * sf[i] for i in range(len(f)))


def cauchy(f: TruncatedSequence, g: TruncatedSequence) -> TruncatedSequence:
    """(f×g)_n = sum of f_p g_{n-p} for 1 <= p <= n-1."""
    f._check(g)
    n = len(f)
    if f.mode == "float":
        full = np.convolve(f.as_array(), g.as_array())
        # index i of the numpy result is (p - 1) + (q - 1), i.e. n - 2
        return f._like([0.0] + list(full[: max(n - 1, 0)]))
    result = [Fraction(0)] * n
    for p in range(1, n + 1):
        a = f.entries[p - 1]
        if a == 0:
            continue
        for q in range(1, n + 1 - p):
            result[p + q - 1] += a * g.entries[q - 1]
    return f._like(result)


_PRODUCTS = {"pointwise": pointwise, "maxconv": maxconv, "cauchy": cauchy}


def seq_product(f: TruncatedSequence, g: TruncatedSequence, mode: ProductMode = "pointwise") -> TruncatedSequence:
    try:
        product = _PRODUCTS[mode]
    except KeyError:
        raise SequenceError(f"Unknown product {mode!r}; expected pointwise, maxconv or cauchy")
    return product(f, g)


def product_unit(mode: ProductMode, length: int, seq_mode: Mode = "exact") -> TruncatedSequence:
    """Unit of the pointwise or maxconv product; the cauchy product has none."""
    if mode == "pointwise":
        return TruncatedSequence([1] * length, seq_mode)
    if mode == "maxconv":
        return TruncatedSequence.basis(1, length, seq_mode)
    raise SequenceError("The cauchy product is not unital")
