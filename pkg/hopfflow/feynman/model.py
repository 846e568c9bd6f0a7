"""Toy-model data: colors, metric, inverse metric and coupling tensors."""
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict

from hopfflow.core.exceptions import ModelError
from hopfflow.feynman.series import Symbol

logger = logging.getLogger(__name__)


def _to_fraction(value: sympy.Rational) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _rational_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    n = len(rows)
    return sympy.Matrix(n, n, lambda i, j: sympy.Rational(rows[i][j].numerator, rows[i][j].denominator))


class ModelData(BaseModel):
    """
    Colors, metric g_ab and coupling tensors of the toy model.

    Couplings are stored on sorted index multisets, so each symmetric tensor
    is given once per multiset. A symbol present in `couplings` is active:
    series keep it as a formal variable and evaluate() substitutes its value.
    Symbols absent from `couplings` are zero. Build instances with create().
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    colors: Tuple[str, ...]
    metric: Tuple[Tuple[Fraction, ...], ...]
    inverse_metric: Tuple[Tuple[Fraction, ...], ...]
    couplings: Dict[Symbol, Fraction]
    rank_bound: int

    @classmethod
    def create(
        cls,
        colors: Sequence[str],
        metric: Sequence[Sequence[object]],
        couplings: Mapping[Iterable[str], object],
        rank_bound: int = 0,
    ) -> "ModelData":
        """
        Validate and build a model.

        The metric must be square, symmetric and invertible over the rationals.
        Coupling keys are index lists in any order; two keys naming the same
        multiset must carry the same value.
        """
        colors = tuple(colors)
        n = len(colors)
        if n == 0:
            raise ModelError("Model needs at least one color")
        if len(set(colors)) != n:
            raise ModelError("Colors must be distinct")
        try:
            rows = tuple(tuple(Fraction(x) for x in row) for row in metric)
        except (TypeError, ValueError) as exc:
            raise ModelError(f"Metric entries must be rationals: {exc}") from exc
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ModelError(f"Metric must be a {n}x{n} matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ModelError(f"Metric is not symmetric at ({colors[i]}, {colors[j]})")
        matrix = _rational_matrix(rows)
        if matrix.det() == 0:
            raise ModelError("Metric is not invertible")
        inverse = matrix.inv()

        order = {c: i for i, c in enumerate(colors)}
        stored: Dict[Symbol, Fraction] = {}
        for key, value in couplings.items():
            indices = list(key)
            if not indices:
                raise ModelError("Coupling symbols need at least one index")
            unknown = sorted({c for c in indices if c not in order})
            if unknown:
                raise ModelError(f"Coupling {','.join(indices)} uses unknown colors {unknown}")
            symbol = tuple(sorted(indices, key=order.__getitem__))
            value = Fraction(value)
            if symbol in stored and stored[symbol] != value:
                raise ModelError(f"Coupling tensor is not symmetric on indices {','.join(symbol)}")
            stored[symbol] = value

        max_rank = max((len(s) for s in stored), default=0)
        if rank_bound and rank_bound < max_rank:
            raise ModelError(f"Rank bound {rank_bound} is below the largest coupling rank {max_rank}")
        logger.debug(f"Model with {n} colors and {len(stored)} active couplings")
        return cls(
            colors=colors,
            metric=rows,
            inverse_metric=tuple(tuple(_to_fraction(inverse[i, j]) for j in range(n)) for i in range(n)),
            couplings=stored,
            rank_bound=rank_bound or max_rank,
        )

    def index(self, color: str) -> int:
        try:
            return self.colors.index(color)
        except ValueError:
            raise ModelError(f"Unknown color {color!r}; the model declares {', '.join(self.colors)}")

    def symbol(self, indices: Iterable[str]) -> Symbol:
        order = {c: i for i, c in enumerate(self.colors)}
        return tuple(sorted(indices, key=order.__getitem__))

    def ginv(self, a: str, b: str) -> Fraction:
        return self.inverse_metric[self.index(a)][self.index(b)]

    def g(self, a: str, b: str) -> Fraction:
        return self.metric[self.index(a)][self.index(b)]

    def is_active(self, symbol: Symbol) -> bool:
        return symbol in self.couplings

    def active_symbols(self) -> List[Symbol]:
        return sorted(self.couplings, key=lambda s: (len(s), [self.index(c) for c in s]))

    def active_ranks(self) -> List[int]:
        return sorted({len(s) for s in self.couplings})

    def is_positive_definite(self) -> bool:
        return bool(_rational_matrix(self.metric).is_positive_definite)
