"""Sequence algebras, partial-summation operators, regularized sums and running-time measures."""
from hopfflow.sequences.algebra import (
    TruncatedSequence, cauchy, maxconv, pointwise, product_unit, seq_product,
)
from hopfflow.sequences.summation import (
    EXPECTED_WEIGHTS, SUM_KINDS, intertwining_check, partial_sum, prime_sum, random_samples,
    rota_baxter_report, strict_sum, sum_operator,
)
from hopfflow.sequences.oracles import euler_gamma_estimate, harmonic_sequence, zeta_estimate
from hopfflow.sequences.gamma import (
    EULER_GAMMA, PolyInT, gamma_series, gamma_series_check, gamma_transform, zeta_symbol,
)
from hopfflow.sequences.fitting import FitReport, asymptotic_fit
from hopfflow.sequences.norms import levin_norm
from hopfflow.sequences.timing import (
    CutTiming, MaxPlus, UnionTiming, cut_timing_report, disjoint_union_timing, finish_times, running_time,
)

__all__ = [
    "TruncatedSequence", "cauchy", "maxconv", "pointwise", "product_unit", "seq_product",
    "EXPECTED_WEIGHTS", "SUM_KINDS", "intertwining_check", "partial_sum", "prime_sum", "random_samples",
    "rota_baxter_report", "strict_sum", "sum_operator",
    "euler_gamma_estimate", "harmonic_sequence", "zeta_estimate",
    "EULER_GAMMA", "PolyInT", "gamma_series", "gamma_series_check", "gamma_transform", "zeta_symbol",
    "FitReport", "asymptotic_fit", "levin_norm",
    "CutTiming", "MaxPlus", "UnionTiming", "cut_timing_report", "disjoint_union_timing", "finish_times",
    "running_time",
]
