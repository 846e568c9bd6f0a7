"""Tests for sequence algebras, partial sums, the Γ transform, fits, norms and running times."""
import math
import sys
from fractions import Fraction
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest
import sympy

from hopfflow.config import settings
from hopfflow.core.exceptions import DirectednessError, FitError, SequenceError
from hopfflow.graphs import enumerate_oriented_graphs, is_directed
from hopfflow.graphs.combinatorial import disjoint_union
from hopfflow.graphs.cuts import enumerate_cuts
from hopfflow.graphs.library import directed_path, oriented_corolla, oriented_two_cycle
from hopfflow.prim import BasicFunction, b, c
from hopfflow.prim.builder import (
    addition_term, build_flowchart, multiplication_term, shifted_addition_term,
)
from hopfflow.prim.flowchart import oriented_graph
from hopfflow.sequences import (
    EULER_GAMMA, MaxPlus, PolyInT, TruncatedSequence, asymptotic_fit, cut_timing_report,
    disjoint_union_timing, euler_gamma_estimate, gamma_series, gamma_series_check, gamma_transform,
    harmonic_sequence, intertwining_check, levin_norm, partial_sum, prime_sum, product_unit,
    random_samples, rota_baxter_report, running_time, seq_product, strict_sum, zeta_estimate, zeta_symbol,
)


def seq(*entries):
    return TruncatedSequence(entries)


def basis(index, length):
    return TruncatedSequence.basis(index, length)


class TestProducts:
    """Test the pointwise, maxconv and cauchy products."""

    def test_pointwise_unit(self):
        """Test (1,2,3)·(1,1,1) = (1,2,3)."""
        assert seq_product(seq(1, 2, 3), seq(1, 1, 1), "pointwise") == seq(1, 2, 3)

    def test_maxconv_unit(self):
        """Test (1,0,0) is the maxconv unit."""
        assert seq_product(basis(1, 3), basis(1, 3), "maxconv") == basis(1, 3)
        f = seq(2, Fraction(-1, 3), 5)
        assert seq_product(product_unit("maxconv", 3), f, "maxconv") == f

    def test_maxconv_matches_definition(self):
        """Test maxconv against the sum over max(p, q) = n."""
        f, g = seq(1, 2, 3, 4), seq(5, -1, 2, Fraction(1, 2))
        expected = [sum(f.at(p) * g.at(q) for p in range(1, 5) for q in range(1, 5) if max(p, q) == n)
                    for n in range(1, 5)]
        assert seq_product(f, g, "maxconv").entries == tuple(expected)

    def test_cauchy_shifts_degree(self):
        """Test (1,0,0)×(1,0,0) = (0,1,0)."""
        assert seq_product(basis(1, 3), basis(1, 3), "cauchy") == seq(0, 1, 0)

    def test_cauchy_float_mode_agrees(self):
        """Test the numpy path of the cauchy product against exact arithmetic."""
        f, g = seq(1, 2, 3, 4, 5), seq(2, 0, 1, 1, 3)
        exact = seq_product(f, g, "cauchy")
        floats = seq_product(TruncatedSequence(f.entries, "float"), TruncatedSequence(g.entries, "float"), "cauchy")
        assert floats.entries == pytest.approx([float(x) for x in exact.entries])

    def test_cauchy_has_no_unit(self):
        """Test that no basis sequence acts as a cauchy unit."""
        ones = seq(1, 1, 1, 1, 1)
        for k in range(1, 6):
            assert seq_product(basis(k, 5), ones, "cauchy") != ones
        with pytest.raises(SequenceError):
            product_unit("cauchy", 5)

    @pytest.mark.parametrize("mode", ["pointwise", "maxconv", "cauchy"])
    def test_commutative_and_associative(self, mode):
        """Test commutativity and associativity on random rational triples."""
        f, g, h = random_samples(3, 10, seed=7)
        assert seq_product(f, g, mode) == seq_product(g, f, mode)
        assert seq_product(seq_product(f, g, mode), h, mode) == seq_product(f, seq_product(g, h, mode), mode)

    def test_length_mismatch(self):
        """Test that sequences of different lengths cannot be multiplied."""
        with pytest.raises(SequenceError):
            seq_product(seq(1, 2), seq(1, 2, 3), "pointwise")

    def test_mode_mismatch(self):
        """Test that exact and float sequences cannot be added."""
        with pytest.raises(SequenceError):
            seq(1, 2) + TruncatedSequence([1.0, 2.0], "float")

    def test_unknown_product(self):
        """Test that an unknown product name is rejected."""
        with pytest.raises(SequenceError):
            seq_product(seq(1), seq(1), "convolution")


class TestSummation:
    """Test partial summation operators and their Rota-Baxter identities."""

    def test_partial_sum(self):
        """Test S((1,1,1,1)) = (1,2,3,4)."""
        assert partial_sum(seq(1, 1, 1, 1)) == seq(1, 2, 3, 4)

    def test_prime_sum_drops_last_index(self):
        """Test S'(f)_N = S(f)_{N+1} on a length N - 1 result."""
        assert prime_sum(seq(1, 2, 3, 4)) == seq(3, 6, 10)

    def test_strict_sum(self):
        """Test (S - id)(f)_N sums the entries before N."""
        assert strict_sum(seq(1, 2, 3, 4)) == seq(0, 1, 3, 6)

    def test_intertwining_on_unit(self):
        """Test S(f*g) = S(f)•S(g) for f = g = (1,0,0)."""
        f = basis(1, 3)
        assert partial_sum(seq_product(f, f, "maxconv")) == seq(1, 1, 1)
        assert intertwining_check(f, f)

    def test_intertwining_random(self):
        """Test S maps maxconv to the pointwise product on random pairs."""
        samples = random_samples(4, 8, seed=3)
        for f in samples:
            for g in samples:
                assert intertwining_check(f, g)

    @pytest.mark.parametrize("product", ["maxconv", "pointwise"])
    def test_partial_sum_weight_minus_one(self, product):
        """Test S(f)S(g) = S(S(f)g + fS(g) - fg) exactly on 100 random pairs of length 8."""
        report = rota_baxter_report("partial", random_samples(10, 8, seed=11), product)
        assert report.theta == -1
        assert report.passed
        assert report.pairs_checked == 100

    def test_partial_sum_fails_weight_plus_one(self):
        """Test that weight +1 fails for S with f = g = (1,0,0)."""
        report = rota_baxter_report("partial", [basis(1, 4)], "maxconv", theta=1)
        assert not report.passed
        assert report.required_weights["0,0"] == -1

    @pytest.mark.parametrize("product", ["maxconv", "pointwise"])
    def test_strict_sum_weight_plus_one(self, product):
        """Test S - id satisfies the identity with weight +1."""
        report = rota_baxter_report("strict", random_samples(4, 8, seed=5), product)
        assert report.theta == 1
        assert report.passed

    @pytest.mark.parametrize("product", ["maxconv", "pointwise"])
    def test_shifted_sum_not_weight_minus_one(self, product):
        """Test the shifted sum fails weight -1 on (e1, e2)."""
        report = rota_baxter_report("prime", [basis(1, 5), basis(2, 5)], product)
        assert not report.passed
        assert report.required_weights

    def test_shifted_sum_pointwise_diagonal(self):
        """Test the shifted sum satisfies weight -1 on the pair (e1, e1) for the pointwise product."""
        report = rota_baxter_report("prime", [basis(1, 5)], "pointwise")
        assert report.passed

    def test_cauchy_rejected(self):
        """Test that Rota-Baxter reports need a product with a unit."""
        with pytest.raises(SequenceError):
            rota_baxter_report("partial", [basis(1, 3)], "cauchy")

    def test_unknown_kind(self):
        """Test that an unknown summation is rejected."""
        with pytest.raises(SequenceError):
            rota_baxter_report("double", [basis(1, 3)])


class TestGammaTransform:
    """Test the Γ(1 + ∂t) transform of polynomials."""

    def test_series_low_order(self):
        """Test Γ(1+x) = 1 - γx + (γ²/2 + ζ(2)/2)x² + ..."""
        a = gamma_series(2)
        z2 = zeta_symbol(2)
        assert a[0] == 1
        assert sympy.expand(a[1] + EULER_GAMMA) == 0
        assert sympy.expand(a[2] - (EULER_GAMMA ** 2 / 2 + z2 / 2)) == 0

    def test_series_matches_taylor_expansion(self):
        """Test the log-gamma construction against sympy's expansion of Γ(1+x)."""
        assert gamma_series_check(2)

    def test_constant(self):
        """Test a constant polynomial is unchanged."""
        assert gamma_transform(PolyInT(["5/2"])) == PolyInT(["5/2"])

    def test_harmonic_polynomial(self):
        """Test P(t) = t + γ maps to Q(t) = t."""
        assert gamma_transform(PolyInT(["gamma", 1])) == PolyInT([0, 1])

    def test_square(self):
        """Test P(t) = t² maps to t² - 2γt + γ² + ζ(2)."""
        q = gamma_transform(PolyInT([0, 0, 1]))
        expected = PolyInT([EULER_GAMMA ** 2 + zeta_symbol(2), -2 * EULER_GAMMA, 1])
        assert q == expected

    def test_linear(self):
        """Test the transform is linear."""
        p1, p2 = PolyInT([1, 2, 3]), PolyInT(["1/2", 0, -1, 4])
        assert gamma_transform(p1 + p2 * 3, 3) == gamma_transform(p1, 3) + gamma_transform(p2, 3) * 3

    def test_leading_term_preserved(self):
        """Test the leading coefficient and degree survive the transform."""
        p = PolyInT([7, -1, 0, "2/3"])
        q = gamma_transform(p)
        assert q.degree == 3
        assert q.coefficient(3) == sympy.Rational(2, 3)

    def test_order_below_degree(self):
        """Test an order below the degree is rejected."""
        with pytest.raises(SequenceError):
            gamma_transform(PolyInT([0, 0, 1]), order=1)

    def test_numeric_substitution(self):
        """Test the numeric form of t + γ uses the Euler constant estimate."""
        numeric = PolyInT(["gamma", 1]).numeric()
        assert float(numeric.coefficient(0)) == pytest.approx(float(sympy.EulerGamma.evalf()), abs=1e-9)


class TestOracles:
    """Test the independent numeric estimates."""

    def test_euler_gamma(self):
        """Test S(l)_N - log N approaches γ."""
        reference = float(sympy.EulerGamma.evalf(20))
        assert euler_gamma_estimate(10 ** 5) == pytest.approx(reference, abs=1e-5)
        assert euler_gamma_estimate(10 ** 5, corrected=True) == pytest.approx(reference, abs=1e-12)

    def test_zeta(self):
        """Test the corrected zeta sums."""
        assert zeta_estimate(2) == pytest.approx(math.pi ** 2 / 6, abs=1e-12)
        assert zeta_estimate(4) == pytest.approx(math.pi ** 4 / 90, abs=1e-12)

    def test_zeta_divergent(self):
        """Test ζ(1) is rejected."""
        with pytest.raises(SequenceError):
            zeta_estimate(1)


class TestAsymptoticFit:
    """Test least-squares estimates of P_f."""

    def test_harmonic(self):
        """Test the harmonic sequence at N = 10^6 fits t + γ."""
        report = asymptotic_fit(harmonic_sequence(10 ** 6), 1)
        constant, slope = report.coefficients
        assert constant == pytest.approx(euler_gamma_estimate(10 ** 6), abs=1e-4)
        assert slope == pytest.approx(1.0, abs=1e-3)
        assert not report.ill_conditioned
        assert not report.short_sequence

    def test_eventually_constant(self):
        """Test f = (1,0,0,...) fits the constant 1."""
        report = asymptotic_fit(TruncatedSequence.basis(1, 10 ** 4, "float"), 0)
        assert report.coefficients[0] == pytest.approx(1.0, abs=1e-12)
        assert report.residual_rms == pytest.approx(0.0, abs=1e-12)

    def test_inverse_squares(self):
        """Test f_n = 1/n² fits ζ(2) with a small residual."""
        n = 10 ** 5
        f = TruncatedSequence([1.0 / k ** 2 for k in range(1, n + 1)], "float")
        report = asymptotic_fit(f, 0)
        assert report.coefficients[0] == pytest.approx(zeta_estimate(2), abs=1e-4)
        assert report.residual_rms < 1e-4
        assert report.polynomial.degree == 0

    def test_short_sequence_flagged(self):
        """Test sequences shorter than the documented minimum are flagged."""
        report = asymptotic_fit(harmonic_sequence(100), 1)
        assert report.short_sequence

    def test_ill_conditioned_flag(self, monkeypatch):
        """Test the condition number limit is applied."""
        monkeypatch.setattr(settings, "FIT_CONDITION_LIMIT", 1.5)
        report = asymptotic_fit(harmonic_sequence(1000), 1)
        assert report.ill_conditioned

    def test_errors(self):
        """Test empty input, negative degree and too small windows."""
        with pytest.raises(FitError):
            asymptotic_fit([], 0)
        with pytest.raises(FitError):
            asymptotic_fit([1.0, 2.0], -1)
        with pytest.raises(FitError):
            asymptotic_fit([1.0, 2.0, 3.0], 3)


class TestNorm:
    """Test the norm functional."""

    def test_examples(self):
        """Test (1,0,0) -> 1, (1,1) -> 2 and the harmonic sequence -> 1."""
        assert levin_norm(seq(1, 0, 0)) == 1
        assert levin_norm(seq(1, 1)) == 2
        assert levin_norm(harmonic_sequence(12, "exact")) == 1

    def test_ties_and_zero(self):
        """Test repeated values and the zero sequence."""
        assert levin_norm(seq(3, 1, 3, 1, 1)) == 6
        assert levin_norm(seq(0, 0)) == 0

    def test_monotone(self):
        """Test f <= g pointwise implies N(f) <= N(g)."""
        f, g = seq(1, Fraction(1, 2), 0, 2), seq(1, 1, Fraction(1, 3), 2)
        assert levin_norm(f) <= levin_norm(g)

    def test_negative_rejected(self):
        """Test negative entries are rejected."""
        with pytest.raises(SequenceError):
            levin_norm(seq(1, -1))


class TestRunningTime:
    """Test max-plus running times."""

    def test_semiring(self):
        """Test ⊕ = max, ⊗ = + with their identities."""
        a, b = MaxPlus(3), MaxPlus(5)
        assert a + b == MaxPlus(5)
        assert a * b == MaxPlus(8)
        assert a + a == a
        assert a + MaxPlus.zero() == a
        assert a * MaxPlus.one() == a
        assert a * MaxPlus.zero() == MaxPlus.zero()
        c = MaxPlus(2)
        assert a * (b + c) == a * b + a * c

    def test_negative_time_rejected(self):
        """Test negative values are rejected."""
        with pytest.raises(SequenceError):
            MaxPlus(-1)

    def test_single_corolla(self):
        """Test one vertex of cost 3 takes 3."""
        assert running_time(oriented_corolla(), {"v": 3}) == MaxPlus(3)

    def test_disjoint_union(self):
        """Test T(τ1 ∐ τ2) = max(T(τ1), T(τ2))."""
        timing = disjoint_union_timing(oriented_corolla(), {"v": 3}, oriented_corolla(), {"v": 5})
        assert timing.union == 5
        assert timing.holds

    def test_chain(self):
        """Test a two-vertex chain with costs 3 then 5 takes 8."""
        assert running_time(directed_path(2), {"v0": 3, "v1": 5}) == MaxPlus(8)

    def test_monotone_in_costs(self):
        """Test raising a cost never lowers the running time."""
        graph = directed_path(3)
        low = running_time(graph, {"v0": 1, "v1": 2, "v2": 3})
        high = running_time(graph, {"v0": 1, "v1": 4, "v2": 3})
        assert low <= high

    def test_flowchart(self):
        """Test the running time of a flowchart follows data from leaves to root."""
        chart = build_flowchart(addition_term())
        assert running_time(chart, {"v0": 2, "v1": 3}) == MaxPlus(5)

    def test_wheel_rejected(self):
        """Test oriented wheels have no running time."""
        with pytest.raises(DirectednessError):
            running_time(oriented_two_cycle(), {})

    def test_cut_report_chain(self):
        """Test the chain cut is tight."""
        rows = cut_timing_report(directed_path(2), {"v0": 3, "v1": 5})
        assert len(rows) == 1
        assert rows[0].bounded and rows[0].equality

    def test_cut_report_parallel(self):
        """Test a cut between unrelated parts is bounded but not tight."""
        graph = disjoint_union(oriented_corolla(), oriented_corolla())
        rows = cut_timing_report(graph, {"a.v": 3, "b.v": 5})
        assert rows
        assert all(row.bounded for row in rows)
        assert not any(row.equality for row in rows)


TIMING_CHARTS = {
    "successor_pair": lambda: build_flowchart(c(BasicFunction.succ(), BasicFunction.succ())),
    "addition": lambda: build_flowchart(addition_term()),
    "shifted_addition": lambda: build_flowchart(shifted_addition_term()),
    "multiplication": lambda: build_flowchart(multiplication_term()),
    "addition_then_succ": lambda: build_flowchart(c(addition_term(), BasicFunction.succ())),
    "bracket": lambda: build_flowchart(b(addition_term(), shifted_addition_term())),
    "two_components": lambda: build_flowchart(addition_term(), BasicFunction.succ()),
}


def ascending_costs(graph):
    """Costs 1, 2, 3, ... in vertex order."""
    return {v: index + 1 for index, v in enumerate(sorted(graph.vertices))}


def chart_graphs():
    graphs = []
    for make in TIMING_CHARTS.values():
        chart = make()
        graphs.append(oriented_graph(chart.graph, chart.roots))
    return graphs


def directed_classes(max_flags, max_vertices=None):
    return [
        form.graph for form in enumerate_oriented_graphs(max_flags)
        if is_directed(form.graph) and (max_vertices is None or len(form.graph.vertices) <= max_vertices)
    ]


class TestTimingCorpus:
    """Test the timing inequalities across small directed graphs and flowcharts."""

    def test_charts_small(self):
        """Test every chart in the timing set has at most five vertices."""
        assert all(len(graph.vertices) <= 5 for graph in chart_graphs())
        assert max(len(graph.vertices) for graph in chart_graphs()) == 5

    @pytest.mark.parametrize("name", sorted(TIMING_CHARTS))
    def test_chart_cut_reports(self, name):
        """Test T(τ) <= T(τ^C) + T(τ_C) on every proper cut of a built chart."""
        chart = TIMING_CHARTS[name]()
        graph = oriented_graph(chart.graph, chart.roots)
        rows = cut_timing_report(graph, ascending_costs(graph))
        assert len(rows) == len([cut for cut in enumerate_cuts(graph) if cut.proper])
        assert all(row.bounded for row in rows)

    @pytest.mark.slow
    def test_enumerated_cut_reports(self):
        """Test the cut bound on every directed class with at most five vertices."""
        graphs = directed_classes(6, max_vertices=5)
        assert graphs
        for graph in graphs:
            for row in cut_timing_report(graph, ascending_costs(graph)):
                assert row.bounded, (sorted(graph.flags), row.upper_vertices)

    @pytest.mark.slow
    def test_disjoint_union_every_pair(self):
        """Test T(τ1 ∐ τ2) = max(T(τ1), T(τ2)) on every ordered pair of the corpus."""
        corpus = directed_classes(4) + chart_graphs()
        for first in corpus:
            for second in corpus:
                timing = disjoint_union_timing(first, ascending_costs(first), second, ascending_costs(second))
                assert timing.holds, (sorted(first.flags), sorted(second.flags))
