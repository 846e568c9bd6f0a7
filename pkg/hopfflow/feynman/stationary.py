"""The classical action, its stationary point and critical value."""
import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Dict

from hopfflow.core.exceptions import ConvergenceError
from hopfflow.feynman.fields import FieldPolynomial
from hopfflow.feynman.model import ModelData
from hopfflow.feynman.series import FormalSeries

logger = logging.getLogger(__name__)

FieldValues = Dict[str, FormalSeries]


def _multiplicity_factor(indices) -> int:
    factor = 1
    for count in Counter(indices).values():
        factor *= math.factorial(count)
    return factor


def interaction_polynomial(model: ModelData, max_weight: int) -> FieldPolynomial:
    """S_1 = sum over active symbols s of C_s phi^s / prod mult(s)!."""
    terms = {}
    for symbol in model.active_symbols():
        monomial = tuple(sorted(Counter(symbol).items()))
        terms[monomial] = FormalSeries.symbol(symbol, max_weight, Fraction(1, _multiplicity_factor(symbol)))
    return FieldPolynomial(terms, max_weight)


def free_polynomial(model: ModelData, max_weight: int) -> FieldPolynomial:
    """S_0 = -1/2 sum g_ab phi^a phi^b."""
    terms = {}
    for a in model.colors:
        for b in model.colors:
            monomial = tuple(sorted(Counter((a, b)).items()))
            value = -model.g(a, b) / 2
            if monomial in terms:
                terms[monomial] = terms[monomial] + FormalSeries.constant(value, max_weight)
            else:
                terms[monomial] = FormalSeries.constant(value, max_weight)
    return FieldPolynomial(terms, max_weight)


def action_polynomial(model: ModelData, max_weight: int) -> FieldPolynomial:
    return free_polynomial(model, max_weight) + interaction_polynomial(model, max_weight)


def raised_couplings(model: ModelData, max_weight: int) -> FieldValues:
    """C^a = sum_b g^{ab} C_b over the active rank-one couplings."""
    values = {}
    for a in model.colors:
        total = FormalSeries.zero(max_weight)
        for b in model.colors:
            if model.is_active((b,)) and model.ginv(a, b):
                total = total + FormalSeries.symbol((b,), max_weight, model.ginv(a, b))
        values[a] = total
    return values


def _source_terms(model: ModelData, phi: FieldValues, max_weight: int) -> FieldValues:
    """dS_1/dphi^b evaluated at phi, for every color b."""
    sources = {b: FormalSeries.zero(max_weight) for b in model.colors}
    for symbol in model.active_symbols():
        for b in sorted(set(symbol)):
            rest = list(symbol)
            rest.remove(b)
            term = FormalSeries.symbol(symbol, max_weight, Fraction(1, _multiplicity_factor(rest)))
            for color in rest:
                term = term * phi[color]
                if term.is_zero():
                    break
            sources[b] = sources[b] + term
    return sources


def stationary_point(model: ModelData, max_weight: int) -> FieldValues:
    """
    Solve dS/dphi^a = 0 for phi_0 with phi_0^a = C^a modulo the higher couplings.

    Iterates phi^a = sum_b g^{ab} dS_1/dphi^b(phi) from phi = C^a until one more
    pass changes nothing up to max_weight.
    """
    phi = raised_couplings(model, max_weight)
    for iteration in range(max_weight + 2):
        sources = _source_terms(model, phi, max_weight)
        updated = {}
        for a in model.colors:
            total = FormalSeries.zero(max_weight)
            for b in model.colors:
                if model.ginv(a, b):
                    total = total + sources[b] * model.ginv(a, b)
            updated[a] = total
        if all(updated[a] == phi[a] for a in model.colors):
            logger.debug(f"Stationary point converged after {iteration} iterations")
            return updated
        phi = updated
    logger.error(f"Stationary point did not settle after {max_weight + 2} iterations at weight {max_weight}")
    raise ConvergenceError(f"Stationary point iteration did not converge up to weight {max_weight}")


def action_residual(model: ModelData, phi: FieldValues, max_weight: int) -> FieldValues:
    """dS/dphi^a at phi for every color; all zero at a stationary point."""
    residual = {}
    sources = _source_terms(model, phi, max_weight)
    for a in model.colors:
        total = sources[a]
        for b in model.colors:
            total = total - phi[b] * model.g(a, b)
        residual[a] = total.truncate(max_weight)
    return residual


def critical_value(model: ModelData, max_weight: int) -> FormalSeries:
    """S(phi_0) as a formal series."""
    phi = stationary_point(model, max_weight)
    return action_polynomial(model, max_weight).substitute(phi)
