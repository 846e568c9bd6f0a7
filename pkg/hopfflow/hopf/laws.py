"""Both sides of the bialgebra and Hopf algebra identities, for checking."""
from fractions import Fraction
from typing import Dict, Tuple

from hopfflow.hopf.algebra import (
    EMPTY_KEY, HopfElement, Key, TensorElement, antipode, coproduct, counit, multiply_tensor,
    apply_on_factor,
)


def coassociativity_sides(x: HopfElement) -> Tuple[TensorElement, TensorElement]:
    """((Δ⊗id)Δx, (id⊗Δ)Δx)."""
    delta = coproduct(x)
    return apply_on_factor(delta, 0, coproduct), apply_on_factor(delta, 1, coproduct)


def bialgebra_sides(x: HopfElement, y: HopfElement) -> Tuple[TensorElement, TensorElement]:
    """(Δ(xy), Δ(x)Δ(y))."""
    return coproduct(x * y), coproduct(x) * coproduct(y)


def counit_sides(x: HopfElement) -> Tuple[HopfElement, HopfElement]:
    """((ε⊗id)Δx, (id⊗ε)Δx); both equal x."""
    left: Dict[Key, Fraction] = {}
    right: Dict[Key, Fraction] = {}
    for (a, b), coeff in coproduct(x).terms.items():
        if a == EMPTY_KEY:
            left[b] = left.get(b, Fraction(0)) + coeff
        if b == EMPTY_KEY:
            right[a] = right.get(a, Fraction(0)) + coeff
    return HopfElement(left, x.family), HopfElement(right, x.family)


def antipode_sides(x: HopfElement, degree_bound=None) -> Tuple[HopfElement, HopfElement, HopfElement]:
    """(m(S⊗id)Δx, m(id⊗S)Δx, uε(x))."""
    delta = coproduct(x)

    def s(e: HopfElement) -> HopfElement:
        return antipode(e, degree_bound)

    left = multiply_tensor(apply_on_factor(delta, 0, s))
    right = multiply_tensor(apply_on_factor(delta, 1, s))
    return left, right, HopfElement.unit(x.family) * counit(x)
