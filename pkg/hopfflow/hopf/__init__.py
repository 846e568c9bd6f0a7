"""Graph Hopf algebra: product, cut coproduct, counit, gradings and antipode; finite-category bialgebras."""
from hopfflow.hopf.algebra import (
    FAMILIES, AdmissibleFamily, HopfElement, TensorElement, antipode, basis_graph, coproduct, counit,
    element_degree, get_family, grading_degree, product, reduced_coproduct, register_family,
)
from hopfflow.hopf.laws import antipode_sides, bialgebra_sides, coassociativity_sides, counit_sides
from hopfflow.hopf.category import (
    FiniteCategory, category_coassociativity, category_coproduct, category_counit, category_counit_sides,
)

__all__ = [
    "FAMILIES", "AdmissibleFamily", "HopfElement", "TensorElement", "antipode", "basis_graph",
    "coproduct", "counit", "element_degree", "get_family", "grading_degree", "product",
    "reduced_coproduct", "register_family",
    "antipode_sides", "bialgebra_sides", "coassociativity_sides", "counit_sides",
    "FiniteCategory", "category_coassociativity", "category_coproduct", "category_counit",
    "category_counit_sides",
]
