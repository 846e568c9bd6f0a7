"""Minimal-subtraction target algebras, the convolution group and the Birkhoff decomposition."""
from hopfflow.renorm.laurent import (
    ComplementaryLaurentAlgebra, LaurentAlgebra, LaurentValue, MSAlgebra, make_algebra,
)
from hopfflow.renorm.characters import (
    Character, CounitMap, DerivedMap, LinearMap, TableMap, make_toy_character,
)
from hopfflow.renorm.birkhoff import (
    BirkhoffReport, BirkhoffResult, birkhoff, convolution, convolution_inverse,
    convolution_inverse_recursive, convolve, regularized_value, verify_birkhoff,
)
from hopfflow.renorm.rota_baxter import RotaBaxterReport, required_weight, rota_baxter_check

__all__ = [
    "ComplementaryLaurentAlgebra", "LaurentAlgebra", "LaurentValue", "MSAlgebra", "make_algebra",
    "Character", "CounitMap", "DerivedMap", "LinearMap", "TableMap", "make_toy_character",
    "BirkhoffReport", "BirkhoffResult", "birkhoff", "convolution", "convolution_inverse",
    "convolution_inverse_recursive", "convolve", "regularized_value", "verify_birkhoff",
    "RotaBaxterReport", "required_weight", "rota_baxter_check",
]
