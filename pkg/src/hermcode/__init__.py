"""One-point Hermitian codes, zeta-function divisor counts and existence criteria
for algebraic-geometry codes beating the Goppa distance bound."""

from .curve import CurvePoint, genus
from .field import FieldElement, FieldSpec, make_field
from .onepoint import LinearCode, generator_matrix
from .weight import min_distance_exact

__all__ = [
    "CurvePoint",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "generator_matrix",
    "genus",
    "make_field",
    "min_distance_exact",
]
__version__ = "0.1.0"
