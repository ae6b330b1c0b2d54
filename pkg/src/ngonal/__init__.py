"""Braid monodromy and Alexander polynomials of completely reducible n-gonal curves."""

from .alexander import AlexanderResult, alexander_details, alexander_polynomial, libgober_matrix
from .braid import BraidWord, burau, equal, exponent_sum, is_braid_automorphism, parse_word
from .curve import Curve, SingularFiber, intersection_multiplicity, parse_curve, singular_fibers
from .errors import (
    CurveSyntaxError,
    DuplicateComponent,
    NgonalError,
    NoConvergence,
    NotDivisible,
    NumericalFailure,
    StepUnderflow,
    StrandCollision,
)
from .exactalg import LaurentMatrix, LaurentPoly, cyclotomic_display, minors_gcd, normalize
from .rbd import Diagram, DiagramLoop, all_loops, build_diagram
from .tracker import MonodromyResult, global_monodromy, local_monodromy

__version__ = "0.1.0"

__all__ = [
    "AlexanderResult", "alexander_details", "alexander_polynomial", "libgober_matrix",
    "BraidWord", "burau", "equal", "exponent_sum", "is_braid_automorphism", "parse_word",
    "Curve", "SingularFiber", "intersection_multiplicity", "parse_curve", "singular_fibers",
    "CurveSyntaxError", "DuplicateComponent", "NgonalError", "NoConvergence", "NotDivisible",
    "NumericalFailure", "StepUnderflow", "StrandCollision",
    "LaurentMatrix", "LaurentPoly", "cyclotomic_display", "minors_gcd", "normalize",
    "Diagram", "DiagramLoop", "all_loops", "build_diagram",
    "MonodromyResult", "global_monodromy", "local_monodromy",
]
