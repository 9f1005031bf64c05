"""ncforge: exact computation in finitely presented associative algebras.

Rewriting-based completion (diamond lemma), normal-word bases and Hilbert
series, structure theory of the finite-dimensional quotients (trace form,
radical, center, corners), the deformation families this package was
built to verify, and a check registry with a CLI.
"""

from .field import FieldError, PrimeField, RationalField, parse_field
from .freealg import Alphabet, Morphism, NcPoly, SkewDerivation, compare_deglex, deglex_key
from .gbasis import (CompletionOverflow, Presentation, RewriteSystem, complete,
                     contains, dimension, hilbert_series, is_finite_dimensional,
                     normal_form, normal_words)
from .models import MatrixOverAlgebra, ModelParams, ParameterDomainError, QuadraticForm
from .parser import ParseError, parse_poly, parse_presentation
from .structure import (AlgebraTable, AssociativityError, Element, Subspace,
                        build_table, center, corner, is_invertible, is_semisimple,
                        left_regular, radical, subalgebra_with_unit, trace_form,
                        two_sided_ideal)
from .verify import CheckConfig, Report, pi_test, run_all, run_check, scan

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "AlgebraTable", "AssociativityError", "CheckConfig",
    "CompletionOverflow", "Element", "FieldError", "MatrixOverAlgebra",
    "ModelParams", "Morphism", "NcPoly", "ParameterDomainError", "ParseError",
    "Presentation", "PrimeField", "QuadraticForm", "RationalField", "Report",
    "RewriteSystem", "SkewDerivation", "Subspace", "build_table", "center",
    "compare_deglex", "complete", "contains", "corner", "deglex_key",
    "dimension", "hilbert_series", "is_finite_dimensional", "is_invertible",
    "is_semisimple", "left_regular", "normal_form", "normal_words",
    "parse_field", "parse_poly", "parse_presentation", "pi_test", "radical",
    "run_all", "run_check", "scan", "subalgebra_with_unit", "trace_form",
    "two_sided_ideal",
]
