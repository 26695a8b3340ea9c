"""Covariants, contravariants and mixed concomitants of ternary forms,
reconstructed from their lead coefficients with exact arithmetic."""

from .action import (GENERATORS, NON_DIAGONAL, ActionTable, apply_generator, apply_word,
                     is_highest_vector, order_of, weight_of)
from .linalg import RationalMatrix, SolveReport, rref, solve
from .parsing import ParseError, parse_polynomial
from .render import render_polynomial
from .reptheory import WeightDiagram, falling_factorial, irrep_dim, lowering_span, weight_space_dims
from .ring import (Polynomial, RingConfig, degree_profile, extract_xu_coefficient, monomial,
                   poly_arith)
from .roberts import (ConcomitantReport, dual_conic_oracle, generic_form, hessian_covariant,
                      lead_coefficient, reconstruct, reconstruct_contravariant,
                      reconstruct_covariant, reconstruct_mixed, universal_covariant,
                      verify_concomitant)

__version__ = "0.1.0"
