"""Exact polynomial arithmetic over the rationals."""

from fractions import Fraction

from .algebra import (form_factor_structure, form_gcd, homogenize, multiple_factor_product,
                      resultant, split_form, sylvester_matrix)
from .parsing import DEFAULT_MAX_EXPONENT, PolySyntaxError, format_poly, parse_poly
from .poly2 import (Monomial, Poly2, add, coefficients_in, compose, divide_exact, eval_float,
                    eval_rational, from_unipoly, is_homogeneous, jacobian_det, leading_form,
                    linear_change, monomial_content, mul, partial_derivative, restrict, scale,
                    shift_monomial, sub, substitute_affine, substitute_shear, to_unipoly,
                    total_degree, transpose)
from .roots import (RationalInterval, count_nonzero_real_roots, isolate_real_roots,
                    rational_roots, refine_root, sturm_count_real_roots, sturm_sequence)
from .unipoly import (UniPoly, format_unipoly, squarefree_decomposition, squarefree_part,
                      uni_gcd, uni_resultant)

Rational = Fraction

__all__ = [
    "Rational", "Monomial", "Poly2", "UniPoly", "RationalInterval", "PolySyntaxError",
    "DEFAULT_MAX_EXPONENT", "parse_poly", "format_poly", "format_unipoly",
    "add", "sub", "mul", "scale", "partial_derivative", "jacobian_det", "total_degree",
    "leading_form", "is_homogeneous", "linear_change", "substitute_affine",
    "substitute_shear", "transpose", "compose", "restrict", "eval_rational", "eval_float",
    "coefficients_in", "from_unipoly", "to_unipoly", "divide_exact", "monomial_content",
    "shift_monomial", "uni_gcd", "uni_resultant", "squarefree_decomposition",
    "squarefree_part", "multiple_factor_product", "form_gcd", "form_factor_structure",
    "split_form", "homogenize", "resultant", "sylvester_matrix", "sturm_sequence",
    "sturm_count_real_roots", "count_nonzero_real_roots", "isolate_real_roots",
    "refine_root", "rational_roots",
]
