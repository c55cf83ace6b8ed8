"""Exact arithmetic substrate: scalars, matrices, subspaces, polynomials, flows."""

from .affine import (AffineField, AffineMap, combine_fields, exp_nilpotent_affine,
                     field_values_matrix, flow_polymap)
from .matrix import (Matrix, Subspace, is_zero_vector, nullspace, rank, rref,
                     span_intersect, unit_vector, vec_add, vec_combine, vec_scale,
                     vec_sub, zero_vector)
from .poly import Poly, PolyMap, ext_euclid, poly_compose, poly_divmod, poly_gcd
from .scalar import (Gaussian, I, as_scalar, conj, format_scalar, imag_part,
                     parse_rational, parse_scalar, real_part)

__all__ = [
    "AffineField", "AffineMap", "Gaussian", "I", "Matrix", "Poly", "PolyMap", "Subspace",
    "as_scalar", "combine_fields", "conj", "exp_nilpotent_affine", "ext_euclid",
    "field_values_matrix", "flow_polymap", "format_scalar", "imag_part",
    "is_zero_vector", "nullspace", "parse_rational", "parse_scalar", "poly_compose",
    "poly_divmod", "poly_gcd", "rank", "real_part", "rref", "span_intersect",
    "unit_vector", "vec_add", "vec_combine", "vec_scale", "vec_sub", "zero_vector",
]
