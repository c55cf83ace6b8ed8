"""Affine vector fields, affine maps, and exact flows of nilpotent fields."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .matrix import Matrix, vec_add, vec_scale, vec_sub
from .poly import Poly, PolyMap
from .scalar import as_scalar

__all__ = ["AffineField", "AffineMap", "combine_fields", "exp_nilpotent_affine",
           "field_values_matrix", "flow_polymap"]


class AffineField:
    """The vector field ``p -> linear @ p + constant`` on ``C^N``."""

    __slots__ = ("linear", "constant")

    def __init__(self, linear: Matrix, constant: Sequence):
        constant = tuple(as_scalar(c) for c in constant)
        if linear.rows != linear.cols or linear.rows != len(constant):
            raise ValueError("affine field needs an N x N linear part and an N-vector")
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "constant", constant)

    def __setattr__(self, name, value):
        raise AttributeError("AffineField is immutable")

    @classmethod
    def zero(cls, n: int) -> "AffineField":
        return cls(Matrix.zeros(n, n), (0,) * n)

    @classmethod
    def constant_field(cls, vector: Sequence) -> "AffineField":
        n = len(vector)
        return cls(Matrix.zeros(n, n), vector)

    @property
    def dim(self) -> int:
        return len(self.constant)

    def __call__(self, p: Sequence):
        return vec_add(self.linear.apply(p), self.constant)

    def __add__(self, other: "AffineField") -> "AffineField":
        return AffineField(self.linear + other.linear, vec_add(self.constant, other.constant))

    def __sub__(self, other: "AffineField") -> "AffineField":
        return AffineField(self.linear - other.linear, vec_sub(self.constant, other.constant))

    def __neg__(self) -> "AffineField":
        return self.scale(-1)

    def scale(self, c) -> "AffineField":
        return AffineField(self.linear.scale(c), vec_scale(c, self.constant))

    def __rmul__(self, c) -> "AffineField":
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, AffineField):
            return NotImplemented
        return self.linear == other.linear and self.constant == other.constant

    def __hash__(self):
        return hash((self.linear, self.constant))

    def __repr__(self):
        return f"AffineField(linear={self.linear!r}, constant={self.constant!r})"


def combine_fields(coeffs, fields: Sequence[AffineField]) -> AffineField:
    n = fields[0].dim
    out = AffineField.zero(n)
    for c, f in zip(coeffs, fields):
        if c:
            out = out + f.scale(c)
    return out


class AffineMap:
    """``p -> matrix @ p + translation``."""

    __slots__ = ("matrix", "translation")

    def __init__(self, matrix: Matrix, translation: Sequence):
        translation = tuple(as_scalar(c) for c in translation)
        if matrix.rows != len(translation):
            raise ValueError("translation length must match matrix rows")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "translation", translation)

    def __setattr__(self, name, value):
        raise AttributeError("AffineMap is immutable")

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(Matrix.identity(n), (0,) * n)

    def __call__(self, p: Sequence):
        return vec_add(self.matrix.apply(p), self.translation)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """``self o inner``."""
        return AffineMap(self.matrix @ inner.matrix,
                         vec_add(self.matrix.apply(inner.translation), self.translation))

    def __matmul__(self, inner: "AffineMap") -> "AffineMap":
        return self.compose(inner)

    def det(self):
        return self.matrix.det()

    def to_polymap(self) -> PolyMap:
        n = self.matrix.cols
        xs = Poly.vars(n)
        polys = []
        for row, b in zip(self.matrix.entries, self.translation):
            p = Poly.const(n, b)
            for a, x in zip(row, xs):
                if a:
                    p = p + x * a
            polys.append(p)
        return PolyMap(polys, n)

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.matrix == other.matrix and self.translation == other.translation

    def __hash__(self):
        return hash((self.matrix, self.translation))

    def __repr__(self):
        return f"AffineMap(matrix={self.matrix!r}, translation={self.translation!r})"


def _check_nilpotent(field: AffineField) -> int:
    a = field.linear
    if not a.is_nilpotent():
        raise ValueError("linear part of the field is not nilpotent")
    k, p = 0, Matrix.identity(a.rows)
    while not p.is_zero():
        p = p @ a
        k += 1
    return k  # a**k == 0


def exp_nilpotent_affine(field: AffineField, t) -> AffineMap:
    """Time-``t`` flow of ``x' = A x + b`` for nilpotent ``A``.

    ``x(t) = sum_k t^k A^k/k! x0 + sum_k t^(k+1) A^k/(k+1)! b``; both sums
    are finite.
    """
    t = as_scalar(t)
    k = _check_nilpotent(field)
    n = field.dim
    a = field.linear
    lin = Matrix.zeros(n, n)
    trans = (Fraction(0),) * n
    power = Matrix.identity(n)
    for j in range(k + 1):
        lin = lin + power.scale(t ** j / factorial(j))
        trans = vec_add(trans, vec_scale(t ** (j + 1) / factorial(j + 1), power.apply(field.constant)))
        power = power @ a
    return AffineMap(lin, trans)


def flow_polymap(field: AffineField) -> PolyMap:
    """The flow as a polynomial map in ``(t, x_1, ..., x_N)``."""
    k = _check_nilpotent(field)
    n = field.dim
    t, *xs = Poly.vars(n + 1)
    out = [Poly(n + 1) for _ in range(n)]
    power = Matrix.identity(n)
    for j in range(k + 1):
        tj = t ** j / factorial(j)
        tj1 = t ** (j + 1) / factorial(j + 1)
        b = power.apply(field.constant)
        for r in range(n):
            lin = Poly(n + 1)
            for c, x in zip(power.row(r), xs):
                if c:
                    lin = lin + x * c
            out[r] = out[r] + tj * lin + tj1 * b[r]
        power = power @ field.linear
    return PolyMap(out, n + 1)


def field_values_matrix(fields: Sequence[AffineField], p: Sequence) -> Matrix:
    """Columns are the field values at ``p``."""
    return Matrix.from_columns([f(p) for f in fields])

