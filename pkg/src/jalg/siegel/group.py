"""The three-parameter unipotent group acting on ``Sym(3, C)``.

A parameter triple ``(a, b, c)`` names the 6x6 block matrix
``[[A, B], [0, A^-t]]`` with ``A`` lower unitriangular; it acts on
symmetric matrices by ``Z -> A Z A^t + B A^t``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exact import AffineMap, I, Matrix, Poly, as_scalar, imag_part, nullspace, poly_gcd
from .fields import (SYM_COORDS, matrix_to_sym, positive_definite, random_gaussian,
                     sym_to_matrix, sym3_realization)

__all__ = ["GroupElement5", "apply_group", "block_action", "group_affine_map",
           "StabilizerResult", "stabilizer_solve", "in_fiber_D", "Z0", "random_sym_point",
           "random_fiber_point", "action_polys"]


@dataclass(frozen=True)
class GroupElement5:
    a: object = Fraction(0)
    b: object = Fraction(0)
    c: object = Fraction(0)

    def __post_init__(self):
        for name in "abc":
            v = getattr(self, name)
            if not isinstance(v, Poly):
                object.__setattr__(self, name, as_scalar(v))

    def matrix(self) -> Matrix:
        a, b, c = self.a, self.b, self.c
        h = (a * a + b * b) / 2
        return Matrix([
            [1, 0, 0, 0, a, -b],
            [b, 1, 0, a, -2 * c, -h],
            [a, 0, 1, -b, h, -2 * (a + c)],
            [0, 0, 0, 1, -b, -a],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ], 6)

    def compose(self, other: "GroupElement5") -> "GroupElement5":
        """Parameters of ``self.matrix() @ other.matrix()``."""
        a, b, c = self.a, self.b, self.c
        a2, b2, c2 = other.a, other.b, other.c
        return GroupElement5(a + a2, b + b2, c + c2 + (a * b2 - a2 * b) / 2)

    __matmul__ = compose

    def inverse(self) -> "GroupElement5":
        return GroupElement5(-self.a, -self.b, -self.c)

    @classmethod
    def from_matrix(cls, m: Matrix) -> "GroupElement5":
        g = cls(m[2, 0], m[1, 0], -m[1, 4] / 2)
        if g.matrix() != m:
            raise ValueError("matrix is not in the three-parameter family")
        return g


def apply_group(g: GroupElement5, z: Sequence) -> tuple:
    """The explicit action on ``(z11, z12, z13, z22, z23, z33)``.

    Works with scalar or polynomial entries.
    """
    a, b, c = g.a, g.b, g.c
    z11, z12, z13, z22, z23, z33 = z
    return (
        z11,
        z12 + b * z11 + a,
        z13 + a * z11 - b,
        z22 + 2 * b * z12 + b * b * z11 + a * b - 2 * c,
        z23 + a * z12 + b * z13 + a * b * z11 + (a * a - b * b) / 2,
        z33 + 2 * a * z13 + a * a * z11 - a * b - 2 * (a + c),
    )


def block_action(m: Matrix, z: Sequence) -> tuple:
    """``Z -> A Z A^t + B A^t`` for ``m = [[A, B], [0, A^-t]]``."""
    a = Matrix([m.row(i)[:3] for i in range(3)], 3)
    b = Matrix([m.row(i)[3:] for i in range(3)], 3)
    d = Matrix([m.row(i)[3:] for i in range(3, 6)], 3)
    if any(m.row(i)[:3] != (0, 0, 0) for i in range(3, 6)):
        raise ValueError("lower-left block must vanish")
    if d.T @ a != Matrix.identity(3):
        raise ValueError("lower-right block must be the inverse transpose of the upper-left")
    zm = sym_to_matrix(z)
    return matrix_to_sym(a @ zm @ a.T + b @ a.T)


def group_affine_map(g: GroupElement5) -> AffineMap:
    """The action as an affine map of ``C^6``."""
    zero = (Fraction(0),) * 6
    t = apply_group(g, zero)
    cols = []
    for k in range(6):
        e = [Fraction(0)] * 6
        e[k] = Fraction(1)
        img = apply_group(g, e)
        cols.append(tuple(x - y for x, y in zip(img, t)))
    return AffineMap(Matrix.from_columns(cols), t)


def action_polys(z: Sequence) -> list:
    """Entry equations ``g.Z - Z`` as polynomials in ``(a, b, c)`` for a fixed ``Z``."""
    a, b, c = Poly.vars(3)
    img = apply_group(GroupElement5(a, b, c), [Poly.const(3, x) for x in z])
    return [p - Poly.const(3, x) for p, x in zip(img, z)]


@dataclass(frozen=True)
class StabilizerResult:
    trivial: bool
    ab_kernel_dim: int
    residual: Poly
    description: str


def _linear_coeffs(p: Poly, k: int):
    """Coefficients of the first ``k`` variables in a linear poly, plus the constant."""
    if p.degree() > 1:
        raise ValueError("equation is not linear")
    co = []
    for i in range(k):
        e = [0] * p.nvars
        e[i] = 1
        co.append(p.coeff(e))
    return co, p.constant_term()


def stabilizer_solve(z: Sequence) -> StabilizerResult:
    """All ``(a, b, c)`` with ``g.Z = Z``, by elimination.

    The ``(1,2)`` and ``(1,3)`` entries are linear in ``(a, b)``; their kernel
    is parametrized by one variable ``t`` (or is zero). The ``(2,2)`` entry
    then determines ``c``, and the remaining entries must have only the
    root ``t = 0`` in common.
    """
    eqs = action_polys(z)
    rows = [_linear_coeffs(eqs[k], 2)[0] for k in (1, 2)]
    ker = nullspace(Matrix(rows, 2))
    t, c = Poly.vars(2)
    if ker.dim == 0:
        subs = [Poly(2), Poly(2), c]
    elif ker.dim == 1:
        a0, b0 = ker.basis[0]
        subs = [t * a0, t * b0, c]
    else:
        raise ValueError("degenerate point: (1,2) and (1,3) entries impose no condition")
    reduced = [e.compose(subs) for e in eqs]
    # solve (2,2) for c: its c-coefficient is the constant -2
    e22 = reduced[3]
    cc = e22.coeff((0, 1))
    rest = e22 - c * cc
    if not cc or not rest.uses_only([0]):
        raise ValueError("(2,2) entry does not determine c")
    c_of_t = rest * (Fraction(-1) / cc)
    final = [e.compose([t, c_of_t]) for e in reduced]
    if ker.dim == 0:
        # a = b = 0 and c is forced; the identity always solves the system
        if any(final):
            raise ArithmeticError("elimination lost the identity solution")
        return StabilizerResult(True, 0, Poly.const(1, 1), "only (0, 0, 0) fixes Z")
    uni = [Poly(1, {(et,): v for (et, _), v in p.terms.items()}) for p in final]
    g = Poly(1)
    for p in uni:
        g = poly_gcd(g, p)
    if g.is_zero():
        return StabilizerResult(False, ker.dim, g, "every t solves the system")
    # strip the root t = 0; any root left is a nonzero stabilizer element
    while g.degree() > 0 and g.constant_term() == 0:
        g = Poly(1, {(e[0] - 1,): v for e, v in g.terms.items()})
    trivial = g.degree() == 0
    desc = ("only (0, 0, 0) fixes Z" if trivial
            else f"nonzero t with {g.format(['t'])} = 0 fix Z")
    return StabilizerResult(trivial, ker.dim, g, desc)


def in_fiber_D(z: Sequence) -> bool:
    """``z11 = i`` and ``Im Z`` positive definite."""
    return z[0] == I and positive_definite(sym_to_matrix([imag_part(x) for x in z]))


def Z0(tau, alpha) -> tuple:
    tau, alpha = as_scalar(tau), as_scalar(alpha)
    off = (tau + I) / (1 + tau * tau)
    return (I, as_scalar(off), Fraction(0), as_scalar(I * alpha), Fraction(0), I)


def random_sym_point(rng: random.Random) -> tuple:
    """Arbitrary Gaussian-rational symmetric matrix (no domain condition)."""
    return tuple(random_gaussian(rng) for _ in SYM_COORDS)


def random_fiber_point(rng: random.Random) -> tuple:
    return sym3_realization(fiber=True).sample(rng)

