"""Two unipotent groups acting on the Siegel ball ``{Im z > |w|^2}``.

A Heisenberg subalgebra of ``b_3`` with maximally totally real orbits, and
the discrete group ``phi_{2k, m+in}`` on the two-dimensional ball.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..catalog import NormalJAlgebra
from ..exact import (AffineField, AffineMap, I, Matrix, Subspace, as_scalar, exp_nilpotent_affine,
                     imag_part, real_part)
from ..lie import lie_generate
from .fields import ball_realization, field_bracket, field_of, orbit_totally_real_at

__all__ = ["bhat3_fields", "bhat3_vectors", "bhat3_subspace", "gamma_b2", "gamma_params",
           "GroupLawResult", "gamma_b2_group_law_check", "gamma_log_fields",
           "gamma_log_vectors", "gamma_zariski_closure", "bhat3_bracket_ok", "bhat3_orbits_check"]


def bhat3_fields() -> tuple:
    """``x1 = 2i w1 d_z + d_w1``, ``x2 = 2(w1 + w2) d_z + i d_w1 + i d_w2``, ``x3 = d_z``."""
    x1 = AffineField(Matrix([[0, 2 * I, 0], [0, 0, 0], [0, 0, 0]]), (0, 1, 0))
    x2 = AffineField(Matrix([[0, 2, 2], [0, 0, 0], [0, 0, 0]]), (0, I, I))
    x3 = AffineField.constant_field((1, 0, 0))
    return x1, x2, x3


def bhat3_vectors(b3: NormalJAlgebra) -> tuple:
    """The same three fields as elements of ``b_3``."""
    return (b3.vec(xi1=2), b3.vec(xi1p=2, xi2p=2), b3.vec(zeta=1))


def bhat3_subspace(b3: NormalJAlgebra) -> Subspace:
    return b3.span(*bhat3_vectors(b3))


def bhat3_bracket_ok() -> bool:
    x1, x2, x3 = bhat3_fields()
    return (field_bracket(x1, x2) == x3.scale(4)
            and field_bracket(x1, x3) == AffineField.zero(3)
            and field_bracket(x2, x3) == AffineField.zero(3))


def bhat3_orbits_check(rng: random.Random, count: int = 100):
    """Sampled points of the 3-ball where ``x1, x2, x3`` are C-independent."""
    real = ball_realization(3)
    fields = bhat3_fields()
    bad = []
    for _ in range(count):
        p = real.sample(rng)
        if not orbit_totally_real_at(fields, p):
            bad.append(p)
    return bad


def gamma_b2(k, m, n) -> AffineMap:
    """``(z, w) -> (z + 2(n + im) w + i(m^2 + n^2) + 2k, w + m + in)``."""
    k, m, n = as_scalar(k), as_scalar(m), as_scalar(n)
    return AffineMap(Matrix([[1, 2 * (n + I * m)], [0, 1]]),
                     (I * (m * m + n * n) + 2 * k, m + I * n))


def _integer(x) -> bool:
    return imag_part(x) == 0 and real_part(x).denominator == 1


def gamma_params(g: AffineMap):
    """``(k, m, n)`` if ``g`` is some ``phi_{2k, m+in}``, else None."""
    shift = g.translation[1]
    m, n = real_part(shift), imag_part(shift)
    if not (_integer(m) and _integer(n)):
        return None
    k2 = g.translation[0] - I * (m * m + n * n)
    if imag_part(k2) != 0 or not _integer(real_part(k2) / 2):
        return None
    k = real_part(k2) / 2
    if g != gamma_b2(k, m, n):
        return None
    return int(k), int(m), int(n)


@dataclass
class GroupLawResult:
    pairs: int
    failures: list
    det_one: bool

    @property
    def passed(self) -> bool:
        return not self.failures and self.det_one


def gamma_b2_group_law_check(rng: random.Random, count: int = 50) -> GroupLawResult:
    """Compose random pairs and recover the parameters of the product."""
    failures, det_one = [], True
    for _ in range(count):
        p = tuple(rng.randint(-9, 9) for _ in range(3))
        q = tuple(rng.randint(-9, 9) for _ in range(3))
        g, h = gamma_b2(*p), gamma_b2(*q)
        det_one &= g.det() == 1 and h.det() == 1
        params = gamma_params(g @ h)
        if params is None:
            failures.append((p, q))
            continue
        m, n = p[1] + q[1], p[2] + q[2]
        expected_k = p[0] + q[0] + p[2] * q[1] - p[1] * q[2]
        if params != (expected_k, m, n):
            failures.append((p, q))
    return GroupLawResult(count, failures, det_one)


def gamma_log_fields() -> dict:
    """Infinitesimal generators whose time-one flows are the three generators of the group."""
    return {
        (1, 0, 0): AffineField.constant_field((2, 0)),
        (0, 1, 0): AffineField(Matrix([[0, 2 * I], [0, 0]]), (0, 1)),
        (0, 0, 1): AffineField(Matrix([[0, 2], [0, 0]]), (0, I)),
    }


def gamma_log_vectors(b2: NormalJAlgebra) -> dict:
    return {(1, 0, 0): b2.vec(zeta=2), (0, 1, 0): b2.vec(xi1=2), (0, 0, 1): b2.vec(xi1p=2)}


def gamma_zariski_closure(b2: NormalJAlgebra):
    """Check the generator logarithms and return the subalgebra they generate."""
    real = ball_realization(2)
    fields, vecs = gamma_log_fields(), gamma_log_vectors(b2)
    for params, f in fields.items():
        if exp_nilpotent_affine(f, 1) != gamma_b2(*params):
            raise ArithmeticError(f"time-one flow does not match generator {params}")
        if field_of(real, b2, vecs[params]) != f:
            raise ArithmeticError(f"field of {params} does not match the algebra element")
    return lie_generate(b2.alg, list(vecs.values()))

