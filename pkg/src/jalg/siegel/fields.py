"""Affine vector-field realizations of the catalog algebras on Siegel domains.

Each realization maps basis labels to affine fields on ``C^N``, fixes a base
point, and knows how to test and sample domain points. The bracket of
fields is the usual vector-field bracket ``[f, g] = Dg.f - Df.g``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from ..catalog import NormalJAlgebra, siegel_matrix_basis
from ..lie import bracket
from ..exact import (AffineField, Gaussian, I, Matrix, Poly, Subspace, as_scalar, combine_fields,
                     format_scalar, imag_part, nullspace, real_part)

__all__ = ["field_eval", "field_bracket", "orbit_totally_real_at", "field_rank",
           "Realization", "ball_realization", "lieball_realization", "sym3_realization",
           "realization_for", "field_of", "subspace_fields", "measure_bracket_sign",
           "j_from_realization", "sym_field_from_matrix", "SYM_COORDS", "sym_index",
           "sym_to_matrix", "matrix_to_sym", "FIELD_BRACKET_SIGN", "random_rational",
           "random_gaussian", "field_polys", "field_minor_polys", "positive_definite"]

SYM_COORDS = ("z11", "z12", "z13", "z22", "z23", "z33")
_SYM_POS = {(1, 1): 0, (1, 2): 1, (1, 3): 2, (2, 2): 3, (2, 3): 4, (3, 3): 5}

# Fields induced by the left action of S_3 on Sym(3) bracket with the
# opposite sign to matrix commutators (an anti-homomorphism). Measured by
# ``measure_bracket_sign`` and re-checked in the tests.
FIELD_BRACKET_SIGN = -1


def field_eval(f: AffineField, p: Sequence) -> tuple:
    if len(p) != f.dim:
        raise ValueError(f"point has {len(p)} coordinates, field lives on C^{f.dim}")
    return f(p)


def field_bracket(f: AffineField, g: AffineField) -> AffineField:
    """``[f, g](p) = Dg f(p) - Df g(p)`` for affine ``f, g``."""
    if f.dim != g.dim:
        raise ValueError("fields live on different spaces")
    a, b = f.linear, g.linear
    lin = b @ a - a @ b
    const = tuple(x - y for x, y in zip(b.apply(f.constant), a.apply(g.constant)))
    return AffineField(lin, const)


def field_rank(fields: Sequence[AffineField], p: Sequence) -> int:
    if not fields:
        return 0
    return Matrix.from_columns([field_eval(f, p) for f in fields]).rank()


def orbit_totally_real_at(fields: Sequence[AffineField], p: Sequence) -> bool:
    """Field values at ``p`` are C-linearly independent."""
    return field_rank(fields, p) == len(fields)


def field_polys(f: AffineField) -> list:
    """Components of ``f`` as linear polynomials in the coordinates."""
    n = f.dim
    xs = Poly.vars(n)
    out = []
    for r in range(n):
        p = Poly.const(n, f.constant[r])
        for c, x in zip(f.linear.row(r), xs):
            if c:
                p = p + x * c
        out.append(p)
    return out


def _poly_det(m: list):
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j, entry in enumerate(m[0]):
        if entry:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = entry * _poly_det(minor)
            total = total + term if j % 2 == 0 else total - term
    return total


def field_minor_polys(fields: Sequence[AffineField]) -> list:
    """All maximal minors of the coordinate-by-field matrix, as polynomials."""
    cols = [field_polys(f) for f in fields]
    k, n = len(cols), fields[0].dim
    out = []
    for rows in combinations(range(n), k):
        d = _poly_det([[cols[j][r] for j in range(k)] for r in rows])
        if not isinstance(d, Poly):
            d = Poly.const(n, d)
        out.append((rows, d))
    return out


def random_rational(rng: random.Random, bound: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))


def random_gaussian(rng: random.Random, bound: int = 5, den: int = 4):
    return as_scalar(Gaussian(random_rational(rng, bound, den), random_rational(rng, bound, den)))


def positive_definite(m: Matrix) -> bool:
    return all(x > 0 for x in m.leading_minors())


@dataclass(frozen=True)
class Realization:
    name: str
    coords: tuple
    fields: dict
    base_point: tuple
    sign: int
    in_domain: Callable
    sampler: Callable

    @property
    def dim(self) -> int:
        return len(self.coords)

    def sample(self, rng: random.Random) -> tuple:
        p = self.sampler(rng)
        assert self.in_domain(p)
        return p

    def format_point(self, p) -> str:
        return "(" + ", ".join(f"{c}={format_scalar(x)}" for c, x in zip(self.coords, p)) + ")"


def _field(n: int, linear: dict | None = None, constant: dict | None = None) -> AffineField:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (r, c), v in (linear or {}).items():
        rows[r][c] += as_scalar(v)
    const = [Fraction(0)] * n
    for r, v in (constant or {}).items():
        const[r] += as_scalar(v)
    return AffineField(Matrix(rows, n), const)


def ball_realization(n: int) -> Realization:
    """``{Im z > |w|^2}`` in coordinates ``(z, w_1, ..., w_{n-1})``, base point ``(i/2, 0)``."""
    half = Fraction(1, 2)
    fields = {"alpha": _field(n, {(0, 0): 2, **{(k, k): 1 for k in range(1, n)}}),
              "zeta": _field(n, constant={0: 1})}
    for k in range(1, n):
        fields[f"xi{k}"] = _field(n, {(0, k): I}, {k: half})
        fields[f"xi{k}p"] = _field(n, {(0, k): 1}, {k: I * half})

    def inside(p):
        return imag_part(p[0]) - sum(real_part(w) ** 2 + imag_part(w) ** 2 for w in p[1:]) > 0

    def sample(rng):
        ws = [random_gaussian(rng, 2) for _ in range(n - 1)]
        height = sum((real_part(w) ** 2 + imag_part(w) ** 2 for w in ws), Fraction(0))
        height += Fraction(rng.randint(1, 16), rng.randint(1, 4))
        return (as_scalar(Gaussian(random_rational(rng), height)), *ws)

    coords = ("z",) + tuple(f"w{k}" for k in range(1, n))
    return Realization(f"ball:{n}", coords, fields, (I * half,) + (Fraction(0),) * (n - 1),
                       1, inside, sample)


def lieball_realization(n: int) -> Realization:
    """Tube over the future light cone in ``C^n``, base point ``i e_n``."""
    fields = {"delta": _field(n, {(k, k): 1 for k in range(n)}),
              "alpha": _field(n, {(n - 2, n - 1): 1, (n - 1, n - 2): 1}),
              "zeta": _field(n, constant={n - 2: 1, n - 1: 1}),
              "eta": _field(n, constant={n - 2: -1, n - 1: 1})}
    for k in range(n - 2):
        fields[f"xi{k + 1}"] = _field(n, constant={k: 1})
        fields[f"xi{k + 1}p"] = _field(n, {(k, n - 1): 1, (k, n - 2): -1,
                                           (n - 2, k): 1, (n - 1, k): 1})

    def inside(p):
        ys = [imag_part(x) for x in p]
        return ys[-1] > 0 and ys[-1] ** 2 > sum(y * y for y in ys[:-1])

    def sample(rng):
        ys = [random_rational(rng, 2) for _ in range(n - 1)]
        top = sum(abs(y) for y in ys) + Fraction(rng.randint(1, 16), rng.randint(1, 4))
        return tuple(as_scalar(Gaussian(random_rational(rng), y)) for y in ys + [top])

    base = (Fraction(0),) * (n - 1) + (I,)
    return Realization(f"lieball:{n}", tuple(f"z{k}" for k in range(1, n + 1)), fields, base,
                       1, inside, sample)


def sym_index(i: int, j: int) -> int:
    """Coordinate index of the entry ``z_ij`` (1-based, either order)."""
    return _SYM_POS[(min(i, j), max(i, j))]


def sym_to_matrix(p: Sequence) -> Matrix:
    return Matrix([[p[sym_index(i, j)] for j in (1, 2, 3)] for i in (1, 2, 3)], 3)


def matrix_to_sym(m: Matrix) -> tuple:
    for i in range(3):
        for j in range(i):
            if m[i, j] != m[j, i]:
                raise ValueError("matrix is not symmetric")
    return tuple(m[i - 1, j - 1] for (i, j) in _SYM_POS)


def _blocks(x: Matrix):
    a = Matrix([x.row(i)[:3] for i in range(3)], 3)
    b = Matrix([x.row(i)[3:] for i in range(3)], 3)
    return a, b


def sym_field_from_matrix(x: Matrix) -> AffineField:
    """Field ``Z -> A Z + Z A^t + B`` induced by ``[[A, B], [0, -A^t]]``."""
    a, b = _blocks(x)
    cols = []
    for k in range(6):
        e = [Fraction(0)] * 6
        e[k] = Fraction(1)
        z = sym_to_matrix(e)
        cols.append(matrix_to_sym(a @ z + z @ a.T))
    return AffineField(Matrix.from_columns(cols), matrix_to_sym(b))


def _random_pd(rng: random.Random, unit_corner: bool) -> Matrix:
    low = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        low[i][i] = Fraction(rng.randint(1, 8), rng.randint(1, 4))
        for j in range(i):
            low[i][j] = random_rational(rng, 2)
    if unit_corner:
        low[0][0] = Fraction(1)
    m = Matrix(low, 3)
    return m @ m.T


def sym3_realization(fiber: bool) -> Realization:
    """Fields on ``Sym(3, C)``; with ``fiber`` the domain is the slice ``z11 = i``."""
    basis = siegel_matrix_basis()
    labels = list(basis)[:10] if fiber else list(basis)
    fields = {lab: sym_field_from_matrix(basis[lab]) for lab in labels}

    def inside(p):
        if fiber and p[0] != I:
            return False
        return positive_definite(sym_to_matrix([imag_part(x) for x in p]))

    def sample(rng):
        y = _random_pd(rng, fiber)
        x = [random_rational(rng) for _ in range(6)]
        if fiber:
            x[0] = Fraction(0)
        ys = matrix_to_sym(y)
        return tuple(as_scalar(Gaussian(a, b)) for a, b in zip(x, ys))

    base = tuple(I if k in (0, 3, 5) else Fraction(0) for k in range(6))
    return Realization("d5" if fiber else "siegel:3", SYM_COORDS, fields, base,
                       FIELD_BRACKET_SIGN, inside, sample)


def realization_for(a: NormalJAlgebra) -> Realization | None:
    if a.kind == "ball":
        return ball_realization(a.n)
    if a.kind == "lieball":
        return lieball_realization(a.n)
    if a.kind == "siegel3":
        return sym3_realization(fiber=False)
    if a.kind == "d5":
        return sym3_realization(fiber=True)
    return None


def field_of(real: Realization, a: NormalJAlgebra, v: Sequence) -> AffineField:
    """The field of the algebra element ``v``."""
    return combine_fields(v, [real.fields[lab] for lab in a.labels])


def subspace_fields(real: Realization, a: NormalJAlgebra, s: Subspace) -> list:
    return [field_of(real, a, v) for v in s.basis]


def measure_bracket_sign(real: Realization, a: NormalJAlgebra) -> int | None:
    """The constant ``s`` with ``[X_u, X_v] = s X_[u,v]`` on all basis pairs, or None."""
    found = None
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            lhs = field_bracket(field_of(real, a, a.e(i)), field_of(real, a, a.e(j)))
            rhs = field_of(real, a, bracket(a.alg, a.e(i), a.e(j)))
            if rhs == AffineField.zero(real.dim):
                if lhs != rhs:
                    return None
                continue
            for s in (1, -1):
                if lhs == rhs.scale(s):
                    break
            else:
                return None
            if found is not None and found != s:
                return None
            found = s
    return found


def j_from_realization(real: Realization, a: NormalJAlgebra) -> Matrix:
    """J recovered from ``X_{Jx}(p0) = i X_x(p0)`` by a real linear solve."""
    vals = [field_eval(field_of(real, a, a.e(k)), real.base_point) for k in range(a.dim)]

    def realify(v):
        return [real_part(x) for x in v] + [imag_part(x) for x in v]

    cols = [realify(v) for v in vals]
    out = []
    for v in vals:
        target = realify(tuple(I * x for x in v))
        ker = nullspace(Matrix.from_columns(cols + [[-t for t in target]]))
        sol = [w for w in ker.basis if w[-1]]
        if len(ker.basis) != 1 or not sol:
            raise ValueError("base point does not determine J")
        w = sol[0]
        out.append(tuple(x / w[-1] for x in w[:-1]))
    return Matrix.from_columns(out)
