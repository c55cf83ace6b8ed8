"""A Heisenberg subalgebra of the ``d5`` nilradical with no totally real completion.

``n_Gamma = span(x1, x2, x3)`` has only totally real orbits on the fiber
``z11 = i``, yet its extensions by ``y_tau = xi32 + tau zeta3`` have
normalizers that are not totally real and orbits that degenerate at ``Z0``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..catalog import NormalJAlgebra
from ..exact import Matrix, Poly, Subspace, exp_nilpotent_affine, nullspace
from ..lie import bracket, is_subalgebra, normalizer
from ..totally_real import is_totally_real
from .fields import field_of, field_rank, random_rational, sym3_realization
from .group import GroupElement5, Z0, group_affine_map

__all__ = ["n_gamma_vectors", "n_gamma", "y_tau", "displayed_normalizer",
           "lemma_symbolic_checks", "basis_extensions", "z0_rank", "random_tau_alpha",
           "flow_matches_group", "n_gamma_fields", "extension_obstruction",
           "random_extension_vector"]


def n_gamma_vectors(d5: NormalJAlgebra) -> tuple:
    return (d5.vec(xi31p=1, zeta3=1, xi21=1),
            d5.vec(xi31=-1, xi21p=1),
            d5.vec(zeta3=1, zeta2=1))


def n_gamma(d5: NormalJAlgebra) -> Subspace:
    return d5.span(*n_gamma_vectors(d5))


def y_tau(d5: NormalJAlgebra, tau) -> tuple:
    return d5.vec(xi32=1, zeta3=tau)


def displayed_normalizer(d5: NormalJAlgebra) -> Subspace:
    return d5.span(d5.vec(xi31p=1, xi21=1), d5.vec(xi31=-1, xi21p=1), d5.e("xi32"),
                   d5.e("zeta3"), d5.e("zeta2"))


def n_gamma_fields(d5: NormalJAlgebra, extra=()) -> list:
    real = sym3_realization(fiber=True)
    return [field_of(real, d5, v) for v in (*n_gamma_vectors(d5), *extra)]


_Y_NAMES = ("a1", "a2", "a1p", "a2p", "c3", "b1", "b1p", "c2")
_Y_LABELS = ("xi31", "xi32", "xi31p", "xi32p", "zeta3", "xi21", "xi21p", "zeta2")


def _generic_y(d5: NormalJAlgebra, zero_a2p: bool = False):
    syms = dict(zip(_Y_NAMES, Poly.vars(len(_Y_NAMES))))
    if zero_a2p:
        syms["a2p"] = Poly(len(_Y_NAMES))
    y = [Poly(len(_Y_NAMES))] * d5.dim
    for name, lab in zip(_Y_NAMES, _Y_LABELS):
        y[d5.alg.index(lab)] = syms[name]
    return tuple(y), syms


def _poly_vec(d5: NormalJAlgebra, coeffs: dict) -> tuple:
    n = len(_Y_NAMES)
    out = [Poly(n)] * d5.dim
    for lab, p in coeffs.items():
        out[d5.alg.index(lab)] = p if isinstance(p, Poly) else Poly.const(n, p)
    return tuple(out)


def _same(u, v) -> bool:
    n = len(_Y_NAMES)
    lift = (lambda x: x if isinstance(x, Poly) else Poly.const(n, x))
    return all(lift(a) == lift(b) for a, b in zip(u, v))


def lemma_symbolic_checks(d5: NormalJAlgebra) -> dict:
    """Bracket identities for a generic ``y`` in the nilradical, with symbolic coefficients."""
    x1, x2, _ = n_gamma_vectors(d5)
    y, s = _generic_y(d5)
    out = {}
    yx1 = bracket(d5.alg, y, x1)
    out["y-x1"] = _same(yx1, _poly_vec(d5, {"xi31": s["a2p"], "xi32": s["a1p"] - s["b1"],
                                            "zeta3": s["a1"], "zeta2": -s["b1p"]}))
    out["y-x1-x1"] = _same(bracket(d5.alg, yx1, x1), _poly_vec(d5, {"zeta3": s["a2p"]}))
    y0, s0 = _generic_y(d5, zero_a2p=True)
    a1, a1p, b1, b1p = s0["a1"], s0["a1p"], s0["b1"], s0["b1p"]
    yx1 = bracket(d5.alg, y0, x1)
    yx2 = bracket(d5.alg, y0, x2)
    out["y-x2"] = _same(yx2, _poly_vec(d5, {"xi32": -(a1 + b1p), "zeta3": a1p, "zeta2": b1}))
    comb = tuple((a1 + b1p) * u + (a1p - b1) * v for u, v in zip(yx1, yx2))
    out["quadratic-combination"] = _same(comb, _poly_vec(d5, {
        "zeta3": a1 * a1 - a1p * b1 + a1 * b1p + a1p * a1p,
        "zeta2": -(b1 * b1 - a1p * b1 + a1 * b1p + b1p * b1p)}))
    # the two coefficients agree exactly when a sum of two squares vanishes
    diff = (a1p * a1p - a1p * b1 + a1 * b1p + a1 * a1) - (-b1 * b1 + a1p * b1 - a1 * b1p - b1p * b1p)
    out["sum-of-squares"] = diff == (a1 + b1p) ** 2 + (a1p - b1) ** 2
    return out


def basis_extensions(d5: NormalJAlgebra) -> list:
    """Nilradical basis vectors ``e`` with ``n_Gamma + R e`` a totally real subalgebra.

    Each entry is ``(label, tau)`` where ``e = lam * y_tau`` modulo ``n_Gamma``,
    or ``(label, None)`` if ``e`` is not of that form.
    """
    ng = n_gamma(d5)
    out = []
    for k, lab in enumerate(d5.labels):
        e = d5.e(k)
        if not d5.nilradical.contains(e) or ng.contains(e):
            continue
        s = ng.extend(e)
        if not (is_subalgebra(d5.alg, s) and is_totally_real(d5, s)):
            continue
        # solve e = u + p xi32 + q zeta3 with u in n_Gamma
        cols = list(ng.basis) + [d5.e("xi32"), d5.e("zeta3"), tuple(-x for x in e)]
        ker = nullspace(Matrix.from_columns(cols))
        sol = next((v for v in ker.basis if v[-1]), None)
        p, q = (sol[-3], sol[-2]) if sol else (0, 0)
        out.append((lab, q / p if p else None))
    return out


def z0_rank(d5: NormalJAlgebra, tau, alpha) -> int:
    """C-rank of ``x1, x2, x3, y_tau`` evaluated at ``Z0(tau, alpha)``."""
    fields = n_gamma_fields(d5, [y_tau(d5, tau)])
    return field_rank(fields, Z0(tau, alpha))


def random_tau_alpha(rng: random.Random):
    tau = random_rational(rng, 3)
    alpha = Fraction(1) / (1 + tau * tau) ** 2 + Fraction(rng.randint(1, 20), rng.randint(1, 8))
    return tau, alpha


def flow_matches_group(d5: NormalJAlgebra, a, b, c) -> bool:
    """Time-one flow of ``a x1 + b x2 + c x3`` equals the group element ``(a, b, c)``."""
    x1, x2, x3 = n_gamma_vectors(d5)
    v = tuple(a * p + b * q + c * r for p, q, r in zip(x1, x2, x3))
    f = field_of(sym3_realization(fiber=True), d5, v)
    return exp_nilpotent_affine(f, 1) == group_affine_map(GroupElement5(a, b, c))


def extension_obstruction(d5: NormalJAlgebra, y) -> dict:
    """Classify the one-vector extension ``n_Gamma + R y``.

    ``tau`` is set when ``y`` is a multiple of ``y_tau`` modulo ``n_Gamma``;
    ``normalizer_totally_real`` refers to the normalizer of the extension
    inside the nilradical.
    """
    ng = n_gamma(d5)
    s = ng.extend(y)
    sub = s.dim == 4 and is_subalgebra(d5.alg, s)
    tr = sub and is_totally_real(d5, s)
    cols = list(ng.basis) + [d5.e("xi32"), d5.e("zeta3"), tuple(-x for x in y)]
    ker = nullspace(Matrix.from_columns(cols))
    sol = next((v for v in ker.basis if v[-1]), None)
    tau = None
    if sol is not None and sol[-3]:
        tau = (sol[-2] / sol[-1]) / (sol[-3] / sol[-1])
    norm_tr = None
    if tr:
        norm_tr = is_totally_real(d5, normalizer(d5.alg, s, within=d5.nilradical))
    return {"subalgebra": sub, "totally_real": tr, "tau": tau, "normalizer_totally_real": norm_tr}


def _scaled(c, v) -> tuple:
    return tuple(c * x for x in v)


def random_extension_vector(d5: NormalJAlgebra, rng: random.Random, family: bool):
    """``lam y_tau + u`` with ``u`` in ``n_Gamma`` if ``family``, else a random nilradical element."""
    ng = n_gamma(d5)
    while True:
        if family:
            lam = random_rational(rng, 4) or Fraction(1)
            parts = [_scaled(lam, y_tau(d5, random_rational(rng, 4)))]
            parts += [_scaled(random_rational(rng, 4), b) for b in ng.basis]
        else:
            parts = [_scaled(random_rational(rng, 4), b) for b in d5.nilradical.basis]
        y = tuple(sum(col, Fraction(0)) for col in zip(*parts))
        if not ng.contains(y):
            return y
