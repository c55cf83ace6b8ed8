"""Polynomial identities showing the quotient ``Sym(3, C) / N`` is trivial.

The chain divides out the center (map ``pi``), straightens the ``a``-action
with the biregular map ``Phi``, and reduces the remaining ``b``-action to a
free C-action on ``C^3``. Every map is a plain function on sequences so it
can be fed polynomials or numbers; identities are compared as exact
:class:`~jalg.exact.PolyMap` objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from ..exact import Poly, PolyMap, ext_euclid, poly_compose
from .group import GroupElement5, apply_group

__all__ = ["ChainMaps", "ChainCheck", "ChainReport", "DEFAULT_MAPS", "as_polymap",
           "verify_trivialization_chain", "bezout_trivialize", "bezout_literal_map",
           "conjugation_shift", "poly_matrix_det", "pi_center_invariant", "bezout_matrix",
           "replace", "chain_mutations"]


def sym_pi(z):
    z11, z12, z13, z22, z23, z33 = z
    return [z11, z12, z13, z22 - z33, z23]


def induced_c2(a, b, z):
    z1, z2, z3, z4, z5 = z
    return [z1,
            z2 + b * z1 + a,
            z3 + a * z1 - b,
            z4 + 2 * b * z2 - 2 * a * z3 + (b * b - a * a) * z1 + 2 * a * b + 2 * a,
            z5 + a * z2 + b * z3 + a * b * z1 + (a * a - b * b) / 2]


def phi(z):
    z1, z2, z3, z4, z5 = z
    return [z2, z1, z3 - z1 * z2, z4 + 2 * z2 * z3 - 2 * z1 * z5 - 2 * z2, z2 * z2 - 2 * z5]


def phi_inverse(w):
    w1, w2, w3, w4, w5 = w
    z3 = w3 + w1 * w2
    z5 = (w1 * w1 - w5) / 2
    return [w2, w1, z3, w4 - 2 * w1 * z3 + w2 * (w1 * w1 - w5) + 2 * w1, z5]


def b_action(b, w):
    w1, w2, w3, w4 = w
    q = w1 * w1 + 1
    return [w1, w2 - b * q, w3 - 2 * b * w1, w4 - 2 * b * w2 + b * b * q]


def f_default(w1):
    return -(w1 * w1 + 1)


def g_default(w1):
    return -2 * w1


def t_action(t, w, f=f_default, g=g_default):
    w1, w2, w3 = w
    return [w1, w2 + t * f(w1), w3 + t * g(w1)]


@dataclass(frozen=True)
class ChainMaps:
    """The displayed maps; swap one out with ``replace`` to run a mutation."""
    pi: Callable = sym_pi
    induced_c2: Callable = induced_c2
    phi: Callable = phi
    phi_inverse: Callable = phi_inverse
    b_action: Callable = b_action
    f: Callable = f_default
    g: Callable = g_default


DEFAULT_MAPS = ChainMaps()


def as_polymap(fn: Callable, nin: int) -> PolyMap:
    """Tabulate ``fn`` on the coordinate polynomials of ``C^nin``."""
    xs = Poly.vars(nin)
    return PolyMap([_lift(p, nin) for p in fn(xs)], nin)


def _lift(p, n):
    return p if isinstance(p, Poly) else Poly.const(n, p)


@dataclass(frozen=True)
class ChainCheck:
    id: str
    passed: bool
    detail: str = ""


@dataclass
class ChainReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, key: str) -> ChainCheck:
        return next(c for c in self.checks if c.id == key)


def _compare(cid: str, lhs: PolyMap, rhs: PolyMap, names) -> ChainCheck:
    if lhs == rhs:
        return ChainCheck(cid, True)
    bad = next(k for k in range(lhs.target) if lhs[k] != rhs[k])
    return ChainCheck(cid, False, f"coordinate {bad + 1}: lhs {lhs[bad].format(names)} "
                                  f"vs rhs {rhs[bad].format(names)}")


def pi_center_invariant(maps: ChainMaps = DEFAULT_MAPS, a_zero=True, b_zero=True) -> ChainCheck:
    """``pi(g.Z) = pi(Z)`` for ``g = (a, b, c)`` with the chosen parameters zeroed."""
    names = ["a", "b", "c", "z11", "z12", "z13", "z22", "z23", "z33"]

    def moved(v):
        a = Poly(9) if a_zero else v[0]
        b = Poly(9) if b_zero else v[1]
        return apply_group(GroupElement5(a, b, v[2]), v[3:])

    lhs = poly_compose(as_polymap(maps.pi, 6), as_polymap(moved, 9))
    rhs = as_polymap(lambda v: maps.pi(v[3:]), 9)
    return _compare("center-invariance", lhs, rhs, names)


def verify_trivialization_chain(maps: ChainMaps = DEFAULT_MAPS) -> ChainReport:
    rep = ChainReport()
    rep.checks.append(pi_center_invariant(maps))

    # the quotient C^2 action on C^5 induced through pi
    names9 = ["a", "b", "c", "z11", "z12", "z13", "z22", "z23", "z33"]
    lhs = poly_compose(as_polymap(maps.pi, 6),
                       as_polymap(lambda v: apply_group(GroupElement5(*v[:3]), v[3:]), 9))
    rhs = as_polymap(lambda v: maps.induced_c2(v[0], v[1], maps.pi(v[3:])), 9)
    rep.checks.append(_compare("induced-c2-action", lhs, rhs, names9))

    # Phi turns the a-action into translation in the first coordinate
    names6 = ["a", "z1", "z2", "z3", "z4", "z5"]
    zero6 = Poly(6)
    lhs = poly_compose(as_polymap(maps.phi, 5),
                       as_polymap(lambda v: maps.induced_c2(v[0], zero6, v[1:]), 6))

    def shifted(v):
        w = maps.phi(v[1:])
        return [w[0] + v[0]] + list(w[1:])

    rhs = as_polymap(shifted, 6)
    rep.checks.append(_compare("phi-straightens-a", lhs, rhs, names6))

    ident = PolyMap.identity(5)
    both = (poly_compose(as_polymap(maps.phi_inverse, 5), as_polymap(maps.phi, 5)) == ident
            and poly_compose(as_polymap(maps.phi, 5), as_polymap(maps.phi_inverse, 5)) == ident)
    rep.checks.append(ChainCheck("phi-biregular", both,
                                 "" if both else "phi_inverse is not a two-sided inverse"))

    # the b-action descends to the a-invariant coordinates 2..5 of Phi
    names_b = ["b", "z1", "z2", "z3", "z4", "z5"]
    lhs = poly_compose(as_polymap(lambda z: maps.phi(z)[1:], 5),
                       as_polymap(lambda v: maps.induced_c2(zero6, v[0], v[1:]), 6))
    rhs = as_polymap(lambda v: maps.b_action(v[0], maps.phi(v[1:])[1:]), 6)
    rep.checks.append(_compare("induced-b-action", lhs, rhs, names_b))

    # projection to C^3 is equivariant onto t.w = (w1, w2 + t f, w3 + t g)
    names_t = ["b", "w1", "w2", "w3", "w4"]
    lhs = as_polymap(lambda v: maps.b_action(v[0], v[1:])[:3], 5)
    rhs = as_polymap(lambda v: t_action(v[0], v[1:4], maps.f, maps.g), 5)
    rep.checks.append(_compare("free-c-action-c3", lhs, rhs, names_t))
    return rep


# -- Bezout straightening ---------------------------------------------------

def poly_matrix_det(m) -> Poly:
    """Determinant of a 3x3 matrix of univariate polys (cofactor expansion)."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _at(p: Poly, z1: Poly) -> Poly:
    return p.compose([z1])


def bezout_literal_map(f: Poly, g: Poly, phi_: Poly, psi: Poly) -> PolyMap:
    """``z -> [[1,0,0],[0,f,g],[0,-psi,phi]] z`` with entries evaluated at ``z1``."""
    z1, z2, z3 = Poly.vars(3)
    return PolyMap([z1, _at(f, z1) * z2 + _at(g, z1) * z3,
                    -_at(psi, z1) * z2 + _at(phi_, z1) * z3], 3)


def bezout_trivialize(f: Poly, g: Poly):
    """Return ``(phi, psi, Phi)`` with ``phi f + psi g = 1`` and ``Phi`` straightening.

    ``Phi(z) = (z1, phi z2 + psi z3, -g z2 + f z3)`` (entries evaluated at
    ``z1``) has determinant 1 and turns ``t.z = (z1, z2 + t f, z3 + t g)``
    into translation by ``t`` in the second coordinate.
    """
    d, phi_, psi = ext_euclid(f, g)
    if d.is_zero() or d.degree() > 0:
        raise ValueError(f"f and g have a common root (gcd {d.format(['w'])}); "
                         "the action is not free")
    z1, z2, z3 = Poly.vars(3)
    mp = PolyMap([z1, _at(phi_, z1) * z2 + _at(psi, z1) * z3,
                  -_at(g, z1) * z2 + _at(f, z1) * z3], 3)
    return phi_, psi, mp


def bezout_matrix(f: Poly, g: Poly, phi_: Poly, psi: Poly):
    one, zero = Poly.const(1, 1), Poly(1)
    return [[one, zero, zero], [zero, phi_, psi], [zero, -g, f]]


def conjugation_shift(mp: PolyMap, f: Poly, g: Poly) -> PolyMap:
    """``Phi(t.z) - Phi(z)`` in the variables ``(t, z1, z2, z3)``."""
    t, z1, z2, z3 = Poly.vars(4)
    moved = PolyMap([z1, z2 + t * _at(f, z1), z3 + t * _at(g, z1)], 4)
    still = PolyMap([z1, z2, z3], 4)
    return poly_compose(mp, moved) - poly_compose(mp, still)



# -- seeded mutations -----------------------------------------------------------

def _pi_plus(z):
    z11, z12, z13, z22, z23, z33 = z
    return [z11, z12, z13, z22 + z33, z23]


def _induced_c2_halved(a, b, z):
    out = induced_c2(a, b, z)
    out[3] = out[3] - a * b
    return out


def _phi_no_shift(z):
    z1, z2, z3, z4, z5 = z
    return [z2, z1, z3 - z1 * z2, z4 + 2 * z2 * z3 - 2 * z1 * z5, z2 * z2 - 2 * z5]


def _phi_inverse_no_shift(w):
    out = phi_inverse(w)
    out[3] = out[3] - 2 * w[0]
    return out


def _b_action_flipped(b, w):
    out = b_action(b, w)
    out[2] = w[2] + 2 * b * w[0]
    return out


def _f_flipped(w1):
    return w1 * w1 + 1


def chain_mutations() -> dict:
    """One perturbed map per identity, keyed by the check it must break."""
    return {
        "center-invariance": replace(DEFAULT_MAPS, pi=_pi_plus),
        "induced-c2-action": replace(DEFAULT_MAPS, induced_c2=_induced_c2_halved),
        "phi-straightens-a": replace(DEFAULT_MAPS, phi=_phi_no_shift),
        "phi-biregular": replace(DEFAULT_MAPS, phi_inverse=_phi_inverse_no_shift),
        "induced-b-action": replace(DEFAULT_MAPS, b_action=_b_action_flipped),
        "free-c-action-c3": replace(DEFAULT_MAPS, f=_f_flipped),
    }
