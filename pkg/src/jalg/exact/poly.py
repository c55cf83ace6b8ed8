"""Sparse multivariate polynomials over Q(i) and polynomial self-maps.

A :class:`Poly` is a dict from exponent tuples to nonzero coefficients.
Univariate helpers (division, gcd, extended Euclid) work on one-variable
polys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import Gaussian, as_scalar, format_scalar

__all__ = ["Poly", "PolyMap", "poly_compose", "poly_divmod", "poly_gcd", "ext_euclid"]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent {exps} for {nvars} variables")
            c = as_scalar(c)
            if c:
                clean[exps] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def vars(cls, nvars: int) -> list:
        return [cls.var(nvars, i) for i in range(nvars)]

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "Poly":
        """Univariate poly from ascending coefficients."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    def _lift(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction, Gaussian)):
            return Poly.const(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return Poly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Poly(self.nvars, t)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Poly):
            raise TypeError("use poly_divmod for polynomial division")
        return Poly(self.nvars, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("nonnegative integer exponent required")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Gaussian)):
            return self.terms == Poly.const(self.nvars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero poly."""
        return max((sum(e) for e in self.terms), default=-1)

    def coeff(self, exps) -> object:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def uses_only(self, indices) -> bool:
        allowed = set(indices)
        return all(not k or i in allowed for e in self.terms for i, k in enumerate(e))

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return as_scalar(total) if not isinstance(total, Poly) else total

    def compose(self, inner: Sequence["Poly"]) -> "Poly":
        """Substitute ``inner[i]`` for variable ``i``."""
        if len(inner) != self.nvars:
            raise ValueError("dimension mismatch in composition")
        m = inner[0].nvars if inner else 0
        powers = [{0: Poly.const(m, 1)} for _ in inner]

        def pw(i, k):
            if k not in powers[i]:
                powers[i][k] = pw(i, k - 1) * inner[i]
            return powers[i][k]

        out = Poly(m)
        for e, c in self.terms.items():
            term = Poly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            cs = format_scalar(c)
            if isinstance(c, Gaussian) and c.re and c.im:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.format()})"

    # -- univariate helpers ------------------------------------------------
    def _check_univariate(self):
        if self.nvars != 1:
            raise ValueError("univariate polynomial required")

    def leading(self):
        self._check_univariate()
        d = self.degree()
        return self.coeff((d,)) if d >= 0 else Fraction(0)


class PolyMap:
    """A polynomial map ``K^source -> K^target`` (one Poly per coordinate)."""

    __slots__ = ("source", "polys")

    def __init__(self, polys: Sequence[Poly], source: int | None = None):
        polys = tuple(polys)
        if source is None:
            source = polys[0].nvars if polys else 0
        for p in polys:
            if p.nvars != source:
                raise ValueError("every coordinate must use the source variables")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "polys", polys)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMap is immutable")

    @property
    def target(self) -> int:
        return len(self.polys)

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        return cls(Poly.vars(n), n)

    def __call__(self, point):
        return tuple(p(tuple(point)) for p in self.polys)

    def __getitem__(self, k):
        return self.polys[k]

    def compose(self, inner: "PolyMap") -> "PolyMap":
        """``self o inner``."""
        return poly_compose(self, inner)

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.source == other.source and self.polys == other.polys

    def __hash__(self):
        return hash(self.polys)

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        return PolyMap([a - b for a, b in zip(self.polys, other.polys)], self.source)

    def __repr__(self):
        return "PolyMap(" + ", ".join(p.format() for p in self.polys) + ")"


def poly_compose(outer: PolyMap, inner: PolyMap) -> PolyMap:
    if outer.source != inner.target:
        raise ValueError(f"cannot compose: outer expects {outer.source} inputs, "
                         f"inner produces {inner.target}")
    return PolyMap([p.compose(inner.polys) for p in outer.polys], inner.source)


def poly_divmod(f: Poly, g: Poly):
    f._check_univariate()
    g._check_univariate()
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = Poly(1)
    r = f
    dg, lg = g.degree(), g.leading()
    while not r.is_zero() and r.degree() >= dg:
        k = r.degree() - dg
        t = Poly(1, {(k,): r.leading() / lg})
        q = q + t
        r = r - t * g
    return q, r


def _monic(p: Poly) -> Poly:
    return p / p.leading() if not p.is_zero() else p


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of univariate polys (zero if both are zero)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return _monic(a)


def ext_euclid(f: Poly, g: Poly):
    """Return ``(d, s, t)`` with ``s f + t g = d`` and ``d`` the monic gcd.

    Cofactors are reduced so that ``deg s < deg g - deg d`` and
    ``deg t < deg f - deg d`` whenever those bounds make sense.
    """
    r0, r1 = f, g
    s0, s1 = Poly.const(1, 1), Poly(1)
    t0, t1 = Poly(1), Poly.const(1, 1)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading()
    d, s, t = r0 / lc, s0 / lc, t0 / lc
    if g.degree() > 0:
        gq = poly_divmod(g, d)[0]
        k, s = poly_divmod(s, gq)
        t = t + k * poly_divmod(f, d)[0]
    return d, s, t
