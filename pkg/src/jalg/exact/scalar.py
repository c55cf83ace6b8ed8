"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["Gaussian", "I", "as_scalar", "parse_rational", "parse_scalar",
           "format_scalar", "is_zero", "real_part", "imag_part", "conj"]


class Gaussian:
    """An element ``re + im*i`` of Q(i) with ``Fraction`` parts.

    Instances are immutable and compare equal to ints/Fractions when the
    imaginary part vanishes (hashes agree as well).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Gaussian(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        return Gaussian((self.re * o.re + self.im * o.im) / n,
                        (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = Gaussian(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def norm(self):
        """The field norm ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"Gaussian({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


I = Gaussian(0, 1)


def as_scalar(x):
    """Normalize ints and real Gaussians to ``Fraction``; leave others alone."""
    if isinstance(x, Gaussian):
        return x.re if x.im == 0 else x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def is_zero(x) -> bool:
    return not x


def real_part(x) -> Fraction:
    return x.re if isinstance(x, Gaussian) else Fraction(x)


def imag_part(x) -> Fraction:
    return x.im if isinstance(x, Gaussian) else Fraction(0)


def conj(x):
    return x.conjugate() if isinstance(x, Gaussian) else x


_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^{_RAT}$")
_GAUSS_RE = re.compile(rf"^(?:(?P<re>{_RAT})(?=[+-]|$))?(?:(?P<im>[+-]?(?:\d+(?:/\d+)?)?)i)?$")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    return Fraction(text)


def parse_scalar(text: str):
    """Parse ``p/q``, ``i``, ``-3/2i``, ``1/2+3i`` style literals."""
    t = text.strip().replace(" ", "")
    if _RAT_RE.match(t):
        return Fraction(t)
    m = _GAUSS_RE.match(t)
    if not t or not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"malformed scalar {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_txt = m.group("im")
    if im_txt in ("", "+"):
        im_part = Fraction(1)
    elif im_txt == "-":
        im_part = Fraction(-1)
    else:
        im_part = Fraction(im_txt)
    return as_scalar(Gaussian(re_part, im_part))


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical text; ``parse_scalar(format_scalar(x)) == x``."""
    if not isinstance(x, Gaussian):
        return _fmt_rat(Fraction(x))
    re_part, im_part = x.re, x.im
    if im_part == 0:
        return _fmt_rat(re_part)
    if im_part == 1:
        im_txt = "i"
    elif im_part == -1:
        im_txt = "-i"
    else:
        im_txt = _fmt_rat(im_part) + "i"
    if re_part == 0:
        return im_txt
    sign = "" if im_txt.startswith("-") else "+"
    return f"{_fmt_rat(re_part)}{sign}{im_txt}"
