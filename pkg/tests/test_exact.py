from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jalg.exact import (AffineField, AffineMap, Gaussian, I, Matrix, Poly, PolyMap, Subspace,
                        as_scalar, exp_nilpotent_affine, ext_euclid, flow_polymap, format_scalar,
                        nullspace, parse_scalar, poly_compose, poly_divmod, poly_gcd, span_intersect)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=6)
gauss = st.builds(lambda a, b: as_scalar(Gaussian(a, b)), rats, rats)


def to_sympy(x):
    if isinstance(x, Gaussian):
        return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(
            x.im.numerator, x.im.denominator)
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def small_matrix(rows, cols, elems=rats):
    return st.lists(st.lists(elems, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


# -- scalars -------------------------------------------------------------------------

@given(gauss, gauss)
def test_gaussian_field_ops_match_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    if b:
        assert sympy.expand(to_sympy(a / b) - to_sympy(a) / to_sympy(b)) == 0


@given(gauss)
def test_scalar_text_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_real_gaussians_collapse_to_fractions():
    x = as_scalar(Gaussian(Fraction(3, 2), 0))
    assert isinstance(x, Fraction) and x == Fraction(3, 2)
    assert I * I == -1


@pytest.mark.parametrize("bad", ["", "1/0x", "i i", "abc"])
def test_parse_scalar_rejects_garbage(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad)


# -- matrices ------------------------------------------------------------------------

@given(small_matrix(3, 4))
def test_rank_and_nullspace_match_sympy(rows):
    m = Matrix(rows, 4)
    sm = sympy.Matrix([[to_sympy(x) for x in r] for r in rows])
    assert m.rank() == sm.rank()
    ker = nullspace(m)
    assert ker.dim == 4 - sm.rank()
    for v in ker.basis:
        assert not any(m.apply(v))


@given(small_matrix(3, 3, gauss))
@settings(max_examples=60)
def test_det_matches_sympy(rows):
    m = Matrix(rows, 3)
    sm = sympy.Matrix([[to_sympy(x) for x in r] for r in rows])
    assert to_sympy(m.det()) == sympy.expand(sm.det())


@given(small_matrix(3, 3), small_matrix(3, 3))
def test_det_is_multiplicative(a, b):
    a, b = Matrix(a, 3), Matrix(b, 3)
    assert (a @ b).det() == a.det() * b.det()


@given(st.lists(st.lists(rats, min_size=4, max_size=4), max_size=3),
       st.lists(st.lists(rats, min_size=4, max_size=4), max_size=3))
def test_subspace_dimension_formula(a, b):
    sa, sb = Subspace(a, 4), Subspace(b, 4)
    assert sa.dim + sb.dim == (sa + sb).dim + span_intersect(sa, sb).dim
    assert (sa & sb) <= sa and (sa & sb) <= sb


def test_subspace_equality_ignores_basis_choice():
    a = Subspace([(1, 1, 0), (0, 1, 1)], 3)
    b = Subspace([(1, 2, 1), (1, 0, -1)], 3)
    assert a == b and hash(a) == hash(b)
    assert a.coordinates((2, 3, 1)) is not None


def test_nilpotency():
    n = Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert n.is_nilpotent() and not Matrix.identity(3).is_nilpotent()


# -- polynomials ---------------------------------------------------------------------

def _sym(p: Poly, names):
    xs = sympy.symbols(names)
    return sympy.expand(sum(to_sympy(c) * sympy.Mul(*(x ** e for x, e in zip(xs, ex)))
                            for ex, c in p.terms.items()))


@given(st.lists(rats, min_size=1, max_size=5), st.lists(rats, min_size=1, max_size=4))
def test_univariate_divmod_and_gcd_match_sympy(fc, gc):
    f, g = Poly.from_coeffs(fc), Poly.from_coeffs(gc)
    w = sympy.Symbol("w")
    if not g.is_zero():
        q, r = poly_divmod(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree() < g.degree()
    d = poly_gcd(f, g)
    sd = sympy.gcd(_sym(f, ["w"]), _sym(g, ["w"]))
    if sd != 0:
        sd = sympy.Poly(sd, w).monic().as_expr()
    assert _sym(d, ["w"]) == sympy.expand(sd)


@given(st.lists(rats, min_size=1, max_size=5), st.lists(rats, min_size=2, max_size=4))
def test_ext_euclid_bezout_identity_and_degree_bounds(fc, gc):
    f, g = Poly.from_coeffs(fc), Poly.from_coeffs(gc)
    d, s, t = ext_euclid(f, g)
    assert s * f + t * g == d
    if not d.is_zero() and g.degree() > d.degree():
        assert s.is_zero() or s.degree() < g.degree() - d.degree()


def test_bezout_pair_for_the_quadratic_instance():
    w = Poly.vars(1)[0]
    f, g = -(w * w + 1), -2 * w
    d, s, t = ext_euclid(f, g)
    assert d == Poly.const(1, 1)
    assert s == Poly.const(1, -1) and t == w * Fraction(1, 2)


@given(st.lists(rats, min_size=1, max_size=4), st.lists(rats, min_size=1, max_size=3))
@settings(max_examples=50)
def test_composition_matches_sympy(pc, qc):
    x, y = Poly.vars(2)
    p = Poly.from_coeffs(pc).compose([x * y + 1])
    q = Poly.from_coeffs(qc).compose([x - y])
    comp = p.compose([q, x])
    sx, sy = sympy.symbols("x y")
    want = sympy.expand(_sym(p, ["x", "y"]).subs({sx: _sym(q, ["x", "y"]), sy: sx},
                                                 simultaneous=True))
    assert _sym(comp, ["x", "y"]) == want


def test_polymap_composition_is_associative():
    x, y = Poly.vars(2)
    f = PolyMap([x + y * y, y], 2)
    g = PolyMap([x, y + x * x * 3], 2)
    h = PolyMap([y, x], 2)
    assert poly_compose(f, poly_compose(g, h)) == poly_compose(poly_compose(f, g), h)
    assert poly_compose(f, PolyMap.identity(2)) == f


# -- affine flows --------------------------------------------------------------------

def _rand_nilpotent_field(entries, const):
    # strictly upper triangular linear part
    a = [[0, entries[0], entries[1]], [0, 0, entries[2]], [0, 0, 0]]
    return AffineField(Matrix(a), tuple(const))


@given(st.lists(rats, min_size=3, max_size=3), st.lists(gauss, min_size=3, max_size=3),
       rats, rats)
def test_flow_is_a_one_parameter_group(entries, const, s, t):
    f = _rand_nilpotent_field(entries, const)
    assert exp_nilpotent_affine(f, s) @ exp_nilpotent_affine(f, t) == exp_nilpotent_affine(f, s + t)
    assert exp_nilpotent_affine(f, 0) == AffineMap.identity(3)


@given(st.lists(rats, min_size=3, max_size=3), st.lists(rats, min_size=3, max_size=3), rats)
def test_flow_polymap_specializes_to_exp(entries, const, t):
    f = _rand_nilpotent_field(entries, const)
    pm = flow_polymap(f)
    x = Poly.vars(3)
    at_t = PolyMap([p.compose([Poly.const(3, t), *x]) for p in pm.polys], 3)
    assert at_t == exp_nilpotent_affine(f, t).to_polymap()


@given(st.lists(gauss, min_size=3, max_size=3), st.lists(gauss, min_size=3, max_size=3),
       st.lists(gauss, min_size=9, max_size=9), st.lists(gauss, min_size=3, max_size=3))
@settings(max_examples=50)
def test_affine_field_is_affine(p, q, lin, const):
    f = AffineField(Matrix([lin[0:3], lin[3:6], lin[6:9]]), const)
    pq = tuple(a + b for a, b in zip(p, q))
    lhs = tuple(a - b - c + d for a, b, c, d in zip(f(pq), f(p), f(q), f((0, 0, 0))))
    assert not any(lhs)


def test_exp_rejects_non_nilpotent_fields():
    with pytest.raises(ValueError):
        exp_nilpotent_affine(AffineField(Matrix.identity(2), (0, 0)), 1)
