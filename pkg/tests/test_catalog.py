import time
from dataclasses import replace
from fractions import Fraction

import pytest
import sympy

from jalg.catalog import (SIEGEL_LABELS, b_form, catalog_make, check_axioms, omega,
                          parse_catalog_spec, siegel_coordinates, siegel_matrix_basis)
from jalg.exact import Matrix
from jalg.lie import jacobi_defect
from jalg.reference_tables import (b2_b3_pairs, b2_on_b3_reference, ball_reference,
                                   lieball_reference, table_mismatches)

SPECS = ([f"ball:{n}" for n in range(2, 9)] + [f"lieball:{n}" for n in range(3, 9)]
         + ["siegel:3", "d5"])


@pytest.mark.parametrize("spec", SPECS)
def test_catalog_passes_every_axiom_quickly(spec):
    a = parse_catalog_spec(spec)
    t = time.perf_counter()
    rep = check_axioms(a)
    assert rep.passed, rep.format()
    assert time.perf_counter() - t < 1.0


@pytest.mark.parametrize("n", range(2, 9))
def test_ball_table_matches_reference(n):
    assert table_mismatches(catalog_make("ball", n).alg, ball_reference(n)) == []


@pytest.mark.parametrize("n", range(3, 9))
def test_lieball_table_matches_reference(n):
    assert table_mismatches(catalog_make("lieball", n).alg, lieball_reference(n)) == []


@pytest.mark.parametrize("spec", ["siegel:3", "d5"])
def test_b2_acts_on_b3_as_displayed(spec):
    assert table_mismatches(parse_catalog_spec(spec).alg, b2_on_b3_reference(), b2_b3_pairs()) == []


def test_frozen_values():
    b3 = catalog_make("ball", 3)
    assert b3.alg.bracket(b3.e("alpha"), b3.e("zeta")) == b3.vec(zeta=-2)
    assert b3.j(b3.e("zeta")) == b3.e("alpha") and b3.j(b3.e("xi1")) == b3.e("xi1p")
    l3 = catalog_make("lieball", 3)
    assert l3.j(l3.e("zeta")) == l3.vec(delta=1, alpha=1)
    assert l3.alg.bracket(l3.e("eta"), l3.e("xi1p")) == l3.vec(xi1=2)
    d5 = catalog_make("d5")
    assert d5.alg.bracket(d5.e("zeta2"), d5.e("xi32p")) == d5.vec(xi32=2)
    # within b_3 the matrix convention puts alpha3 with the opposite sign
    assert d5.alg.bracket(d5.e("alpha3"), d5.e("zeta3")) == d5.vec(zeta3=2)


def test_siegel_constants_match_sympy_commutators():
    basis = siegel_matrix_basis()
    s = catalog_make("siegel3")
    sym = {k: sympy.Matrix(6, 6, [sympy.Rational(x.numerator, x.denominator)
                                  for r in m.entries for x in map(Fraction, r)])
           for k, m in basis.items()}
    for i, x in enumerate(SIEGEL_LABELS):
        for y in SIEGEL_LABELS[i + 1:]:
            comm = sym[x] * sym[y] - sym[y] * sym[x]
            want = sympy.zeros(6, 6)
            for lab, c in zip(SIEGEL_LABELS, s.alg.bracket(s.e(x), s.e(y))):
                want += sympy.Rational(c.numerator, c.denominator) * sym[lab]
            assert comm == want, (x, y)


def test_siegel_coordinates_rejects_outside_matrices():
    with pytest.raises(ValueError):
        siegel_coordinates(Matrix.identity(6))


def test_siegel_lambda_is_a_trace():
    s = catalog_make("siegel3")
    assert s.lam_of(s.e("zeta3")) == s.lam_of(s.e("zeta2")) == s.lam_of(s.e("zeta1"))
    assert s.lam_of(s.e("zeta3")) != 0


@pytest.mark.parametrize("spec", ["ball:2", "ball:3", "lieball:3", "lieball:4", "siegel:3", "d5"])
def test_every_single_sign_flip_is_detected(spec):
    a = parse_catalog_spec(spec)
    for (i, j), rhs in a.alg.table().items():
        for k in rhs:
            new = dict(rhs)
            new[k] = -new[k]
            alg = a.alg.with_entry(i, j, new)
            caught = jacobi_defect(alg) is not None or not check_axioms(replace(a, alg=alg)).passed
            assert caught, (a.labels[i], a.labels[j], a.labels[k])


def test_flipped_lambda_fails_positivity_with_a_witness():
    b3 = catalog_make("ball", 3)
    rep = check_axioms(replace(b3, lam=tuple(-c for c in b3.lam)))
    assert not rep["B-positive"].passed
    assert "x=xi1" in rep["B-positive"].witness and "=-1" in rep["B-positive"].witness


def test_broken_j_is_reported():
    b2 = catalog_make("ball", 2)
    rep = check_axioms(replace(b2, J=b2.J.scale(2)))
    assert not rep["J-squared"].passed


def test_b_form_is_positive_definite_on_catalog():
    for spec in ("ball:4", "lieball:5", "d5"):
        a = parse_catalog_spec(spec)
        assert all(m > 0 for m in b_form(a).leading_minors())


def test_omega_is_j_invariant_on_ball():
    a = catalog_make("ball", 4)
    for i in range(a.dim):
        for j in range(a.dim):
            x, y = a.e(i), a.e(j)
            assert omega(a, a.j(x), a.j(y)) == omega(a, x, y)


@pytest.mark.parametrize("bad", ["ball:1", "lieball:2", "siegel:4", "d5:1", "foo:2", "ball:x"])
def test_bad_catalog_names(bad):
    with pytest.raises(ValueError):
        parse_catalog_spec(bad)
