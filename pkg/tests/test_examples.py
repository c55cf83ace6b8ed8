import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jalg.catalog import catalog_make
from jalg.lie import bracket, centralizer, is_abelian, is_subalgebra, normalizer
from jalg.siegel.ball_examples import (bhat3_bracket_ok, bhat3_fields, bhat3_orbits_check,
                                       bhat3_subspace, gamma_b2, gamma_b2_group_law_check,
                                       gamma_params, gamma_zariski_closure)
from jalg.siegel.counterexample import (basis_extensions, displayed_normalizer,
                                        extension_obstruction, flow_matches_group,
                                        lemma_symbolic_checks, n_gamma, n_gamma_vectors,
                                        random_extension_vector, random_tau_alpha, y_tau, z0_rank)
from jalg.siegel.fields import ball_realization, field_of, field_rank
from jalg.siegel.group import Z0, in_fiber_D
from jalg.totally_real import complete_greedy, is_totally_real

rats = st.fractions(min_value=-6, max_value=6, max_denominator=4)
ints = st.integers(-20, 20)


# -- Heisenberg orbits on the 3-ball -----------------------------------------------------

def test_bhat3_brackets():
    assert bhat3_bracket_ok()


def test_bhat3_fields_are_the_algebra_elements():
    b3 = catalog_make("ball", 3)
    real = ball_realization(3)
    s = bhat3_subspace(b3)
    assert s.dim == 3 and is_subalgebra(b3.alg, s) and is_totally_real(b3, s)
    x1, x2, x3 = (field_of(real, b3, v) for v in (b3.vec(xi1=2), b3.vec(xi1p=2, xi2p=2),
                                                   b3.vec(zeta=1)))
    assert (x1, x2, x3) == bhat3_fields()


def test_bhat3_orbits_are_maximally_totally_real():
    assert bhat3_orbits_check(random.Random(1), 100) == []


def test_bhat3_independence_fails_off_a_totally_real_span():
    b3 = catalog_make("ball", 3)
    real = ball_realization(3)
    fields = [field_of(real, b3, b3.e(x)) for x in ("xi1", "xi1p", "zeta")]
    assert field_rank(fields, real.base_point) < 3


# -- the discrete group on the 2-ball ---------------------------------------------------

def test_gamma_group_law():
    r = gamma_b2_group_law_check(random.Random(2), 50)
    assert r.passed, r.failures


@given(ints, ints, ints)
def test_gamma_params_recover_the_generator(k, m, n):
    assert gamma_params(gamma_b2(k, m, n)) == (k, m, n)


def test_gamma_params_reject_non_members():
    assert gamma_params(gamma_b2(Fraction(1, 2), 0, 0)) is None
    assert gamma_params(gamma_b2(0, Fraction(1, 3), 0)) is None


def test_gamma_zariski_closure_is_the_nilradical():
    b2 = catalog_make("ball", 2)
    assert gamma_zariski_closure(b2) == b2.nilradical
    assert not is_totally_real(b2, b2.nilradical)


# -- the counterexample in the Siegel fiber ------------------------------------------------

@pytest.fixture(scope="module")
def d5():
    return catalog_make("d5")


def test_n_gamma_is_a_heisenberg_algebra(d5):
    x1, x2, x3 = n_gamma_vectors(d5)
    assert bracket(d5.alg, x1, x2) == x3
    assert not any(bracket(d5.alg, x1, x3)) and not any(bracket(d5.alg, x2, x3))
    ng = n_gamma(d5)
    assert is_subalgebra(d5.alg, ng) and is_totally_real(d5, ng) and not is_abelian(d5.alg, ng)


def test_y_tau_centralizes_n_gamma(d5):
    cen = centralizer(d5.alg, n_gamma(d5))
    rng = random.Random(7)
    for _ in range(20):
        tau = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        assert cen.contains(y_tau(d5, tau))


def test_normalizers(d5):
    shown = displayed_normalizer(d5)
    assert shown.dim == 5 and not is_totally_real(d5, shown)
    assert normalizer(d5.alg, n_gamma(d5), within=d5.nilradical) == shown
    rng = random.Random(8)
    for _ in range(20):
        tau = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        s = n_gamma(d5).extend(y_tau(d5, tau))
        assert is_subalgebra(d5.alg, s) and is_totally_real(d5, s)
        assert normalizer(d5.alg, s, within=d5.nilradical) == shown


def test_lemma_identities(d5):
    assert all(lemma_symbolic_checks(d5).values())


def test_only_xi32_extends_among_basis_vectors(d5):
    assert basis_extensions(d5) == [("xi32", 0)]


def test_zeta3_extension_is_a_subalgebra_but_not_totally_real(d5):
    r = extension_obstruction(d5, d5.e("zeta3"))
    assert r["subalgebra"] and not r["totally_real"] and r["tau"] is None


@pytest.mark.parametrize("family", [True, False])
def test_extension_obstruction_replay(d5, family):
    rng = random.Random(f"replay:{family}")
    for _ in range(25):
        y = random_extension_vector(d5, rng, family)
        r = extension_obstruction(d5, y)
        assert r["totally_real"] == (r["tau"] is not None)
        if family:
            assert r["totally_real"] and r["normalizer_totally_real"] is False


def test_z0_family_is_degenerate(d5):
    rng = random.Random(9)
    for _ in range(20):
        tau, alpha = random_tau_alpha(rng)
        assert alpha > 1 / (1 + tau * tau) ** 2
        assert in_fiber_D(Z0(tau, alpha))
        assert z0_rank(d5, tau, alpha) == 3


def test_z0_boundary_is_excluded():
    assert not in_fiber_D(Z0(0, 1))
    assert in_fiber_D(Z0(0, Fraction(11, 10)))


@given(rats, rats, rats)
@settings(max_examples=20, deadline=None)
def test_flow_matches_group_element(a, b, c):
    assert flow_matches_group(catalog_make("d5"), a, b, c)


def test_greedy_search_finds_no_completion(d5):
    assert not complete_greedy(d5, n_gamma(d5)).completed
