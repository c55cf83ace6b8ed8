import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jalg.catalog import catalog_make, parse_catalog_spec
from jalg.exact import AffineField, Gaussian, I, Matrix, Poly, PolyMap, as_scalar
from jalg.siegel.chain import (DEFAULT_MAPS, bezout_literal_map, bezout_matrix,
                               bezout_trivialize, chain_mutations, conjugation_shift,
                               pi_center_invariant, poly_matrix_det, replace,
                               verify_trivialization_chain)
from jalg.siegel.fields import (FIELD_BRACKET_SIGN, ball_realization, field_bracket, field_eval,
                                field_minor_polys, field_of, j_from_realization,
                                lieball_realization, measure_bracket_sign, realization_for,
                                sym3_realization)
from jalg.siegel.group import (GroupElement5, Z0, action_polys, apply_group, block_action,
                               group_affine_map, in_fiber_D, random_fiber_point, random_sym_point,
                               stabilizer_solve)

rats = st.fractions(min_value=-8, max_value=8, max_denominator=4)
gauss = st.builds(lambda a, b: as_scalar(Gaussian(a, b)), rats, rats)
params = st.builds(GroupElement5, rats, rats, rats)


# -- realizations ----------------------------------------------------------------------

@pytest.mark.parametrize("spec", ["ball:2", "ball:3", "lieball:3", "lieball:4", "siegel:3", "d5"])
def test_j_agrees_with_the_realization(spec):
    a = parse_catalog_spec(spec)
    assert j_from_realization(realization_for(a), a) == a.J


@pytest.mark.parametrize("spec,sign", [("ball:3", 1), ("lieball:4", 1), ("siegel:3", -1),
                                       ("d5", -1)])
def test_bracket_sign_of_each_realization(spec, sign):
    a = parse_catalog_spec(spec)
    assert measure_bracket_sign(realization_for(a), a) == sign


def test_matrix_realizations_use_the_recorded_sign():
    assert FIELD_BRACKET_SIGN == -1


@pytest.mark.parametrize("real", [ball_realization(3), lieball_realization(4),
                                  sym3_realization(False), sym3_realization(True)])
def test_samplers_stay_in_the_domain(real):
    rng = random.Random(4)
    assert real.in_domain(real.base_point)
    for _ in range(30):
        assert real.in_domain(real.sample(rng))


def test_outside_points_are_rejected():
    assert not ball_realization(2).in_domain((Fraction(0), Fraction(0)))
    assert not sym3_realization(True).in_domain((2 * I, 0, 0, I, 0, I))


def test_field_eval_checks_dimension():
    with pytest.raises(ValueError):
        field_eval(AffineField.zero(3), (1, 2))


def test_minor_polys_vanish_on_dependent_data():
    fields = [AffineField.constant_field((1, 0)), AffineField.constant_field((2, 0))]
    minors = field_minor_polys(fields)
    assert all(p.is_zero() for _, p in minors)


# -- the unipotent group on Sym(3, C) ---------------------------------------------------------

@given(params, params)
@settings(max_examples=50)
def test_group_law_matches_matrix_product(g, h):
    assert g.matrix() @ h.matrix() == (g @ h).matrix()
    assert GroupElement5.from_matrix(g.matrix() @ h.matrix()) == g @ h
    assert (g @ g.inverse()).matrix() == Matrix.identity(6)


@given(params)
@settings(max_examples=50)
def test_group_is_unipotent_with_unit_determinant(g):
    m = g.matrix()
    assert (m - Matrix.identity(6)).is_nilpotent()
    assert m.det() == 1 and group_affine_map(g).det() == 1


@given(params, st.lists(gauss, min_size=6, max_size=6))
@settings(max_examples=50)
def test_explicit_action_matches_block_action(g, z):
    assert block_action(g.matrix(), z) == apply_group(g, z)


@given(params, params, st.lists(gauss, min_size=6, max_size=6))
@settings(max_examples=30)
def test_action_is_a_left_action(g, h, z):
    assert apply_group(g, apply_group(h, z)) == apply_group(g @ h, z)


def test_from_matrix_rejects_other_matrices():
    with pytest.raises(ValueError):
        GroupElement5.from_matrix(Matrix.identity(6).scale(2))


def test_block_action_checks_shape():
    bad = Matrix.identity(6).scale(2)
    with pytest.raises(ValueError):
        block_action(bad, (0,) * 6)


def test_action_is_polynomial_in_parameters():
    polys = action_polys(Z0(Fraction(1, 3), 5))
    assert len(polys) == 6 and polys[0].is_zero()


def test_stabilizer_is_trivial():
    rng = random.Random(9)
    assert stabilizer_solve(Z0(0, 2)).trivial
    for _ in range(100):
        assert stabilizer_solve(random_sym_point(rng)).trivial
    for _ in range(30):
        p = random_fiber_point(rng)
        assert in_fiber_D(p) and stabilizer_solve(p).trivial


# -- trivialization chain ----------------------------------------------------------------------

def test_chain_identities_hold():
    rep = verify_trivialization_chain()
    assert rep.passed, [c for c in rep.checks if not c.passed]
    assert len(rep.checks) == 6


@pytest.mark.parametrize("cid", sorted(chain_mutations()))
def test_each_seeded_mutation_is_caught(cid):
    rep = verify_trivialization_chain(chain_mutations()[cid])
    assert not rep[cid].passed and rep[cid].detail


def test_dropped_shift_in_phi_is_caught_with_both_sides():
    def bad_phi(z):
        z1, z2, z3, z4, z5 = z
        return [z2, z1, z3 - z1 * z2, z4 + 2 * z2 * z3 - 2 * z1 * z5, z2 * z2 - 2 * z5]

    c = verify_trivialization_chain(replace(DEFAULT_MAPS, phi=bad_phi))["phi-straightens-a"]
    assert not c.passed and "lhs" in c.detail and "rhs" in c.detail


def test_pi_is_not_invariant_under_b():
    assert pi_center_invariant().passed
    c = pi_center_invariant(b_zero=False)
    assert not c.passed and c.detail == "coordinate 2: lhs b*z11 + z12 vs rhs z12"


def test_bezout_straightening():
    w = Poly.vars(1)[0]
    f, g = -(w * w + 1), -2 * w
    ph, ps, mp = bezout_trivialize(f, g)
    assert ph == Poly.const(1, -1) and ps == w / 2
    assert ph * f + ps * g == Poly.const(1, 1)
    assert poly_matrix_det(bezout_matrix(f, g, ph, ps)) == Poly.const(1, 1)
    t = Poly.vars(4)[0]
    assert conjugation_shift(mp, f, g) == PolyMap([Poly(4), t, Poly(4)], 4)


def test_literal_matrix_does_not_straighten():
    w = Poly.vars(1)[0]
    f, g = -(w * w + 1), -2 * w
    ph, ps, _ = bezout_trivialize(f, g)
    shift = conjugation_shift(bezout_literal_map(f, g, ph, ps), f, g)
    t, z1 = Poly.vars(4)[:2]
    assert shift[1] == t * (z1 ** 4 + 6 * z1 ** 2 + 1)


def test_bezout_rejects_common_roots():
    w = Poly.vars(1)[0]
    with pytest.raises(ValueError):
        bezout_trivialize(w * w - 1, w - 1)


@given(st.lists(rats, min_size=1, max_size=3), st.lists(rats, min_size=1, max_size=3))
@settings(max_examples=40)
def test_bezout_map_straightens_any_coprime_pair(fc, gc):
    w = Poly.vars(1)[0]
    f = Poly.from_coeffs(fc) * w + 1
    g = Poly.from_coeffs(gc) * w * w + w + 2
    try:
        ph, ps, mp = bezout_trivialize(f, g)
    except ValueError:
        return
    t = Poly.vars(4)[0]
    assert conjugation_shift(mp, f, g) == PolyMap([Poly(4), t, Poly(4)], 4)


# -- consistency of the d5 fields with the group --------------------------------------

def test_field_of_x1_flows_to_group_element():
    from jalg.siegel.counterexample import flow_matches_group
    d5 = catalog_make("d5")
    rng = random.Random(3)
    for _ in range(10):
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        assert flow_matches_group(d5, a, b, c)


def test_fields_of_the_fiber_realization_are_tangent_to_the_fiber():
    d5 = catalog_make("d5")
    real = realization_for(d5)
    for k in range(d5.dim):
        f = field_of(real, d5, d5.e(k))
        assert field_eval(f, real.base_point)[0] == 0
    f1, f2 = (field_of(real, d5, d5.e(x)) for x in ("zeta2", "xi32p"))
    assert field_bracket(f1, f2) == field_of(real, d5, d5.vec(xi32=2)).scale(FIELD_BRACKET_SIGN)
