import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jalg.catalog import catalog_make
from jalg.exact import Subspace
from jalg.lie import is_abelian, is_subalgebra, lie_generate
from jalg.siegel.ball_examples import bhat3_subspace
from jalg.siegel.counterexample import n_gamma
from jalg.totally_real import (complete, complete_ball, complete_greedy, complete_lie_ball,
                               is_isotropic, is_totally_real, lieball_xi1p_obstruction,
                               omega_complement, random_ball_seed, stein_decide)

rats = st.fractions(min_value=-6, max_value=6, max_denominator=3)


def test_totally_real_examples():
    l3, b2, d5 = catalog_make("lieball", 3), catalog_make("ball", 2), catalog_make("d5")
    assert is_totally_real(l3, [l3.e("xi1p")])
    assert not is_totally_real(b2, [b2.e("xi1"), b2.e("xi1p")])
    assert b2.span(b2.e("xi1"), b2.e("xi1p")).map(b2.J) == b2.span_labels("xi1", "xi1p")
    assert is_totally_real(d5, n_gamma(d5))


@given(st.lists(rats, min_size=6, max_size=6))
def test_totally_real_agrees_with_intersection(coords):
    b3 = catalog_make("ball", 3)
    v = tuple(coords)
    s = Subspace([v, b3.e("zeta")], b3.dim)
    js = s.map(b3.J)
    assert is_totally_real(b3, s) == ((s & js).dim == 0)


def test_ball_completion_examples():
    b2, b3 = catalog_make("ball", 2), catalog_make("ball", 3)
    r = complete_ball(b2, [])
    assert r.completed and r.result == b2.span_labels("xi1", "zeta")
    r = complete_ball(b3, [b3.e("zeta")])
    assert r.completed and r.result == b3.span_labels("zeta", "xi1", "xi2")
    hs = bhat3_subspace(b3)
    r = complete_ball(b3, hs)
    assert r.completed and r.result == hs and r.trace == []


def test_ball_completion_needs_the_complement_fallback():
    b3 = catalog_make("ball", 3)
    v = b3.vec(xi1=1, xi2=1, xi1p=1, xi2p=1)
    r = complete_ball(b3, [v])
    assert r.completed
    assert any(step.rule == "lagrangian-complement" for step in r.trace)
    assert is_abelian(b3.alg, r.result)


@pytest.mark.parametrize("n", range(2, 7))
def test_ball_completion_sweep(n):
    a = catalog_make("ball", n)
    rng = random.Random(f"sweep:{n}")
    for k in range(200):
        abelian = k % 2 == 0
        s = random_ball_seed(a, rng, abelian)
        assert is_subalgebra(a.alg, s) and is_totally_real(a, s)
        r = complete_ball(a, s)
        assert r.completed, r.reason
        out = r.result
        assert out.dim == n and s <= out
        assert is_subalgebra(a.alg, out) and is_totally_real(a, out)
        if abelian:
            assert is_abelian(a.alg, out)


@pytest.mark.parametrize("n", range(2, 6))
def test_completion_is_idempotent(n):
    a = catalog_make("ball", n)
    rng = random.Random(n)
    for _ in range(10):
        first = complete_ball(a, random_ball_seed(a, rng, rng.random() < 0.5)).result
        again = complete_ball(a, first)
        assert again.result == first and again.trace == []


def test_ball_completion_rejects_bad_input():
    b2 = catalog_make("ball", 2)
    with pytest.raises(ValueError):
        complete_ball(b2, [b2.e("xi1"), b2.e("xi1p"), b2.e("zeta")])
    with pytest.raises(ValueError):
        complete_ball(b2, [b2.e("alpha")])
    with pytest.raises(ValueError):
        complete_ball(catalog_make("lieball", 3), [])


def test_omega_complement_and_isotropy():
    b3 = catalog_make("ball", 3)
    s = b3.span_labels("xi1")
    comp = omega_complement(b3, s, b3.nilradical)
    assert comp == b3.span_labels("xi1", "xi2", "xi2p", "zeta")
    assert is_isotropic(b3, comp & b3.span_labels("xi1", "xi2", "zeta"))


def test_lieball_completion_traces():
    l3 = catalog_make("lieball", 3)
    r = complete_lie_ball(l3, [l3.e("eta")])
    assert r.completed and r.result == l3.span_labels("eta", "zeta", "xi1")
    assert [s.rule for s in r.trace] == ["normalize-eta", "add-zeta", "add-xi1"]
    x = l3.vec(xi1p=1, eta=1)
    r = complete_lie_ball(l3, [x])
    assert r.completed and r.result == l3.span(x, l3.e("zeta"), l3.e("xi1"))
    r = complete_lie_ball(l3, [l3.e("xi1p")])
    assert r.status == "not-applicable" and r.result is None


@pytest.mark.parametrize("n", range(3, 7))
def test_lieball_completion_from_eta_reaches_full_dimension(n):
    a = catalog_make("lieball", n)
    r = complete_lie_ball(a, [a.e("eta")])
    assert r.completed and r.result.dim == n


@given(rats, rats, rats, rats.filter(lambda d: d != 0))
@settings(max_examples=50)
def test_xi1p_obstruction(a_, b_, c_, d_):
    l3 = catalog_make("lieball", 3)
    x = l3.vec(xi1=a_, xi1p=b_, zeta=c_, eta=d_)
    r = lieball_xi1p_obstruction(l3, x)
    assert r["has_zeta"] and r["has_xi1"] and not r["totally_real"]


def test_stein_decisions():
    b3, l3 = catalog_make("ball", 3), catalog_make("lieball", 3)
    assert stein_decide(b3, bhat3_subspace(b3)).verdict == "stein"
    assert stein_decide(l3, [l3.e("xi1p")]).verdict == "stein"
    v = stein_decide(l3, [l3.e("xi1"), l3.e("xi1p")], generate=True)
    assert v.verdict == "not-stein" and v.reasons == ["thm-main"]
    with pytest.raises(ValueError):
        stein_decide(l3, [l3.e("xi1"), l3.e("xi1p")])


def test_stein_depends_only_on_the_span():
    l3 = catalog_make("lieball", 3)
    rng = random.Random(5)
    s = l3.span_labels("eta", "zeta", "xi1")
    want = stein_decide(l3, s).verdict
    for _ in range(10):
        b = s.basis
        mixed = [tuple(sum(rng.randint(-3, 3) * v[k] for v in b) + b[i][k] * 7
                       for k in range(l3.dim)) for i in range(len(b))]
        assert Subspace(mixed, l3.dim) == s
        assert stein_decide(l3, mixed).verdict == want


def test_stein_on_d5_is_advisory():
    d5 = catalog_make("d5")
    v = stein_decide(d5, n_gamma(d5), samples=5)
    assert v.verdict == "advisory" and v.reasons == ["inconclusive"]
    v = stein_decide(d5, d5.span_labels("zeta3", "zeta2"), samples=2)
    assert v.verdict == "advisory" and v.reasons == ["prop-suff-holds"]
    v = stein_decide(d5, d5.span_labels("xi32", "xi32p", "zeta3"), samples=2)
    assert v.reasons == ["prop-nec-violated"]


def test_greedy_and_dispatch():
    d5 = catalog_make("d5")
    assert not complete_greedy(d5, n_gamma(d5)).completed
    b2 = catalog_make("ball", 2)
    assert complete(b2, []).completed
    assert complete(b2, [], "greedy").completed
    with pytest.raises(ValueError):
        complete(b2, [], "nope")


def test_generated_algebra_of_random_vectors_completes():
    b4 = catalog_make("ball", 4)
    rng = random.Random(11)
    done = 0
    for _ in range(60):
        vs = [tuple(rng.randint(-2, 2) * c for c in b4.e(k))
              for k in rng.sample(range(1, b4.dim), 2)]
        s = lie_generate(b4.alg, vs)
        if s.dim and is_totally_real(b4, s):
            assert complete_ball(b4, s).completed
            done += 1
    assert done > 5
