"""Every finite verification, as named checks collected into a deterministic report.

Check ids are ``<group>-<topic>``; groups are ``axioms``, ``ball``,
``ball-examples``, ``lieball``, ``stein``, ``siegel`` and ``counterexample``.
Each check gets its own generator seeded with ``"<seed>:<id>"``, so filtering
does not change the outcome of the checks that remain.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .catalog import catalog_make, check_axioms, omega, parse_catalog_spec
from .exact import Matrix, Poly, PolyMap
from .lie import bracket, centralizer, is_abelian, is_subalgebra, jacobi_defect, normalizer
from .reference_tables import (b2_b3_pairs, b2_on_b3_reference, ball_reference,
                               lieball_reference, table_mismatches)
from .siegel import ball_examples as bx
from .siegel import chain
from .siegel import counterexample as cx
from .siegel.fields import (FIELD_BRACKET_SIGN, field_of, j_from_realization, measure_bracket_sign,
                            orbit_totally_real_at, random_rational, realization_for,
                            sym3_realization)
from .siegel.group import (GroupElement5, Z0, apply_group, block_action, group_affine_map,
                           in_fiber_D, random_fiber_point, random_sym_point, stabilizer_solve)
from .totally_real import (complete_ball, complete_greedy, complete_lie_ball, is_totally_real,
                           lieball_xi1p_obstruction, random_ball_seed, stein_decide)

__all__ = ["CheckResult", "Report", "check_ids", "run_suite", "DEFAULT_SEED", "GROUPS"]

DEFAULT_SEED = 1
GROUPS = ("axioms", "ball", "ball-examples", "lieball", "stein", "siegel", "counterexample")


@dataclass(frozen=True)
class CheckResult:
    id: str
    passed: bool
    witness: str = ""


@dataclass
class Report:
    seed: int
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def format(self) -> str:
        lines = [f"CHECK {r.id} {'PASS' if r.passed else 'FAIL'}" for r in self.results]
        bad = [r for r in self.results if not r.passed]
        lines.append("")
        lines.append(f"summary: {len(self.results) - len(bad)}/{len(self.results)} checks passed "
                     f"(seed {self.seed})")
        for r in bad:
            lines.append(f"failed {r.id}: {r.witness}")
        return "\n".join(lines) + "\n"


def _verdict(ok: bool, witness: str = ""):
    return ok, "" if ok else witness


# -- axioms -------------------------------------------------------------------

def _axioms(spec):
    def run(rng):
        rep = check_axioms(parse_catalog_spec(spec))
        return _verdict(rep.passed, "; ".join(c.name for c in rep.failures()))
    return run


def _sign_mutations(spec):
    """Flip one structure-constant sign at a time; each flip must be detected."""
    def run(rng):
        a = parse_catalog_spec(spec)
        missed = []
        for (i, j), rhs in sorted(a.alg.table().items()):
            for k in sorted(rhs):
                new = dict(rhs)
                new[k] = -new[k]
                alg = a.alg.with_entry(i, j, new)
                if jacobi_defect(alg) is not None:
                    continue
                mutant = type(a)(a.name, a.kind, a.n, alg, a.J, a.lam, a.nilradical, a.abelian)
                if check_axioms(mutant).passed:
                    missed.append(f"[{a.labels[i]},{a.labels[j]}] coefficient of {a.labels[k]}")
        return _verdict(not missed, ", ".join(missed))
    return run


# -- ball -----------------------------------------------------------------------

def _ball_brackets(n):
    def run(rng):
        bad = table_mismatches(catalog_make("ball", n).alg, ball_reference(n))
        return _verdict(not bad, str(bad[:3]))
    return run


def _lieball_brackets(n):
    def run(rng):
        bad = table_mismatches(catalog_make("lieball", n).alg, lieball_reference(n))
        return _verdict(not bad, str(bad[:3]))
    return run


def _ball_heisenberg(n):
    def run(rng):
        a = catalog_make("ball", n)
        zeta = a.e("zeta")
        lz = a.lam_of(zeta)
        nil = [a.e(k) for k in range(a.dim) if a.nilradical.contains(a.e(k))]
        for x, y in combinations(nil, 2):
            want = tuple(omega(a, x, y) / lz * c for c in zeta)
            if bracket(a.alg, x, y) != want:
                return False, f"{a.alg.format_vector(x)}, {a.alg.format_vector(y)}"
        return True, ""
    return run


def _ball_completion(n, count):
    def run(rng):
        a = catalog_make("ball", n)
        for k in range(count):
            ab = k % 2 == 0
            s = random_ball_seed(a, rng, ab)
            r = complete_ball(a, s)
            ok = (r.completed and r.result.dim == n and s <= r.result
                  and is_subalgebra(a.alg, r.result) and is_totally_real(a, r.result)
                  and (not ab or is_abelian(a.alg, r.result)))
            if not ok:
                return False, f"seed {k}: {r.status} {r.reason}"
        return True, ""
    return run


def _ball_completion_examples(rng):
    b2, b3 = catalog_make("ball", 2), catalog_make("ball", 3)
    r2 = complete_ball(b2, [])
    r3 = complete_ball(b3, [b3.e("zeta")])
    hs = bx.bhat3_subspace(b3)
    rh = complete_ball(b3, hs)
    ok = (r2.completed and r2.result == b2.span_labels("xi1", "zeta")
          and r3.completed and r3.result == b3.span_labels("zeta", "xi1", "xi2")
          and rh.completed and rh.result == hs and not rh.trace)
    return _verdict(ok, f"{r2.status}/{r3.status}/{rh.status}")


def _ball_idempotent(rng):
    for n in range(2, 6):
        a = catalog_make("ball", n)
        r = complete_ball(a, random_ball_seed(a, rng, True))
        again = complete_ball(a, r.result)
        if not (again.completed and again.result == r.result and not again.trace):
            return False, f"ball:{n}"
    return True, ""


# -- ball examples ----------------------------------------------------------------

def _bhat3_fields(rng):
    b3 = catalog_make("ball", 3)
    real = realization_for(b3)
    got = [field_of(real, b3, v) for v in bx.bhat3_vectors(b3)]
    return _verdict(got == list(bx.bhat3_fields()), "fields differ from the algebra elements")


def _bhat3_orbits(rng):
    bad = bx.bhat3_orbits_check(rng, 100)
    return _verdict(not bad, f"{len(bad)} degenerate points")


def _gamma_group_law(rng):
    res = bx.gamma_b2_group_law_check(rng, 50)
    return _verdict(res.passed, f"{len(res.failures)} failures, det one: {res.det_one}")


def _gamma_zariski(rng):
    b2 = catalog_make("ball", 2)
    try:
        closure = bx.gamma_zariski_closure(b2)
    except ArithmeticError as exc:
        return False, str(exc)
    return _verdict(closure == b2.nilradical, f"closure has dimension {closure.dim}")


def _bhat3_bracket(rng):
    return _verdict(bx.bhat3_bracket_ok(), "[x1,x2] != 4 x3")


def _bhat3_stein(rng):
    b3 = catalog_make("ball", 3)
    v = stein_decide(b3, bx.bhat3_subspace(b3))
    return _verdict(v.verdict == "stein", v.format())


# -- lie ball -----------------------------------------------------------------------

def _lie_complete(start, expected):
    def run(rng):
        a = catalog_make("lieball", 3)
        s = [a.vec(start)]
        r = complete_lie_ball(a, s)
        want = a.span(*(a.vec(v) for v in expected))
        return _verdict(r.completed and r.result == want, f"{r.status}: {r.reason}")
    return run


def _lie_not_applicable(rng):
    a = catalog_make("lieball", 3)
    r = complete_lie_ball(a, [a.e("xi1p")])
    return _verdict(r.status == "not-applicable", r.status)


def _lie_obstruction(rng):
    a = catalog_make("lieball", 3)
    for k in range(50):
        d = random_rational(rng) or Fraction(1)
        x = a.vec(xi1=random_rational(rng), xi1p=random_rational(rng), zeta=random_rational(rng),
                  eta=d)
        r = lieball_xi1p_obstruction(a, x)
        if not (r["has_zeta"] and r["has_xi1"] and not r["totally_real"]):
            return False, f"sample {k}: {a.alg.format_vector(x)}"
    return True, ""


def _stein(spec, labels, want, generate=False):
    def run(rng):
        a = parse_catalog_spec(spec)
        v = stein_decide(a, [a.e(x) for x in labels], generate=generate)
        return _verdict(v.verdict == want, v.format())
    return run


# -- siegel -------------------------------------------------------------------------

def _b2_on_b3(spec):
    def run(rng):
        bad = table_mismatches(parse_catalog_spec(spec).alg, b2_on_b3_reference(), b2_b3_pairs())
        return _verdict(not bad, str(bad[:3]))
    return run


def _j_realization(spec):
    def run(rng):
        a = parse_catalog_spec(spec)
        return _verdict(j_from_realization(realization_for(a), a) == a.J,
                        "J differs from the realization")
    return run


def _field_sign(rng):
    a = parse_catalog_spec("siegel:3")
    s = measure_bracket_sign(realization_for(a), a)
    return _verdict(s == FIELD_BRACKET_SIGN, f"measured {s}")


def _rand_params(rng):
    return GroupElement5(random_rational(rng), random_rational(rng), random_rational(rng))


def _group_closure(rng):
    for _ in range(50):
        g, h = _rand_params(rng), _rand_params(rng)
        if g.matrix() @ h.matrix() != (g @ h).matrix():
            return False, f"{g} {h}"
        if GroupElement5.from_matrix(g.matrix() @ h.matrix()) != g @ h:
            return False, f"{g} {h}"
    return True, ""


def _group_unipotent(rng):
    for _ in range(50):
        g = _rand_params(rng)
        m = g.matrix()
        if not (m - Matrix.identity(6)).is_nilpotent():
            return False, str(g)
        if m.det() != 1 or group_affine_map(g).det() != 1:
            return False, f"determinant at {g}"
    return True, ""


def _group_block(rng):
    for _ in range(50):
        g, z = _rand_params(rng), random_sym_point(rng)
        if block_action(g.matrix(), z) != apply_group(g, z):
            return False, str(g)
    return True, ""


def _group_action_law(rng):
    for _ in range(30):
        g, h, z = _rand_params(rng), _rand_params(rng), random_sym_point(rng)
        if apply_group(g, apply_group(h, z)) != apply_group(g @ h, z):
            return False, f"{g} {h}"
    return True, ""


def _flow(rng):
    d5 = catalog_make("d5")
    for _ in range(20):
        a, b, c = (random_rational(rng) for _ in range(3))
        if not cx.flow_matches_group(d5, a, b, c):
            return False, f"({a}, {b}, {c})"
    return True, ""


def _freeness(rng):
    pts = [Z0(Fraction(1, 2), Fraction(3))] + [random_sym_point(rng) for _ in range(100)]
    for p in pts:
        res = stabilizer_solve(p)
        if not res.trivial:
            return False, res.description
    return True, ""


def _chain_check(cid):
    def run(rng):
        c = chain.verify_trivialization_chain()[cid]
        return c.passed, c.detail
    return run


def _chain_mutations(rng):
    missed = [cid for cid, maps in chain.chain_mutations().items()
              if chain.verify_trivialization_chain(maps)[cid].passed]
    return _verdict(not missed, ", ".join(missed))


def _bezout(rng):
    w = Poly.vars(1)[0]
    f, g = -(w * w + 1), -2 * w
    ph, ps, mp = chain.bezout_trivialize(f, g)
    one = Poly.const(1, 1)
    ok = (ph * f + ps * g == one and ph == Poly.const(1, -1) and ps == w * Fraction(1, 2)
          and ph.degree() < g.degree() and ps.degree() < f.degree()
          and chain.poly_matrix_det(chain.bezout_matrix(f, g, ph, ps)) == one)
    t = Poly.vars(4)[0]
    shift = chain.conjugation_shift(mp, f, g)
    ok = ok and shift == PolyMap([Poly(4), t, Poly(4)], 4)
    return _verdict(ok, f"phi={ph.format(['w'])} psi={ps.format(['w'])}")


def _bezout_literal(rng):
    """The matrix with rows (0, f, g), (0, -psi, phi) does not straighten the action."""
    w = Poly.vars(1)[0]
    f, g = -(w * w + 1), -2 * w
    ph, ps, _ = chain.bezout_trivialize(f, g)
    shift = chain.conjugation_shift(chain.bezout_literal_map(f, g, ph, ps), f, g)
    t, z1 = Poly.vars(4)[:2]
    return _verdict(shift[1] == t * (z1 ** 4 + 6 * z1 * z1 + 1),
                    f"shift {shift[1].format(['t', 'z1', 'z2', 'z3'])}")


# -- counterexample -----------------------------------------------------------------

def _d5():
    return catalog_make("d5")


def _cx_heisenberg(rng):
    d5 = _d5()
    x1, x2, x3 = cx.n_gamma_vectors(d5)
    zero = d5.vec({})
    ok = (bracket(d5.alg, x1, x2) == x3 and bracket(d5.alg, x1, x3) == zero
          and bracket(d5.alg, x2, x3) == zero)
    return _verdict(ok, d5.alg.format_vector(bracket(d5.alg, x1, x2)))


def _cx_totally_real(rng):
    d5 = _d5()
    ng = cx.n_gamma(d5)
    return _verdict(is_subalgebra(d5.alg, ng) and is_totally_real(d5, ng), "")


def _cx_centralizer(rng):
    d5 = _d5()
    cen = centralizer(d5.alg, cx.n_gamma(d5))
    for _ in range(20):
        tau = random_rational(rng)
        if not cen.contains(cx.y_tau(d5, tau)):
            return False, f"tau={tau}"
    return True, ""


def _cx_normalizer_ngamma(rng):
    d5 = _d5()
    n = normalizer(d5.alg, cx.n_gamma(d5), within=d5.nilradical)
    return _verdict(n == cx.displayed_normalizer(d5), f"dimension {n.dim}")


def _cx_normalizer(rng):
    d5 = _d5()
    shown = cx.displayed_normalizer(d5)
    if is_totally_real(d5, shown):
        return False, "displayed normalizer is totally real"
    for _ in range(20):
        tau = random_rational(rng)
        s = cx.n_gamma(d5).extend(cx.y_tau(d5, tau))
        if not (is_subalgebra(d5.alg, s) and is_totally_real(d5, s)):
            return False, f"extension by y_tau, tau={tau}"
        if normalizer(d5.alg, s, within=d5.nilradical) != shown:
            return False, f"tau={tau}"
    return True, ""


def _cx_lemma(rng):
    res = cx.lemma_symbolic_checks(_d5())
    bad = [k for k, v in res.items() if not v]
    return _verdict(not bad, ", ".join(bad))


def _cx_basis_ext(rng):
    ext = cx.basis_extensions(_d5())
    return _verdict(bool(ext) and all(t is not None for _, t in ext), str(ext))


def _cx_replay(rng):
    d5 = _d5()
    for k in range(50):
        y = cx.random_extension_vector(d5, rng, k % 2 == 0)
        r = cx.extension_obstruction(d5, y)
        if r["totally_real"] != (r["tau"] is not None):
            return False, f"sample {k}: {r}"
        if r["totally_real"] and r["normalizer_totally_real"]:
            return False, f"sample {k}: normalizer totally real"
    return True, ""


def _cx_z0(rng):
    d5 = _d5()
    for _ in range(20):
        tau, alpha = cx.random_tau_alpha(rng)
        if not in_fiber_D(Z0(tau, alpha)):
            return False, f"Z0({tau}, {alpha}) is outside the domain"
        if cx.z0_rank(d5, tau, alpha) >= 4:
            return False, f"independent at tau={tau}, alpha={alpha}"
    return True, ""


def _cx_fiber_orbits(rng):
    d5 = _d5()
    fields = cx.n_gamma_fields(d5)
    real = sym3_realization(fiber=True)
    for _ in range(100):
        p = random_fiber_point(rng)
        if not orbit_totally_real_at(fields, p):
            return False, real.format_point(p)
    return True, ""


def _cx_freeness_fiber(rng):
    for _ in range(100):
        res = stabilizer_solve(random_fiber_point(rng))
        if not res.trivial:
            return False, res.description
    return True, ""


def _cx_greedy(rng):
    d5 = _d5()
    r = complete_greedy(d5, cx.n_gamma(d5))
    return _verdict(not r.completed, "greedy search found a completion")


# -- registry -------------------------------------------------------------------------

def _registry() -> dict:
    reg = {}
    for n in range(2, 9):
        reg[f"axioms-ball-{n}"] = _axioms(f"ball:{n}")
    for n in range(3, 9):
        reg[f"axioms-lieball-{n}"] = _axioms(f"lieball:{n}")
    reg["axioms-siegel-3"] = _axioms("siegel:3")
    reg["axioms-d5"] = _axioms("d5")
    for spec in ("ball:3", "lieball:4", "siegel:3", "d5"):
        reg[f"axioms-sign-mutations-{spec.replace(':', '-')}"] = _sign_mutations(spec)

    for n in range(2, 9):
        reg[f"ball-brackets-{n}"] = _ball_brackets(n)
    for n in range(2, 7):
        reg[f"ball-heisenberg-{n}"] = _ball_heisenberg(n)
        reg[f"ball-completion-{n}"] = _ball_completion(n, 20)
    reg["ball-completion-examples"] = _ball_completion_examples
    reg["ball-completion-idempotent"] = _ball_idempotent

    reg["ball-examples-bhat3-bracket"] = _bhat3_bracket
    reg["ball-examples-bhat3-fields"] = _bhat3_fields
    reg["ball-examples-bhat3-orbits"] = _bhat3_orbits
    reg["ball-examples-gamma-group-law"] = _gamma_group_law
    reg["ball-examples-gamma-zariski"] = _gamma_zariski

    for n in range(3, 9):
        reg[f"lieball-brackets-{n}"] = _lieball_brackets(n)
    reg["lieball-complete-eta"] = _lie_complete({"eta": 1}, [{"eta": 1}, {"zeta": 1}, {"xi1": 1}])
    reg["lieball-complete-xi1p-eta"] = _lie_complete(
        {"xi1p": 1, "eta": 1}, [{"xi1p": 1, "eta": 1}, {"zeta": 1}, {"xi1": 1}])
    reg["lieball-xi1p-not-applicable"] = _lie_not_applicable
    reg["lieball-xi1p-obstruction"] = _lie_obstruction

    reg["stein-ball-heisenberg"] = _bhat3_stein
    reg["stein-lieball-xi1p"] = _stein("lieball:3", ["xi1p"], "stein")
    reg["stein-lieball-xi1-xi1p"] = _stein("lieball:3", ["xi1", "xi1p"], "not-stein", True)

    reg["siegel-b2-on-b3-brackets"] = _b2_on_b3("siegel:3")
    reg["siegel-b2-on-b3-brackets-d5"] = _b2_on_b3("d5")
    for spec in ("ball:3", "lieball:4", "siegel:3", "d5"):
        reg[f"siegel-j-realization-{spec.replace(':', '-')}"] = _j_realization(spec)
    reg["siegel-field-bracket-sign"] = _field_sign
    reg["siegel-group-closure"] = _group_closure
    reg["siegel-group-unipotent"] = _group_unipotent
    reg["siegel-group-block-action"] = _group_block
    reg["siegel-group-action-law"] = _group_action_law
    reg["siegel-flow-consistency"] = _flow
    reg["siegel-freeness"] = _freeness
    for cid in ("center-invariance", "induced-c2-action", "phi-straightens-a", "phi-biregular",
                "induced-b-action", "free-c-action-c3"):
        reg[f"siegel-chain-{cid}"] = _chain_check(cid)
    reg["siegel-chain-mutations"] = _chain_mutations
    reg["siegel-bezout"] = _bezout
    reg["siegel-bezout-literal-matrix"] = _bezout_literal

    reg["counterexample-heisenberg"] = _cx_heisenberg
    reg["counterexample-totally-real"] = _cx_totally_real
    reg["counterexample-centralizer"] = _cx_centralizer
    reg["counterexample-normalizer-n-gamma"] = _cx_normalizer_ngamma
    reg["counterexample-normalizer"] = _cx_normalizer
    reg["counterexample-lemma-identities"] = _cx_lemma
    reg["counterexample-basis-extensions"] = _cx_basis_ext
    reg["counterexample-extension-replay"] = _cx_replay
    reg["counterexample-z0"] = _cx_z0
    reg["counterexample-fiber-orbits"] = _cx_fiber_orbits
    reg["counterexample-fiber-freeness"] = _cx_freeness_fiber
    reg["counterexample-no-greedy-completion"] = _cx_greedy
    return reg


def check_ids() -> list:
    return sorted(_registry())


def _group_of(cid: str) -> str:
    return max((g for g in GROUPS if cid.startswith(g + "-")), key=len)


def run_suite(seed: int = DEFAULT_SEED, filter: str | None = None) -> Report:
    """Run the checks whose group or id starts with ``filter``; sorted by id."""
    reg = _registry()
    ids = sorted(reg)
    if filter:
        ids = [c for c in ids if c.startswith(filter) or _group_of(c) == filter]
        if not ids:
            raise ValueError(f"no checks match {filter!r}")
    results = []
    for cid in ids:
        rng = random.Random(f"{seed}:{cid}")
        try:
            ok, witness = reg[cid](rng)
        except Exception as exc:  # a crashing check is a failing check
            ok, witness = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(cid, bool(ok), witness))
    return Report(seed, results)
