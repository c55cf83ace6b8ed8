"""Totally real subalgebras: the ``V ∩ JV = 0`` test, completion, Stein verdicts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import NormalJAlgebra, maximal_totally_real_dim, omega
from .exact import Matrix, Subspace, nullspace
from .lie import is_subalgebra, lie_generate, normalizer

__all__ = ["is_totally_real", "TraceStep", "CompletionResult", "complete_ball",
           "complete_lie_ball", "complete_greedy", "complete", "SteinVerdict", "stein_decide",
           "is_isotropic", "omega_complement", "lieball_xi1p_obstruction",
           "random_ball_seed"]


def _as_subspace(a: NormalJAlgebra, s) -> Subspace:
    if isinstance(s, Subspace):
        if s.ambient != a.dim:
            raise ValueError(f"subspace lives in dimension {s.ambient}, algebra has {a.dim}")
        return s
    return Subspace(list(s), a.dim)


def is_totally_real(a: NormalJAlgebra, s) -> bool:
    """``span(s) ∩ J span(s) = 0``, tested as ``rank [s | Js] = 2 dim s``."""
    s = _as_subspace(a, s)
    return s.extend(*(a.j(v) for v in s.basis)).dim == 2 * s.dim


def is_isotropic(a: NormalJAlgebra, s) -> bool:
    s = _as_subspace(a, s)
    b = s.basis
    return all(omega(a, b[i], b[j]) == 0 for i in range(len(b)) for j in range(i + 1, len(b)))


def omega_complement(a: NormalJAlgebra, s: Subspace, within: Subspace) -> Subspace:
    """``{y in within : ω(y, s) = 0}``."""
    dom = within.basis
    if not s.basis:
        return within
    rows = [[omega(a, w, v) for w in dom] for v in s.basis]
    ker = nullspace(Matrix(rows, len(dom)))
    vecs = [tuple(sum((c * w[k] for c, w in zip(coef, dom) if c), Fraction(0))
                  for k in range(a.dim)) for coef in ker.basis]
    return Subspace(vecs, a.dim)


@dataclass(frozen=True)
class TraceStep:
    vector: tuple
    rule: str


@dataclass
class CompletionResult:
    status: str  # completed | not-applicable | failed
    result: Subspace | None = None
    trace: list = field(default_factory=list)
    reason: str = ""

    @property
    def completed(self) -> bool:
        return self.status == "completed"

    def format(self, a: NormalJAlgebra) -> str:
        lines = [f"status {self.status}"]
        if self.reason:
            lines.append(f"reason {self.reason}")
        for step in self.trace:
            lines.append(f"step {step.rule}: {a.alg.format_vector(step.vector)}")
        if self.result is not None:
            for v in self.result.basis:
                lines.append(f"vector = {a.alg.format_vector(v)}")
        return "\n".join(lines)


def _require_nilpotent_tr_subalgebra(a: NormalJAlgebra, s: Subspace):
    if not s <= a.nilradical:
        raise ValueError("subspace is not contained in the nilradical")
    if not is_subalgebra(a.alg, s):
        raise ValueError("subspace is not a subalgebra")
    if not is_totally_real(a, s):
        raise ValueError("subspace is not totally real")


def _finish(a: NormalJAlgebra, start: Subspace, cur: Subspace, trace: list) -> CompletionResult:
    target = maximal_totally_real_dim(a)
    problems = []
    if cur.dim != target:
        problems.append(f"stopped at dimension {cur.dim} < {target}")
    if not start <= cur:
        problems.append("result does not contain the input")
    if not is_subalgebra(a.alg, cur):
        problems.append("result is not a subalgebra")
    if not is_totally_real(a, cur):
        problems.append("result is not totally real")
    if problems:
        return CompletionResult("failed", cur, trace, "; ".join(problems))
    return CompletionResult("completed", cur, trace)


def complete_ball(a: NormalJAlgebra, s) -> CompletionResult:
    """Extend a totally real subalgebra of the ball nilradical to a maximal one.

    Isotropic input is extended inside the ω-orthogonal complement, so the
    output stays abelian. Otherwise ``zeta`` lies in ``s`` and any span
    containing it is a subalgebra; basis vectors are added greedily.
    """
    if a.kind != "ball":
        raise ValueError("complete_ball needs a ball algebra")
    s = _as_subspace(a, s)
    _require_nilpotent_tr_subalgebra(a, s)
    target = maximal_totally_real_dim(a)
    nil_basis = [a.e(k) for k in range(a.dim) if a.nilradical.contains(a.e(k))]
    cur, trace = s, []

    def grow(candidates, rule, keep):
        nonlocal cur
        progress = True
        while progress and cur.dim < target:
            progress = False
            for c in candidates(cur):
                if cur.contains(c) or not keep(cur, c):
                    continue
                nxt = cur.extend(c)
                if is_totally_real(a, nxt):
                    cur = nxt
                    trace.append(TraceStep(c, rule))
                    progress = True
                    break

    if is_isotropic(a, s):
        def orthogonal(cur_, c):
            return all(omega(a, c, v) == 0 for v in cur_.basis)
        grow(lambda cur_: nil_basis, "lagrangian", orthogonal)
        # a basis vector may fail to exist (e.g. for skew input directions);
        # the ω-complement's canonical basis always contains a good candidate
        grow(lambda cur_: omega_complement(a, cur_, a.nilradical).basis,
             "lagrangian-complement", orthogonal)
    else:
        zeta = a.e("zeta")
        if not s.contains(zeta):
            raise ValueError("nonabelian subalgebra of the ball nilradical must contain zeta")
        grow(lambda cur_: nil_basis, "totally-real", lambda cur_, c: True)
    return _finish(a, s, cur, trace)


def _lieball_parts(a: NormalJAlgebra):
    m = a.n - 2
    xi = [a.e(f"xi{k}") for k in range(1, m + 1)]
    xp = [a.e(f"xi{k}p") for k in range(1, m + 1)]
    zeta, eta = a.e("zeta"), a.e("eta")
    return xi, xp, zeta, eta, Subspace(xi + xp + [zeta], a.dim)


def complete_lie_ball(a: NormalJAlgebra, s) -> CompletionResult:
    """Completion for Lie-ball nilradicals whose subalgebra leaves ``n_{n-1}``.

    Subalgebras inside ``n_{n-1} = span(xi, xi', zeta)`` are reported as
    not-applicable: they need not lie in any maximal totally real subalgebra.
    """
    if a.kind != "lieball":
        raise ValueError("complete_lie_ball needs a lieball algebra")
    s = _as_subspace(a, s)
    _require_nilpotent_tr_subalgebra(a, s)
    xi, _, zeta, eta, n_low = _lieball_parts(a)
    if s <= n_low:
        return CompletionResult("not-applicable", None, [],
                                "subalgebra lies in the ideal spanned by xi, xi', zeta")
    eta_idx = a.alg.index("eta")
    x0 = next(v for v in s.basis if v[eta_idx])
    x0 = tuple(c / x0[eta_idx] for c in x0)
    trace = [TraceStep(x0, "normalize-eta")]
    cur = s
    if not cur.contains(zeta):
        cur = cur.extend(zeta)
        trace.append(TraceStep(zeta, "add-zeta"))
        if not (is_subalgebra(a.alg, cur) and is_totally_real(a, cur)):
            return CompletionResult("failed", cur, trace, "adding zeta broke the invariants")
    proj_idx = [a.alg.index(f"xi{k}") for k in range(1, len(xi) + 1)] + [a.alg.index("zeta")]
    target = maximal_totally_real_dim(a)
    while cur.dim < target:
        low = cur & n_low
        proj = Subspace([tuple(v[k] if k in proj_idx else Fraction(0) for k in range(a.dim))
                         for v in low.basis], a.dim)
        k0 = next((k for k, x in enumerate(xi) if not proj.contains(x)), None)
        if k0 is None:
            return CompletionResult("failed", cur, trace, "projection already contains every xi")
        cur = cur.extend(xi[k0])
        trace.append(TraceStep(xi[k0], f"add-xi{k0 + 1}"))
        if not (is_subalgebra(a.alg, cur) and is_totally_real(a, cur)):
            return CompletionResult("failed", cur, trace, f"adding xi{k0 + 1} broke the invariants")
    return _finish(a, s, cur, trace)


def random_ball_seed(a: NormalJAlgebra, rng: random.Random, abelian: bool) -> Subspace:
    """Random totally real subalgebra of the ball nilradical.

    Abelian seeds are isotropic spans (any isotropic subspace of the
    nilradical is an abelian subalgebra); the others contain ``zeta`` and
    hence are closed under the bracket.
    """
    if a.kind != "ball":
        raise ValueError("needs a ball algebra")
    nil = a.nilradical.basis
    target = maximal_totally_real_dim(a)
    size = rng.randint(0 if abelian else 1, target)
    cur = Subspace([], a.dim) if abelian else Subspace([a.e("zeta")], a.dim)
    for _ in range(20 * target):
        if cur.dim >= size:
            break
        coefs = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) if rng.random() < 0.6
                 else Fraction(0) for _ in nil]
        v = tuple(sum((c * b[k] for c, b in zip(coefs, nil) if c), Fraction(0))
                  for k in range(a.dim))
        if not any(v) or cur.contains(v):
            continue
        if abelian and any(omega(a, v, w) for w in cur.basis):
            continue
        nxt = cur.extend(v)
        if is_totally_real(a, nxt):
            cur = nxt
    return cur


def lieball_xi1p_obstruction(a: NormalJAlgebra, x) -> dict:
    """What ``span(xi1', x)`` generates when ``x`` has a nonzero ``eta`` part.

    Such a generated algebra contains ``[x, xi1']``, which has a ``xi1``
    component, so it holds both ``zeta`` and ``xi1`` and is not totally real.
    """
    if a.kind != "lieball":
        raise ValueError("needs a lieball algebra")
    gen = lie_generate(a.alg, [a.e("xi1p"), tuple(x)])
    return {"generated": gen, "has_zeta": gen.contains(a.e("zeta")),
            "has_xi1": gen.contains(a.e("xi1")), "totally_real": is_totally_real(a, gen)}


def complete_greedy(a: NormalJAlgebra, s) -> CompletionResult:
    """Kind-agnostic search: extend by normalizer directions, then basis vectors.

    Each candidate ``c`` is accepted when the subalgebra generated by
    ``s + c`` is totally real and not too large. Failure is only evidence,
    not a proof that no completion exists.
    """
    s = _as_subspace(a, s)
    _require_nilpotent_tr_subalgebra(a, s)
    target = maximal_totally_real_dim(a)
    nil_basis = [a.e(k) for k in range(a.dim) if a.nilradical.contains(a.e(k))]
    cur, trace = s, []
    while cur.dim < target:
        norm = normalizer(a.alg, cur, within=a.nilradical)
        candidates = [v for v in norm.basis if not cur.contains(v)] + nil_basis
        for c in candidates:
            if cur.contains(c):
                continue
            nxt = lie_generate(a.alg, cur.extend(c))
            if nxt.dim <= target and is_totally_real(a, nxt):
                trace.append(TraceStep(c, "normalizer" if norm.contains(c) else "generate"))
                cur = nxt
                break
        else:
            return CompletionResult("failed", cur, trace,
                                    "no single-vector extension stays totally real")
    return _finish(a, s, cur, trace)


def complete(a: NormalJAlgebra, s, mode: str | None = None) -> CompletionResult:
    mode = mode or {"ball": "ball", "lieball": "lieball"}.get(a.kind, "greedy")
    if mode == "ball":
        return complete_ball(a, s)
    if mode == "lieball":
        return complete_lie_ball(a, s)
    if mode == "greedy":
        return complete_greedy(a, s)
    raise ValueError(f"unknown completion mode {mode!r}")


@dataclass
class SteinVerdict:
    verdict: str  # stein | not-stein | advisory
    reasons: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def format(self) -> str:
        head = {"stein": "STEIN", "not-stein": "NOT-STEIN", "advisory": "ADVISORY"}[self.verdict]
        lines = [f"{head} ({', '.join(self.reasons)})"]
        lines += [f"note {n}" for n in self.notes]
        return "\n".join(lines)


def stein_decide(a: NormalJAlgebra, s, points=None, samples: int = 20,
                 seed: int = 1, generate: bool = False) -> SteinVerdict:
    """Decide whether ``D / Gamma`` is Stein from the Lie algebra of ``Gamma``.

    Ball and Lie-ball: Stein exactly when ``s`` is totally real. Other
    kinds get an advisory answer: a successful completion is sufficient,
    a non-totally-real orbit (at ``points`` or sampled domain points) rules
    Steinness out, and otherwise the result is inconclusive. With
    ``generate`` a non-closed span is replaced by the subalgebra it generates.
    """
    s = _as_subspace(a, s)
    pre = []
    if not is_subalgebra(a.alg, s):
        if not generate:
            raise ValueError("subspace is not a subalgebra")
        s = lie_generate(a.alg, s)
        pre.append(f"replaced by the generated subalgebra of dimension {s.dim}")
    if not s <= a.nilradical:
        raise ValueError("subspace is not contained in the nilradical")
    tr = is_totally_real(a, s)
    if a.kind in ("ball", "lieball"):
        return SteinVerdict("stein" if tr else "not-stein", ["thm-main"],
                            pre + [f"totally real: {'yes' if tr else 'no'}"])
    if not tr:
        return SteinVerdict("advisory", ["prop-nec-violated"],
                            pre + ["subalgebra itself is not totally real"])
    res = complete_greedy(a, s)
    if res.completed:
        return SteinVerdict("advisory", ["prop-suff-holds"],
                            pre + [f"completion found in {len(res.trace)} steps"])
    from .siegel.fields import realization_for, subspace_fields, orbit_totally_real_at
    real = realization_for(a)
    if real is None:
        return SteinVerdict("advisory", ["inconclusive"], pre + ["no realization for this kind"])
    fields = subspace_fields(real, a, s)
    rng = random.Random(f"{seed}:stein")
    pts = list(points or []) + [real.base_point] + [real.sample(rng) for _ in range(samples)]
    for p in pts:
        if not orbit_totally_real_at(fields, p):
            return SteinVerdict("advisory", ["prop-nec-violated"],
                                pre + [f"orbit not totally real at {real.format_point(p)}"])
    return SteinVerdict("advisory", ["inconclusive"],
                        pre + [f"{len(pts)} sampled orbits totally real; no completion found"])
