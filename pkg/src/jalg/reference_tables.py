"""Bracket tables typed in independently of the catalog constructors.

Each table maps ordered label pairs to ``{label: coefficient}``; any pair of
the compared labels that is absent must bracket to zero.
"""

from __future__ import annotations

from itertools import combinations, product

from .lie import LieAlgebra

__all__ = ["ball_reference", "lieball_reference", "b2_on_b3_reference", "table_mismatches",
           "B2_LABELS", "B3_LABELS", "b2_b3_pairs"]

B3_LABELS = ("alpha3", "xi31", "xi32", "xi31p", "xi32p", "zeta3")
B2_LABELS = ("alpha2", "xi21", "xi21p", "zeta2")


def ball_reference(n: int) -> dict:
    t = {("alpha", "zeta"): {"zeta": -2}}
    for k in range(1, n):
        t[(f"xi{k}", f"xi{k}p")] = {"zeta": 1}
        t[("alpha", f"xi{k}")] = {f"xi{k}": -1}
        t[("alpha", f"xi{k}p")] = {f"xi{k}p": -1}
    return t


def lieball_reference(n: int) -> dict:
    t = {("delta", "zeta"): {"zeta": -1}, ("delta", "eta"): {"eta": -1},
         ("alpha", "zeta"): {"zeta": -1}, ("alpha", "eta"): {"eta": 1}}
    for k in range(1, n - 1):
        t[(f"xi{k}", f"xi{k}p")] = {"zeta": 1}
        t[("eta", f"xi{k}p")] = {f"xi{k}": 2}
        t[("delta", f"xi{k}")] = {f"xi{k}": -1}
        t[("alpha", f"xi{k}p")] = {f"xi{k}p": -1}
    return t


def b2_on_b3_reference() -> dict:
    return {
        ("alpha2", "xi32"): {"xi32": 1},
        ("alpha2", "xi32p"): {"xi32p": -1},
        ("xi21", "xi31p"): {"xi32": -1},
        ("xi21", "xi32p"): {"xi31": -1},
        ("xi21p", "xi31"): {"xi32": 1},
        ("xi21p", "xi32p"): {"xi31p": -1},
        ("zeta2", "xi32p"): {"xi32": 2},
    }


def table_mismatches(alg: LieAlgebra, expected: dict, pairs=None) -> list:
    """Pairs whose bracket differs from ``expected``; default pairs are all label pairs."""
    if pairs is None:
        pairs = combinations(alg.labels, 2)
    norm = {}
    for (x, y), rhs in expected.items():
        norm[(x, y)] = alg.vec(rhs)
        norm[(y, x)] = tuple(-c for c in alg.vec(rhs))
    zero = alg.vec({})
    bad = []
    for x, y in pairs:
        got = alg.bracket(alg.e(x), alg.e(y))
        want = norm.get((x, y), zero)
        if got != want:
            bad.append((x, y, alg.format_vector(got), alg.format_vector(want)))
    return bad


def b2_b3_pairs():
    return list(product(B2_LABELS, B3_LABELS))
