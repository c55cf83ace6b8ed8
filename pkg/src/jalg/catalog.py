"""Normal j-algebras: a solvable Lie algebra with complex structure J and form λ.

Catalog constructors build the unit-ball algebras ``b_n``, the Lie-ball
algebras ``l_n``, the 12-dimensional Siegel algebra ``s_3`` of symmetric
3x3 matrices (from its matrix realization), and its 10-dimensional
J-invariant subalgebra ``d5 = b_3 + b_2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .exact import (Matrix, Subspace, as_scalar, format_scalar, nullspace, span_intersect,
                    unit_vector)
from .lie import LieAlgebra, bracket, is_abelian, is_ideal, jacobi_defect, nilpotency_class

__all__ = ["NormalJAlgebra", "AxiomCheck", "AxiomReport", "catalog_make", "check_axioms",
           "omega", "omega_form", "b_form", "maximal_totally_real_dim", "siegel_matrix_basis",
           "siegel_j", "KINDS", "parse_catalog_spec"]

KINDS = ("ball", "lieball", "siegel3", "d5", "custom")


@dataclass(frozen=True)
class NormalJAlgebra:
    name: str
    kind: str
    n: int | None
    alg: LieAlgebra
    J: Matrix
    lam: tuple
    nilradical: Subspace
    abelian: Subspace

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def labels(self):
        return self.alg.labels

    def j(self, v) -> tuple:
        return self.J.apply(v)

    def vec(self, coeffs: Mapping | None = None, **kw) -> tuple:
        return self.alg.vec(coeffs, **kw)

    def e(self, label) -> tuple:
        return self.alg.e(label)

    def span(self, *vectors) -> Subspace:
        return Subspace(list(vectors), self.dim)

    def span_labels(self, *labels) -> Subspace:
        return self.alg.span_labels(*labels)

    def lam_of(self, v):
        return as_scalar(sum((a * b for a, b in zip(self.lam, v) if a and b), Fraction(0)))

    def __repr__(self):
        return f"NormalJAlgebra({self.name}, kind={self.kind}, dim={self.dim})"


def omega(a: NormalJAlgebra, x, y):
    """``λ([x, y])``."""
    return a.lam_of(bracket(a.alg, x, y))


def omega_form(a: NormalJAlgebra) -> Matrix:
    """Gram matrix of ω in the basis of the algebra (antisymmetric)."""
    n = a.dim
    return Matrix([[omega(a, a.e(i), a.e(j)) for j in range(n)] for i in range(n)], n)


def b_form(a: NormalJAlgebra) -> Matrix:
    """Gram matrix of ``B(x, y) = λ([Jx, y])``."""
    n = a.dim
    jcols = [a.j(a.e(i)) for i in range(n)]
    return Matrix([[a.lam_of(bracket(a.alg, jcols[i], a.e(k))) for k in range(n)]
                   for i in range(n)], n)


def maximal_totally_real_dim(a: NormalJAlgebra) -> int:
    """Complex dimension of the domain, half the real dimension of the algebra."""
    return a.dim // 2


# -- axiom checking --------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class AxiomReport:
    algebra: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __iter__(self):
        return iter(self.checks)

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def add(self, name, passed, witness=""):
        self.checks.append(AxiomCheck(name, bool(passed), "" if passed else witness))

    def format(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            if c.witness:
                line += f"  [{c.witness}]"
            lines.append(line)
        lines.append(f"{self.algebra}: {'all axioms hold' if self.passed else 'AXIOMS FAIL'}")
        return "\n".join(lines)


def _first_pair(n, pred):
    for i in range(n):
        for j in range(i + 1, n):
            if not pred(i, j):
                return i, j
    return None


def _nonpositive_vector(a: NormalJAlgebra, gram: Matrix):
    """A vector ``x`` with ``B(x, x) <= 0``, or None if B is positive definite.

    Basis vectors are tried first (nilradical before the rest); otherwise a
    symmetric elimination produces the witness from the first bad pivot.
    """
    n = a.dim
    order = [k for k in range(n) if a.nilradical.contains(a.e(k))]
    order += [k for k in range(n) if k not in order]
    for k in order:
        if gram[k, k] <= 0:
            return a.e(k)
    m = [list(r) for r in gram.entries]
    ell = [list(unit_vector(n, i)) for i in range(n)]  # rows of L, with L B L^t diagonal
    for k in range(n):
        piv = m[k][k]
        if piv <= 0:
            return tuple(ell[k])
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
                for c in range(n):
                    m[c][i] -= f * m[c][k]
                ell[i] = [x - f * y for x, y in zip(ell[i], ell[k])]
    return None


def check_axioms(a: NormalJAlgebra) -> AxiomReport:
    """Check every normal j-algebra axiom; failures carry a witness."""
    alg, n, fmt = a.alg, a.dim, a.alg.format_vector
    rep = AxiomReport(a.name)
    lab = alg.labels

    rep.add("even-dimension", n % 2 == 0, f"dim = {n}")
    defect = jacobi_defect(alg)
    rep.add("jacobi", defect is None, defect.describe(alg) if defect else "")

    jj = a.J @ a.J
    bad = next(((i, j) for i in range(n) for j in range(n)
                if jj[i, j] != (-1 if i == j else 0)), None)
    rep.add("J-squared", bad is None,
            f"J^2 e_{lab[bad[1]]} = {fmt(jj.col(bad[1]))}" if bad else "")

    E = [a.e(i) for i in range(n)]
    JE = [a.j(v) for v in E]

    def integrable(i, j):
        lhs = bracket(alg, JE[i], JE[j])
        rhs = [x + y + z for x, y, z in zip(bracket(alg, E[i], E[j]),
                                            a.j(bracket(alg, JE[i], E[j])),
                                            a.j(bracket(alg, E[i], JE[j])))]
        return lhs == tuple(rhs)

    p = _first_pair(n, integrable)
    rep.add("J-integrable", p is None, f"x={lab[p[0]]}, y={lab[p[1]]}" if p else "")

    p = _first_pair(n, lambda i, j: omega(a, JE[i], JE[j]) == omega(a, E[i], E[j]))
    rep.add("lambda-J-invariant", p is None,
            f"x={lab[p[0]]}, y={lab[p[1]]}: λ[Jx,Jy]={format_scalar(omega(a, JE[p[0]], JE[p[1]]))}, "
            f"λ[x,y]={format_scalar(omega(a, E[p[0]], E[p[1]]))}" if p else "")

    gram = b_form(a)
    p = _first_pair(n, lambda i, j: gram[i, j] == gram[j, i])
    rep.add("B-symmetric", p is None, f"x={lab[p[0]]}, y={lab[p[1]]}" if p else "")
    positive = all(m > 0 for m in gram.leading_minors())
    w = None if positive else _nonpositive_vector(a, gram)
    if w is not None:
        witness = f"x={fmt(w)}, λ([Jx,x])={format_scalar(a.lam_of(bracket(alg, a.j(w), w)))}"
    else:
        witness = "leading minors " + ", ".join(map(format_scalar, gram.leading_minors()))
    rep.add("B-positive", positive, witness)

    nil, ab = a.nilradical, a.abelian
    rep.add("nilradical-ideal", is_ideal(alg, nil), "[alg, n] not inside n")
    rep.add("nilradical-nilpotent", nilpotency_class(alg, nil) is not None,
            "lower central series of n stabilizes above zero")
    rep.add("abelian-part-abelian", is_abelian(alg, ab), "[a, a] != 0")
    rep.add("direct-sum", ab.dim + nil.dim == n and span_intersect(ab, nil).dim == 0,
            f"dim a + dim n = {ab.dim + nil.dim}, dim alg = {n}")

    if a.kind == "ball":
        zeta = a.e("zeta")
        lz = a.lam_of(zeta)
        nb = nil.basis

        def heis(p_, q_):
            x, y = nb[p_], nb[q_]
            return lz != 0 and bracket(alg, x, y) == tuple(omega(a, x, y) / lz * c for c in zeta)

        p = _first_pair(len(nb), heis)
        rep.add("heisenberg", p is None,
                f"x={fmt(nb[p[0]])}, y={fmt(nb[p[1]])}" if p else "")
    return rep


# -- constructors ----------------------------------------------------------

def _j_matrix(labels: Sequence[str], images: Mapping[str, Mapping]) -> Matrix:
    index = {lab: k for k, lab in enumerate(labels)}
    cols = []
    for lab in labels:
        v = [Fraction(0)] * len(labels)
        for k, c in images[lab].items():
            v[index[k]] += as_scalar(c)
        cols.append(v)
    return Matrix.from_columns(cols)


def _assemble(name, kind, n, alg, jimages, lam, nil_labels) -> NormalJAlgebra:
    J = _j_matrix(alg.labels, jimages)
    lam = alg.vec(lam)
    nil = alg.span_labels(*nil_labels)
    ab = alg.span_labels(*(x for x in alg.labels if x not in nil_labels))
    a = NormalJAlgebra(name, kind, n, alg, J, lam, nil, ab)
    rep = check_axioms(a)
    if not rep.passed:
        raise ValueError(f"catalog algebra {name} violates the axioms:\n{rep.format()}")
    return a


def _ball(n: int) -> NormalJAlgebra:
    m = n - 1
    xi = [f"xi{k}" for k in range(1, m + 1)]
    xp = [f"xi{k}p" for k in range(1, m + 1)]
    labels = ["alpha", *xi, *xp, "zeta"]
    table = {("alpha", "zeta"): {"zeta": -2}}
    for x, y in zip(xi, xp):
        table[(x, y)] = {"zeta": 1}
        table[("alpha", x)] = {x: -1}
        table[("alpha", y)] = {y: -1}
    alg = LieAlgebra(labels, table, name=f"ball:{n}")
    jim = {"zeta": {"alpha": 1}, "alpha": {"zeta": -1}}
    for x, y in zip(xi, xp):
        jim[x] = {y: 1}
        jim[y] = {x: -1}
    return _assemble(f"ball:{n}", "ball", n, alg, jim, {"zeta": -1}, labels[1:])


def _lieball(n: int) -> NormalJAlgebra:
    m = n - 2
    xi = [f"xi{k}" for k in range(1, m + 1)]
    xp = [f"xi{k}p" for k in range(1, m + 1)]
    labels = ["delta", "alpha", *xi, *xp, "zeta", "eta"]
    table = {("delta", "zeta"): {"zeta": -1}, ("delta", "eta"): {"eta": -1},
             ("alpha", "zeta"): {"zeta": -1}, ("alpha", "eta"): {"eta": 1}}
    for x, y in zip(xi, xp):
        table[(x, y)] = {"zeta": 1}
        table[("eta", y)] = {x: 2}
        table[("delta", x)] = {x: -1}
        table[("alpha", y)] = {y: -1}
    alg = LieAlgebra(labels, table, name=f"lieball:{n}")
    half = Fraction(1, 2)
    jim = {"zeta": {"alpha": 1, "delta": 1}, "eta": {"delta": 1, "alpha": -1},
           "delta": {"zeta": -half, "eta": -half}, "alpha": {"zeta": -half, "eta": half}}
    for x, y in zip(xi, xp):
        jim[x] = {y: 1}
        jim[y] = {x: -1}
    return _assemble(f"lieball:{n}", "lieball", n, alg, jim, {"zeta": -1, "eta": -1},
                     labels[2:])


SIEGEL_LABELS = ("alpha3", "xi31", "xi32", "xi31p", "xi32p", "zeta3",
                 "alpha2", "xi21", "xi21p", "zeta2", "alpha1", "zeta1")
D5_LABELS = SIEGEL_LABELS[:10]


def _block(A: Matrix, B: Matrix) -> Matrix:
    rows = [list(A.row(i)) + list(B.row(i)) for i in range(3)]
    rows += [[0, 0, 0] + [-A[j, i] for j in range(3)] for i in range(3)]
    return Matrix(rows, 6)


def _unit(i: int, j: int) -> Matrix:
    return Matrix([[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(3)] for r in range(3)], 3)


@lru_cache(maxsize=None)
def siegel_matrix_basis() -> dict:
    """``{label: 6x6 matrix [[A, B], [0, -A^t]]}`` realizing ``s_3``."""
    Z, E = Matrix.zeros(3, 3), _unit
    return {
        "alpha3": _block(E(3, 3), Z), "xi31": _block(Z, E(1, 3) + E(3, 1)),
        "xi32": _block(Z, E(2, 3) + E(3, 2)), "xi31p": _block(E(3, 1), Z),
        "xi32p": _block(E(3, 2), Z), "zeta3": _block(Z, E(3, 3)).scale(-2),
        "alpha2": _block(E(2, 2), Z), "xi21": _block(Z, E(1, 2) + E(2, 1)),
        "xi21p": _block(E(2, 1), Z), "zeta2": _block(Z, E(2, 2)).scale(-2),
        "alpha1": _block(E(1, 1), Z), "zeta1": _block(Z, E(1, 1)).scale(-2),
    }


def _flat(m: Matrix) -> tuple:
    return tuple(x for r in m.entries for x in r)


def siegel_coordinates(m: Matrix) -> tuple:
    """Coordinates of a 6x6 matrix in the ``s_3`` basis (ValueError if outside)."""
    basis = siegel_matrix_basis()
    cols = [_flat(basis[lab]) for lab in SIEGEL_LABELS]
    target = _flat(m)
    ker = nullspace(Matrix.from_columns(cols + [tuple(-x for x in target)]))
    sol = next((v for v in ker.basis if v[-1]), None)
    if sol is None:
        raise ValueError("matrix is not in s_3")
    return tuple(x / sol[-1] for x in sol[:-1])


def siegel_j(m: Matrix) -> Matrix:
    """Complex structure on ``s_3``: ``[[A, B], ..] -> [[phi^-1(B), -(A + A^t)], ..]``."""
    A = Matrix([m.row(i)[:3] for i in range(3)], 3)
    B = Matrix([m.row(i)[3:] for i in range(3)], 3)
    lower = Matrix([[B[i, j] if i > j else B[i, i] / 2 if i == j else 0 for j in range(3)]
                    for i in range(3)], 3)
    return _block(lower, -(A + A.T))


def _commutator(x: Matrix, y: Matrix) -> Matrix:
    return x @ y - y @ x


@lru_cache(maxsize=None)
def _siegel3() -> NormalJAlgebra:
    basis = siegel_matrix_basis()
    labs = SIEGEL_LABELS
    table = {}
    for p, x in enumerate(labs):
        for q in range(p + 1, len(labs)):
            c = siegel_coordinates(_commutator(basis[x], basis[labs[q]]))
            if any(c):
                table[(p, q)] = {k: v for k, v in enumerate(c) if v}
    alg = LieAlgebra(labs, table, name="siegel:3")
    jim = {lab: dict(zip(labs, siegel_coordinates(siegel_j(basis[lab])))) for lab in labs}
    lam = {lab: sum(basis[lab][i, 3 + i] for i in range(3)) for lab in labs}
    nil = [x for x in labs if not x.startswith("alpha")]
    return _assemble("siegel:3", "siegel3", 3, alg, jim, lam, nil)


@lru_cache(maxsize=None)
def _d5() -> NormalJAlgebra:
    s = _siegel3()
    k = len(D5_LABELS)
    table = {(i, j): v for (i, j), v in s.alg.table().items() if i < k and j < k}
    if any(m >= k for v in table.values() for m in v):
        raise ValueError("d5 labels do not span a subalgebra")
    alg = LieAlgebra(D5_LABELS, table, name="d5")
    jim = {}
    for lab in D5_LABELS:
        col = s.j(s.e(lab))
        if any(col[k:]):
            raise ValueError("d5 is not J-invariant")
        jim[lab] = dict(zip(D5_LABELS, col[:k]))
    lam = dict(zip(D5_LABELS, s.lam[:k]))
    nil = [x for x in D5_LABELS if not x.startswith("alpha")]
    return _assemble("d5", "d5", None, alg, jim, lam, nil)


@lru_cache(maxsize=None)
def catalog_make(kind: str, n: int | None = None) -> NormalJAlgebra:
    """Catalog normal j-algebra; ``kind`` is ball, lieball, siegel3 or d5."""
    if kind == "ball":
        if not isinstance(n, int) or n < 2:
            raise ValueError("ball requires n >= 2")
        return _ball(n)
    if kind == "lieball":
        if not isinstance(n, int) or n < 3:
            raise ValueError("lieball requires n >= 3")
        return _lieball(n)
    if kind == "siegel3":
        if n not in (None, 3):
            raise ValueError("siegel3 is only available for n = 3")
        return _siegel3()
    if kind == "d5":
        if n is not None:
            raise ValueError("d5 takes no size parameter")
        return _d5()
    raise ValueError(f"unsupported catalog kind {kind!r}")


def parse_catalog_spec(text: str) -> NormalJAlgebra:
    """``ball:3``, ``lieball:4``, ``siegel:3`` or ``d5``."""
    name, _, arg = text.partition(":")
    if name == "d5" and not arg:
        return catalog_make("d5")
    kind = {"ball": "ball", "lieball": "lieball", "siegel": "siegel3", "siegel3": "siegel3"}.get(name)
    if kind is None or not arg.isdigit():
        raise ValueError(f"unknown catalog algebra {text!r}")
    return catalog_make(kind, int(arg))
