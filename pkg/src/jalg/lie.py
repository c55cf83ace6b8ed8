"""Finite-dimensional real Lie algebras given by structure constants.

Elements are coordinate tuples in the algebra's fixed basis. Subspaces are
:class:`~jalg.exact.Subspace` objects in the same coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact import Matrix, Subspace, as_scalar, format_scalar, nullspace, unit_vector

__all__ = ["LieAlgebra", "JacobiDefect", "bracket", "jacobi_defect", "is_subalgebra",
           "is_ideal", "is_abelian", "lie_generate", "normalizer", "centralizer",
           "nilpotency_class", "lower_central_series", "derived_subspace",
           "subalgebra_as_algebra", "is_homomorphism", "ad_matrix"]


@dataclass(frozen=True)
class JacobiDefect:
    i: int
    j: int
    k: int
    value: tuple

    def describe(self, alg: "LieAlgebra") -> str:
        a, b, c = (alg.labels[x] for x in (self.i, self.j, self.k))
        return f"[[{a},{b}],{c}] + cyclic = {alg.format_vector(self.value)}"


class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c(i,j,k) e_k`` stored for ``i < j``.

    The Jacobi identity is checked on construction unless ``check=False``
    (used to build deliberately broken tables for mutation tests).
    """

    def __init__(self, labels: Sequence[str], brackets: Mapping, name: str = "",
                 check: bool = True):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate basis labels")
        self.labels = labels
        self.name = name
        self.dim = len(labels)
        self._index = {lab: k for k, lab in enumerate(labels)}
        table = {}
        for (i, j), rhs in brackets.items():
            i, j = self._idx(i), self._idx(j)
            sign = 1
            if i == j:
                if any(rhs.values()):
                    raise ValueError(f"[{labels[i]},{labels[i]}] must vanish")
                continue
            if i > j:
                i, j, sign = j, i, -1
            entry = {}
            for k, c in rhs.items():
                c = as_scalar(c) * sign
                if c:
                    entry[self._idx(k)] = c
            if (i, j) in table and table[(i, j)] != entry:
                raise ValueError(f"conflicting entries for [{labels[i]},{labels[j]}]")
            if entry:
                table[(i, j)] = entry
        self._table = table
        if check:
            defect = jacobi_defect(self)
            if defect is not None:
                raise ValueError(f"Jacobi identity fails: {defect.describe(self)}")

    def _idx(self, key) -> int:
        if isinstance(key, int):
            if not 0 <= key < len(self.labels):
                raise IndexError(f"basis index {key} out of range")
            return key
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"unknown basis label {key!r}") from None

    def index(self, label: str) -> int:
        return self._idx(label)

    def basis_bracket(self, i: int, j: int) -> dict:
        """Sparse ``[e_i, e_j]`` as ``{k: coefficient}``."""
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def structure_constant(self, i, j, k):
        return self.basis_bracket(self._idx(i), self._idx(j)).get(self._idx(k), Fraction(0))

    def table(self) -> dict:
        """Nonzero entries ``{(i, j): {k: c}}`` with ``i < j``."""
        return {key: dict(v) for key, v in self._table.items()}

    def e(self, label) -> tuple:
        return unit_vector(self.dim, self._idx(label))

    def vec(self, coeffs: Mapping | None = None, **kw) -> tuple:
        """Vector from ``{label: coefficient}`` (or keyword arguments)."""
        out = [Fraction(0)] * self.dim
        for lab, c in {**(coeffs or {}), **kw}.items():
            out[self._idx(lab)] += as_scalar(c)
        return tuple(out)

    def span(self, vectors: Iterable) -> Subspace:
        return Subspace(list(vectors), self.dim)

    def span_labels(self, *labels) -> Subspace:
        return Subspace([self.e(lab) for lab in labels], self.dim)

    def bracket(self, x, y) -> tuple:
        return bracket(self, x, y)

    def format_vector(self, v) -> str:
        parts = []
        for lab, c in zip(self.labels, v):
            if not c:
                continue
            cs = format_scalar(c) if not hasattr(c, "format") else f"({c.format()})"
            parts.append(lab if c == 1 else f"-{lab}" if c == -1 else f"{cs}*{lab}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def with_entry(self, i, j, rhs: Mapping, check: bool = False) -> "LieAlgebra":
        """Copy with the bracket ``[e_i, e_j]`` replaced (for mutation tests)."""
        i, j = self._idx(i), self._idx(j)
        data = {(a, b): dict(v) for (a, b), v in self._table.items()}
        if i > j:
            i, j = j, i
            rhs = {k: -as_scalar(c) for k, c in rhs.items()}
        data[(i, j)] = {self._idx(k): c for k, c in rhs.items()}
        return LieAlgebra(self.labels, data, name=self.name, check=check)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.labels == other.labels and self._table == other._table

    def __hash__(self):
        return hash((self.labels, tuple(sorted((k, tuple(sorted(v.items())))
                                               for k, v in self._table.items()))))

    def __repr__(self):
        return f"LieAlgebra({self.name or '?'}, dim={self.dim})"


def bracket(alg: LieAlgebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of the structure constants.

    Works for any coefficient type supporting ``+`` and ``*`` (including
    :class:`~jalg.exact.Poly`), which lets identities with symbolic
    coefficients be checked exactly.
    """
    if len(x) != alg.dim or len(y) != alg.dim:
        raise ValueError(f"vectors must have length {alg.dim}")
    out = [Fraction(0)] * alg.dim
    xs = [(i, a) for i, a in enumerate(x) if a]
    ys = [(j, b) for j, b in enumerate(y) if b]
    for i, a in xs:
        for j, b in ys:
            for k, c in alg.basis_bracket(i, j).items():
                out[k] = out[k] + a * b * c
    return tuple(out)


def _sparse_bracket(alg, u: dict, v: dict) -> dict:
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            for k, c in alg.basis_bracket(i, j).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: c for k, c in out.items() if c}


def jacobi_defect(alg: LieAlgebra) -> JacobiDefect | None:
    """First basis triple ``i < j < k`` violating Jacobi, or None."""
    n = alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            ij = alg.basis_bracket(i, j)
            for k in range(j + 1, n):
                total = {}
                for part in (_sparse_bracket(alg, ij, {k: 1}),
                             _sparse_bracket(alg, alg.basis_bracket(j, k), {i: 1}),
                             _sparse_bracket(alg, alg.basis_bracket(k, i), {j: 1})):
                    for m, c in part.items():
                        total[m] = total.get(m, 0) + c
                if any(total.values()):
                    vec = tuple(as_scalar(total.get(m, 0)) for m in range(n))
                    return JacobiDefect(i, j, k, vec)
    return None


def is_subalgebra(alg: LieAlgebra, s: Subspace) -> bool:
    b = s.basis
    return all(s.contains(bracket(alg, b[p], b[q]))
               for p in range(len(b)) for q in range(p + 1, len(b)))


def is_ideal(alg: LieAlgebra, s: Subspace, within: Subspace | None = None) -> bool:
    """``[within, s] ⊆ s`` (``within`` defaults to the whole algebra)."""
    dom = within.basis if within is not None else [alg.e(k) for k in range(alg.dim)]
    return all(s.contains(bracket(alg, x, y)) for x in dom for y in s.basis)


def is_abelian(alg: LieAlgebra, s: Subspace) -> bool:
    b = s.basis
    return all(not any(bracket(alg, b[p], b[q]))
               for p in range(len(b)) for q in range(p + 1, len(b)))


def derived_subspace(alg: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of ``[a, b]``."""
    return Subspace([bracket(alg, x, y) for x in a.basis for y in b.basis], alg.dim)


def lie_generate(alg: LieAlgebra, gens) -> Subspace:
    """Smallest subalgebra containing ``gens`` (a Subspace or vectors)."""
    cur = gens if isinstance(gens, Subspace) else Subspace(list(gens), alg.dim)
    while True:
        b = cur.basis
        new = cur.extend(*(bracket(alg, b[p], b[q])
                           for p in range(len(b)) for q in range(p + 1, len(b))))
        if new.dim == cur.dim:
            return cur
        cur = new


def _domain(alg, within):
    return within.basis if within is not None else tuple(alg.e(k) for k in range(alg.dim))


def normalizer(alg: LieAlgebra, s: Subspace, within: Subspace | None = None) -> Subspace:
    """``{y in within : [y, s] ⊆ s}``, solved as one exact kernel computation."""
    if not is_subalgebra(alg, s):
        raise ValueError("normalizer requires a subalgebra")
    dom = _domain(alg, within)
    ann = s.annihilator().basis
    rows = []
    for q in ann:
        for v in s.basis:
            images = [bracket(alg, w, v) for w in dom]
            rows.append([sum((qa * ia for qa, ia in zip(q, img) if qa and ia), Fraction(0))
                         for img in images])
    return _combine_kernel(alg, rows, dom)


def centralizer(alg: LieAlgebra, s: Subspace, within: Subspace | None = None) -> Subspace:
    """``{y in within : [y, s] = 0}``."""
    dom = _domain(alg, within)
    rows = []
    for v in s.basis:
        images = [bracket(alg, w, v) for w in dom]
        for k in range(alg.dim):
            rows.append([img[k] for img in images])
    return _combine_kernel(alg, rows, dom)


def _combine_kernel(alg, rows, dom) -> Subspace:
    if not dom:
        return Subspace.zero(alg.dim)
    if not rows:
        return Subspace(list(dom), alg.dim)
    ker = nullspace(Matrix(rows, len(dom)))
    vecs = []
    for c in ker.basis:
        v = [Fraction(0)] * alg.dim
        for coef, w in zip(c, dom):
            if coef:
                for k, x in enumerate(w):
                    if x:
                        v[k] += coef * x
        vecs.append(tuple(v))
    return Subspace(vecs, alg.dim)


def lower_central_series(alg: LieAlgebra, s: Subspace | None = None) -> list:
    """``[g, [g, ... g]]`` terms until they stabilize (``s`` defaults to the algebra)."""
    g = s if s is not None else Subspace.full(alg.dim)
    series = [g]
    while True:
        nxt = derived_subspace(alg, g, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def nilpotency_class(alg: LieAlgebra, s: Subspace | None = None) -> int | None:
    """Number of nonzero lower-central-series terms, or None if not nilpotent.

    ``s`` restricts the computation to a subalgebra.
    """
    series = lower_central_series(alg, s)
    if series[-1].dim != 0:
        return None
    return len(series) - 1


def subalgebra_as_algebra(alg: LieAlgebra, s: Subspace, labels: Sequence[str] | None = None,
                          name: str = "") -> LieAlgebra:
    """The subalgebra ``s`` as a LieAlgebra on its canonical basis."""
    if not is_subalgebra(alg, s):
        raise ValueError("not a subalgebra")
    b = s.basis
    labels = labels or [f"s{k + 1}" for k in range(len(b))]
    table = {}
    for p in range(len(b)):
        for q in range(p + 1, len(b)):
            coords = s.coordinates(bracket(alg, b[p], b[q]))
            table[(p, q)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebra(labels, table, name=name)


def ad_matrix(alg: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``ad(x)`` acting on column vectors."""
    return Matrix.from_columns([bracket(alg, x, alg.e(k)) for k in range(alg.dim)])


def is_homomorphism(phi: Matrix, source: LieAlgebra, target: LieAlgebra) -> bool:
    """``phi [x, y] = [phi x, phi y]`` on basis pairs (``phi`` acts on columns)."""
    cols = [phi.col(k) for k in range(source.dim)]
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            lhs = phi.apply(bracket(source, source.e(i), source.e(j)))
            if lhs != bracket(target, cols[i], cols[j]):
                return False
    return True
