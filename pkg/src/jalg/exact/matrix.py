"""Dense exact matrices over Q or Q(i), and subspaces in canonical RREF."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import as_scalar, format_scalar

__all__ = ["Matrix", "Subspace", "rref", "rank", "nullspace", "span_intersect",
           "vec_add", "vec_sub", "vec_scale", "vec_combine", "zero_vector", "unit_vector",
           "is_zero_vector"]

Vector = tuple


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def vec_add(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v) -> Vector:
    return tuple(c * a for a in v)


def vec_combine(coeffs, vectors, n: int | None = None) -> Vector:
    """Return ``sum(c * v)`` over matching pairs."""
    vectors = list(vectors)
    if n is None:
        n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                out[i] += c * a
    return tuple(out)


def is_zero_vector(v) -> bool:
    return not any(v)


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns ``(rows, pivots)`` with zero rows dropped; pivots are the
    leftmost nonzero column of each row, normalized to 1.
    """
    mat = [list(map(as_scalar, r)) for r in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        piv = mat[r][c]
        if piv != 1:
            inv = 1 / piv
            mat[r] = [as_scalar(x * inv) for x in mat[r]]
        row_r = mat[r]
        for i in range(len(mat)):
            if i != r:
                f = mat[i][c]
                if f:
                    mat[i] = [as_scalar(a - f * b) if b else a for a, b in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in mat[:r]], pivots


class Matrix:
    """Immutable dense matrix; entries are Fractions or Gaussians."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        ents = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        if cols is None:
            cols = len(ents[0]) if ents else 0
        if any(len(row) != cols for row in ents):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "rows", len(ents))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        columns = list(columns)
        if not columns:
            return cls([[] for _ in range(nrows or 0)], 0)
        return cls(list(zip(*columns)), len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    @property
    def shape(self):
        return self.rows, self.cols

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.cols)], self.rows)

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([vec_add(a, b) for a, b in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([vec_sub(a, b) for a, b in zip(self.entries, other.entries)], self.cols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix([vec_scale(c, r) for r in self.entries], self.cols)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.col(j) for j in range(other.cols)]
            return Matrix([[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
                            for c in cols] for r in self.entries], other.cols)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(as_scalar(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)))
                     for r in self.entries)

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols or k < 0:
            raise ValueError("square matrix and nonnegative exponent required")
        out = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def is_nilpotent(self) -> bool:
        return self.rows == self.cols and (self ** self.rows).is_zero()

    def rank(self) -> int:
        return rank(self)

    def nullspace(self) -> "Subspace":
        return nullspace(self)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            piv = m[c][c]
            d = d * piv
            for i in range(c + 1, n):
                f = m[i][c] / piv
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return as_scalar(d)

    def leading_minors(self) -> list:
        return [Matrix([r[:k] for r in self.entries[:k]], k).det()
                for k in range(1, self.rows + 1)]

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.entries)
        return f"Matrix[{self.rows}x{self.cols}]({body})"


def rank(m: Matrix) -> int:
    """Rank over the entry field by exact elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(rref(m.entries, m.cols)[1])


def nullspace(m: Matrix) -> "Subspace":
    """Right kernel ``{x : m x = 0}`` as a canonical subspace."""
    n = m.cols
    rows, pivots = rref(m.entries, n) if m.rows else ([], [])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = as_scalar(-row[f])
        basis.append(tuple(v))
    return Subspace(basis, n)


class Subspace:
    """A linear subspace of ``K^n`` stored by its reduced row echelon basis.

    Two subspaces are equal exactly when their canonical bases agree.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, vectors: Iterable[Sequence], ambient: int):
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        rows, pivots = rref(vecs, ambient) if vecs else ([], [])
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", tuple(rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls([], n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls([unit_vector(n, i) for i in range(n)], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise ValueError(f"ambient dimension mismatch: {self.ambient} vs {other.ambient}")

    def coordinates(self, v: Sequence):
        """Coordinates of ``v`` in the canonical basis, or None if ``v`` is outside."""
        if not self.contains(v):
            return None
        return tuple(as_scalar(v[p]) for p in self.pivots)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise ValueError("dimension mismatch")
        if not self.basis:
            return not any(v)
        coords = [v[p] for p in self.pivots]
        return vec_combine(coords, self.basis, self.ambient) == tuple(v)

    __contains__ = contains

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.basis + other.basis, self.ambient)

    def __and__(self, other: "Subspace") -> "Subspace":
        return span_intersect(self, other)

    def extend(self, *vectors) -> "Subspace":
        return Subspace(self.basis + tuple(tuple(v) for v in vectors), self.ambient)

    def map(self, m: Matrix) -> "Subspace":
        """Image under a square matrix acting on column vectors."""
        return Subspace([m.apply(v) for v in self.basis], m.rows)

    def matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient)

    def annihilator(self) -> "Subspace":
        """Covectors vanishing on the subspace (as vectors w.r.t. the dot product)."""
        if not self.basis:
            return Subspace.full(self.ambient)
        return nullspace(self.matrix())

    def __repr__(self):
        vs = ", ".join("(" + " ".join(format_scalar(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(dim={self.dim} in {self.ambient}: {vs})"


def span_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces via the kernel of ``[A^T | -B^T]``."""
    a._check(b)
    n = a.ambient
    if not a.basis or not b.basis:
        return Subspace.zero(n)
    cols = list(a.basis) + [tuple(-x for x in v) for v in b.basis]
    ker = nullspace(Matrix.from_columns(cols))
    k = a.dim
    return Subspace([vec_combine(c[:k], a.basis, n) for c in ker.basis], n)
