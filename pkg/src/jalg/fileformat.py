"""Plain-text formats for algebras, subspaces and sample points.

Algebra::

    algebra ball:2
    kind ball
    n 2
    dim 4
    basis alpha xi1 xi1p zeta
    bracket alpha xi1 = -xi1
    J alpha = -zeta
    lambda = -zeta
    nilradical = xi1 xi1p zeta
    abelian = alpha
    end

Only ``bracket i j`` with ``i`` before ``j`` in the basis is allowed; missing
pairs are zero. ``kind``, ``n`` and ``abelian`` are optional. Subspaces are
``subspace <name> in <algebra>`` followed by ``vector = ...`` lines, points are
``point <name> dim <N>`` followed by ``z <k> = <re> <im>`` lines. ``#`` starts
a comment. Printing a parsed file gives back the canonical text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .catalog import KINDS, NormalJAlgebra, catalog_make
from .exact import Gaussian, Matrix, Subspace, as_scalar, imag_part, real_part
from .lie import LieAlgebra

__all__ = ["ParseError", "parse_algebra", "format_algebra", "parse_subspace", "format_subspace",
           "parse_points", "format_points", "SubspaceFile", "PointFile", "parse_combination",
           "format_combination", "build_algebra"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.message, self.line = message, line
        super().__init__(f"line {line}: {message}" if line else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _rational(tok: str, no: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {tok!r}", no) from None


def _fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_TERM = re.compile(r"\s*([+-])?\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*\s*)?([A-Za-z_][A-Za-z0-9_]*)\s*")


def parse_combination(text: str, labels, no: int | None = None) -> tuple:
    """``2*a - b + 1/2*c`` as a coefficient tuple over ``labels``."""
    labels = list(labels)
    out = [Fraction(0)] * len(labels)
    s = text.strip()
    if s == "0":
        return tuple(out)
    pos, first = 0, True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and m.group(1) is None):
            raise ParseError(f"cannot parse linear combination near {s[pos:]!r}", no)
        sign = -1 if m.group(1) == "-" else 1
        coef = _rational(m.group(2), no) if m.group(2) else Fraction(1)
        lab = m.group(3)
        if lab not in labels:
            raise ParseError(f"unknown label {lab!r}", no)
        out[labels.index(lab)] += sign * coef
        pos, first = m.end(), False
    if first:
        raise ParseError("empty linear combination", no)
    return tuple(out)


def format_combination(v, labels) -> str:
    parts = []
    for lab, c in zip(labels, v):
        c = Fraction(c)
        if not c:
            continue
        mag = "" if abs(c) == 1 else _fmt_rat(abs(c)) + "*"
        sign = "-" if c < 0 else "+"
        parts.append((sign, mag + lab))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])


def _real_vector(v, what: str):
    if any(isinstance(c, Gaussian) and imag_part(c) for c in v):
        raise ValueError(f"{what} has non-real coefficients")
    return tuple(Fraction(real_part(as_scalar(c))) for c in v)


# -- algebras ---------------------------------------------------------------

def build_algebra(name, kind, n, labels, table, jcols, lam, nil_labels, ab_labels=None):
    """Assemble a :class:`NormalJAlgebra` without rejecting axiom failures."""
    alg = LieAlgebra(labels, table, name=name, check=False)
    d = len(labels)
    J = Matrix.from_columns([jcols.get(lab, (Fraction(0),) * d) for lab in labels])
    if ab_labels is None:
        ab_labels = [x for x in labels if x not in nil_labels]
    return NormalJAlgebra(name, kind, n, alg, J, tuple(lam), alg.span_labels(*nil_labels),
                          alg.span_labels(*ab_labels))


def _label_subset(sub: Subspace, labels):
    """Labels whose unit vectors span ``sub``, or None."""
    d = len(labels)
    units = [lab for k, lab in enumerate(labels)
             if sub.contains(tuple(Fraction(int(i == k)) for i in range(d)))]
    return units if len(units) == sub.dim else None


def format_algebra(a: NormalJAlgebra) -> str:
    labels = a.labels
    out = [f"algebra {a.name}"]
    if a.kind and a.kind != "custom":
        out.append(f"kind {a.kind}")
    if a.n is not None:
        out.append(f"n {a.n}")
    out += [f"dim {a.dim}", "basis " + " ".join(labels)]
    for (i, j), rhs in sorted(a.alg.table().items()):
        v = [Fraction(0)] * a.dim
        for k, c in rhs.items():
            v[k] = c
        vec = _real_vector(v, "bracket")
        if any(vec):
            out.append(f"bracket {labels[i]} {labels[j]} = {format_combination(vec, labels)}")
    for k, lab in enumerate(labels):
        col = _real_vector(a.J.col(k), "J")
        if any(col):
            out.append(f"J {lab} = {format_combination(col, labels)}")
    out.append(f"lambda = {format_combination(_real_vector(a.lam, 'lambda'), labels)}")
    nil = _label_subset(a.nilradical, labels)
    ab = _label_subset(a.abelian, labels)
    if nil is None or ab is None:
        raise ValueError("nilradical and abelian part must be spanned by basis labels")
    out.append("nilradical = " + " ".join(nil))
    if ab != [x for x in labels if x not in nil]:
        out.append("abelian = " + " ".join(ab))
    out.append("end")
    return "\n".join(out) + "\n"


def _check_kind_labels(kind, n, labels):
    """A declared catalog kind must come with that catalog's basis labels."""
    try:
        ref = catalog_make(kind, n)
    except ValueError as exc:
        raise ParseError(f"kind {kind}: {exc}") from None
    if list(ref.labels) != list(labels):
        raise ParseError(f"kind {kind} expects basis {' '.join(ref.labels)}")


def parse_algebra(text: str) -> NormalJAlgebra:
    it = iter(_lines(text))
    head = next(it, None)
    if head is None:
        raise ParseError("empty algebra file")
    no, line = head
    parts = line.split()
    if parts[0] != "algebra" or len(parts) != 2:
        raise ParseError("expected 'algebra <name>'", no)
    name = parts[1]
    kind, n, dim, labels = "custom", None, None, None
    table, jcols, lam, nil, ab = {}, {}, None, None, None
    ended, seen = False, set()
    for no, line in it:
        if ended:
            raise ParseError("text after 'end'", no)
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "end":
            ended = True
            continue
        key = line.partition("=")[0].strip() if word in ("lambda", "nilradical", "abelian") else word
        if key in ("kind", "n", "dim", "basis", "lambda", "nilradical", "abelian"):
            if key in seen:
                raise ParseError(f"duplicate '{key}'", no)
            seen.add(key)
        if word == "kind":
            if rest not in KINDS:
                raise ParseError(f"unknown kind {rest!r}", no)
            kind = rest
        elif word == "n":
            if not rest.isdigit():
                raise ParseError("n must be a positive integer", no)
            n = int(rest)
        elif word == "dim":
            if not rest.isdigit() or int(rest) < 1:
                raise ParseError("dim must be a positive integer", no)
            dim = int(rest)
        elif word == "basis":
            labels = rest.split()
            if dim is None:
                raise ParseError("'dim' must come before 'basis'", no)
            if len(labels) != dim:
                raise ParseError(f"basis has {len(labels)} labels, dim is {dim}", no)
            if len(set(labels)) != dim or not all(re.fullmatch(r"[A-Za-z_]\w*", x) for x in labels):
                raise ParseError("basis labels must be distinct identifiers", no)
        else:
            if labels is None:
                raise ParseError(f"'{word}' before 'basis'", no)
            lhs, eq, rhs = line.partition("=")
            if not eq:
                raise ParseError(f"unknown directive {word!r}", no)
            lhs = lhs.split()
            if not lhs:
                raise ParseError("missing left-hand side", no)
            if lhs[0] == "bracket":
                if len(lhs) != 3:
                    raise ParseError("expected 'bracket <i> <j> = ...'", no)
                for lab in lhs[1:]:
                    if lab not in labels:
                        raise ParseError(f"unknown label {lab!r}", no)
                i, j = labels.index(lhs[1]), labels.index(lhs[2])
                if i >= j:
                    raise ParseError("bracket pairs must follow basis order (i before j)", no)
                if (i, j) in table:
                    raise ParseError(f"duplicate bracket {lhs[1]} {lhs[2]}", no)
                v = parse_combination(rhs, labels, no)
                table[(i, j)] = {k: c for k, c in enumerate(v) if c}
            elif lhs[0] == "J":
                if len(lhs) != 2 or lhs[1] not in labels:
                    raise ParseError("expected 'J <label> = ...' with a known label", no)
                if lhs[1] in jcols:
                    raise ParseError(f"duplicate J {lhs[1]}", no)
                jcols[lhs[1]] = parse_combination(rhs, labels, no)
            elif lhs == ["lambda"]:
                lam = parse_combination(rhs, labels, no)
            elif lhs in (["nilradical"], ["abelian"]):
                labs = rhs.split()
                for lab in labs:
                    if lab not in labels:
                        raise ParseError(f"unknown label {lab!r}", no)
                if lhs[0] == "nilradical":
                    nil = labs
                else:
                    ab = labs
            else:
                raise ParseError(f"unknown directive {word!r}", no)
    if not ended:
        raise ParseError("missing 'end'")
    for what, val in (("basis", labels), ("lambda", lam), ("nilradical", nil)):
        if val is None:
            raise ParseError(f"missing '{what}'")
    if kind != "custom":
        _check_kind_labels(kind, n, labels)
    return build_algebra(name, kind, n, labels, table, jcols, lam, nil, ab)


# -- subspaces ----------------------------------------------------------------

@dataclass
class SubspaceFile:
    name: str
    algebra: str
    vectors: list

    def subspace(self, dim: int) -> Subspace:
        return Subspace(self.vectors, dim)


def parse_subspace(text: str, a: NormalJAlgebra) -> SubspaceFile:
    it = iter(_lines(text))
    head = next(it, None)
    if head is None:
        raise ParseError("empty subspace file")
    no, line = head
    parts = line.split()
    if len(parts) != 4 or parts[0] != "subspace" or parts[2] != "in":
        raise ParseError("expected 'subspace <name> in <algebra>'", no)
    if parts[3] != a.name:
        raise ParseError(f"subspace belongs to {parts[3]!r}, not {a.name!r}", no)
    vecs, ended = [], False
    for no, line in it:
        if ended:
            raise ParseError("text after 'end'", no)
        if line == "end":
            ended = True
            continue
        lhs, eq, rhs = line.partition("=")
        if lhs.strip() != "vector" or not eq:
            raise ParseError("expected 'vector = ...'", no)
        v = parse_combination(rhs, a.labels, no)
        if not any(v):
            raise ParseError("zero vector", no)
        vecs.append(v)
    return SubspaceFile(parts[1], parts[3], vecs)


def format_subspace(name: str, a: NormalJAlgebra, vectors) -> str:
    out = [f"subspace {name} in {a.name}"]
    out += [f"vector = {format_combination(_real_vector(v, 'vector'), a.labels)}" for v in vectors]
    return "\n".join(out) + "\n"


# -- points -------------------------------------------------------------------

@dataclass
class PointFile:
    name: str
    coords: tuple


def parse_points(text: str) -> list:
    """One or more ``point`` blocks; each ``end`` is optional."""
    points, cur = [], None

    def close(no):
        if cur is None:
            return
        name, dim, vals, start = cur
        missing = [k + 1 for k in range(dim) if k not in vals]
        if missing:
            raise ParseError(f"point {name} lacks coordinates {missing}", start)
        points.append(PointFile(name, tuple(vals[k] for k in range(dim))))

    for no, line in _lines(text):
        parts = line.split()
        if parts[0] == "point":
            close(no)
            if len(parts) != 4 or parts[2] != "dim" or not parts[3].isdigit() or int(parts[3]) < 1:
                raise ParseError("expected 'point <name> dim <N>'", no)
            cur = (parts[1], int(parts[3]), {}, no)
        elif parts[0] == "end":
            if cur is None:
                raise ParseError("'end' outside a point block", no)
            close(no)
            cur = None
        elif parts[0] == "z":
            if cur is None:
                raise ParseError("coordinate outside a point block", no)
            if len(parts) != 5 or parts[2] != "=" or not parts[1].isdigit():
                raise ParseError("expected 'z <k> = <re> <im>'", no)
            k = int(parts[1]) - 1
            if not 0 <= k < cur[1]:
                raise ParseError(f"coordinate index {k + 1} out of range", no)
            if k in cur[2]:
                raise ParseError(f"duplicate coordinate {k + 1}", no)
            cur[2][k] = as_scalar(Gaussian(_rational(parts[3], no), _rational(parts[4], no)))
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", no)
    close(None)
    if not points:
        raise ParseError("no points in file")
    return points


def format_points(points) -> str:
    out = []
    for p in points:
        out.append(f"point {p.name} dim {len(p.coords)}")
        for k, z in enumerate(p.coords, 1):
            out.append(f"z {k} = {_fmt_rat(Fraction(real_part(z)))} {_fmt_rat(Fraction(imag_part(z)))}")
        out.append("end")
    return "\n".join(out) + "\n"

