"""Command-line front end: ``jalg <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import random
import sys

from .catalog import check_axioms, parse_catalog_spec
from .fileformat import ParseError, format_algebra, parse_algebra, parse_points, parse_subspace
from .lie import normalizer
from .siegel.fields import (field_minor_polys, field_rank, realization_for, subspace_fields)
from .suite import DEFAULT_SEED, run_suite
from .totally_real import complete, is_totally_real, stein_decide

__all__ = ["run", "main"]


class UsageError(Exception):
    pass


def _read(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_algebra(arg: str, stdin):
    try:
        return parse_catalog_spec(arg)
    except ValueError:
        pass
    text = _read(arg, stdin)
    try:
        return parse_algebra(text)
    except ParseError as exc:
        raise UsageError(f"{arg}: {exc}") from None


def _load_subspace(arg: str, a, stdin):
    text = _read(arg, stdin)
    try:
        return parse_subspace(text, a).subspace(a.dim)
    except ParseError as exc:
        raise UsageError(f"{arg}: {exc}") from None


def _load_points(arg: str, stdin):
    try:
        return parse_points(_read(arg, stdin))
    except ParseError as exc:
        raise UsageError(f"{arg}: {exc}") from None


def _print_vectors(a, s, out):
    for v in s.basis:
        print(f"vector = {a.alg.format_vector(v)}", file=out)


def _cmd_verify(ns, out, stdin):
    text = _read(ns.file, stdin)
    try:
        a = parse_algebra(text)
    except ParseError as exc:
        raise UsageError(f"{ns.file}: {exc}") from None
    rep = check_axioms(a)
    print(rep.format(), file=out)
    return 0 if rep.passed else 1


def _cmd_catalog(ns, out, stdin):
    try:
        a = parse_catalog_spec(ns.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if ns.emit:
        out.write(format_algebra(a))
        return 0
    rep = check_axioms(a)
    print(f"algebra {a.name} kind {a.kind} dim {a.dim}", file=out)
    print("basis " + " ".join(a.labels), file=out)
    print(f"nilradical dimension {a.nilradical.dim}", file=out)
    print(f"axioms {'PASS' if rep.passed else 'FAIL'}", file=out)
    return 0 if rep.passed else 1


def _cmd_totally_real(ns, out, stdin):
    a = _load_algebra(ns.algebra, stdin)
    s = _load_subspace(ns.subspace, a, stdin)
    tr = is_totally_real(a, s)
    print(f"totally-real {'yes' if tr else 'no'}", file=out)
    return 0 if tr else 1


def _cmd_complete(ns, out, stdin):
    a = _load_algebra(ns.algebra, stdin)
    s = _load_subspace(ns.subspace, a, stdin)
    try:
        res = complete(a, s, ns.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(res.format(a), file=out)
    return 0 if res.completed else 1


def _cmd_stein(ns, out, stdin):
    a = _load_algebra(ns.algebra, stdin)
    s = _load_subspace(ns.subspace, a, stdin)
    pts = [p.coords for p in _load_points(ns.points, stdin)] if ns.points else None
    try:
        v = stein_decide(a, s, points=pts, generate=True)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(v.format(), file=out)
    return 1 if v.verdict == "not-stein" else 0


def _cmd_normalizer(ns, out, stdin):
    a = _load_algebra(ns.algebra, stdin)
    s = _load_subspace(ns.subspace, a, stdin)
    within = a.nilradical if ns.within == "nilradical" else None
    try:
        n = normalizer(a.alg, s, within=within)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"normalizer dimension {n.dim}", file=out)
    _print_vectors(a, n, out)
    print(f"totally-real {'yes' if is_totally_real(a, n) else 'no'}", file=out)
    return 0


def _cmd_orbit_check(ns, out, stdin):
    a = _load_algebra(ns.algebra, stdin)
    real = realization_for(a)
    if real is None:
        raise UsageError(f"no vector-field realization for {a.name}")
    s = _load_subspace(ns.subspace, a, stdin)
    fields = subspace_fields(real, a, s)
    if ns.points:
        named = [(p.name, p.coords) for p in _load_points(ns.points, stdin)]
    else:
        rng = random.Random(f"{ns.seed}:orbit-check")
        named = [(f"sample{k + 1}", real.sample(rng)) for k in range(ns.random)]
    bad = 0
    for name, p in named:
        if len(p) != real.dim:
            raise UsageError(f"point {name} has dimension {len(p)}, expected {real.dim}")
        if not real.in_domain(p):
            raise UsageError(f"point {name} is outside the domain")
        r = field_rank(fields, p)
        ok = r == len(fields)
        bad += not ok
        print(f"point {name} rank {r}/{len(fields)} {'totally-real' if ok else 'degenerate'}",
              file=out)
    if ns.minors:
        for rows, d in field_minor_polys(fields):
            names = [real.coords[k] for k in rows]
            print(f"minor {' '.join(names)} = {d.format(list(real.coords))}", file=out)
    print(f"summary: {len(named) - bad}/{len(named)} orbits totally real", file=out)
    return 0 if not bad else 1


def _cmd_paper_suite(ns, out, stdin):
    try:
        rep = run_suite(ns.seed, ns.filter)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(rep.format())
    return 0 if rep.passed else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jalg", description="Exact checks for normal j-algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("verify", help="check the axioms of an algebra file")
    c.add_argument("file")
    c.set_defaults(fn=_cmd_verify)

    c = sub.add_parser("catalog", help="describe or emit a catalog algebra")
    c.add_argument("name", help="ball:n, lieball:n, siegel:3 or d5")
    c.add_argument("--emit", action="store_true", help="print the algebra file")
    c.set_defaults(fn=_cmd_catalog)

    for name, fn, helptext in (("totally-real", _cmd_totally_real, "test V ∩ JV = 0"),
                               ("complete", _cmd_complete, "extend to a maximal totally real subalgebra"),
                               ("stein", _cmd_stein, "decide Steinness of the quotient"),
                               ("normalizer", _cmd_normalizer, "normalizer of a subalgebra")):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("algebra", help="catalog name or algebra file")
        c.add_argument("subspace", help="subspace file")
        c.set_defaults(fn=fn)
        if name == "complete":
            c.add_argument("--mode", choices=("ball", "lieball", "greedy"))
        if name == "stein":
            c.add_argument("--points", help="extra sample points for the orbit test")
        if name == "normalizer":
            c.add_argument("--within", choices=("nilradical", "algebra"), default="nilradical")

    c = sub.add_parser("orbit-check", help="C-rank of the orbit fields at points")
    c.add_argument("algebra")
    c.add_argument("subspace")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--points")
    g.add_argument("--random", type=int)
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--minors", action="store_true", help="print the maximal minors")
    c.set_defaults(fn=_cmd_orbit_check)

    c = sub.add_parser("paper-suite", help="run every verification check")
    c.add_argument("--filter", help="group name or check-id prefix")
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.set_defaults(fn=_cmd_paper_suite)
    return p


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    parser = _parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    stdin_uses = [x for x in (getattr(ns, k, None) for k in ("file", "algebra", "subspace", "points"))
                  if x == "-"]
    if len(stdin_uses) > 1:
        print("error: only one argument may read from stdin", file=err)
        return 2
    try:
        return ns.fn(ns, out, inp)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
