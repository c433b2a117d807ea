"""Command-line front end: ``gen``, ``transform``, ``verify``, ``egf`` and ``closed-form``.

Exit codes are 0 on success, 1 when a verification fails and 2 on a
usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import ParameterError, SingularTermError, format_rat, parse_rat, parse_rat_list
from .characteristics import CASE_IDS, closed_egf, closed_egf_params, reduce_to_polys
from .core import GkpParams, Triangle, egf_truncated, scale_params, triangle
from .families import closed_forms as cf
from .families.named import CLASSICS, FAMILIES, family_params
from .formats import FORMATS, dump, format_params, load, normalize_rows
from .report import Check
from .suites import SUITES, run_suite
from .transforms import ELEMENT_NAMES, S3Elem, stanton_sprott, transform


class UsageError(Exception):
    pass


def _params_from(args) -> GkpParams:
    if args.params and args.family:
        raise UsageError("give either --params or --family, not both")
    if args.params:
        try:
            vals = parse_rat_list(args.params)
        except ValueError as exc:
            raise UsageError(f"--params {exc}") from None
        if len(vals) != 6:
            raise UsageError(f"--params needs 6 values, got {len(vals)}")
        return GkpParams.of(*vals)
    if args.family:
        try:
            fam_args = parse_rat_list(args.args) if args.args else []
        except ValueError as exc:
            raise UsageError(f"--args {exc}") from None
        return family_params(args.family, fam_args)
    raise UsageError("need --params or --family")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _source(args) -> Triangle:
    if getattr(args, "input", None):
        fmt = args.in_format or args.format
        try:
            return load(Path(args.input).read_text(), fmt)
        except (ValueError, KeyError) as exc:
            raise UsageError(f"cannot read {args.input} as {fmt}: {exc}") from None
    return triangle(_params_from(args), args.n)


# --------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    tri = triangle(_params_from(args), args.n)
    tri = normalize_rows(tri, args.normalize, args.abs)
    _emit(dump(tri, args.format), args.out)
    return 0


def _element(name: str) -> S3Elem | None:
    if name == "ss":
        return None
    sign = -1 if name.startswith("-") else 1
    base = name.lstrip("-")
    if base not in ELEMENT_NAMES:
        raise UsageError(f"unknown element {name!r}; choose from {', '.join(ELEMENT_NAMES)}, their negatives, or ss")
    return S3Elem(base, sign)


def cmd_transform(args) -> int:
    tri = _source(args)
    if args.scale:
        if tri.params is None:
            raise UsageError("--scale needs parameters (use --params or a json input)")
        A, B = parse_rat_list(args.scale)
        tri = triangle(scale_params(tri.params, A, B), tri.depth)
    e = _element(args.elem)
    p = tri.params
    if e is None:
        if p is not None and p.beta_p != p.beta:
            raise UsageError(f"ss needs beta' = beta, got beta={format_rat(p.beta)} beta'={format_rat(p.beta_p)}")
        out = stanton_sprott(tri)
    else:
        if p is not None and p.beta_p != -p.beta:
            hint = f" ; try --scale 1,{format_rat(-p.beta / p.beta_p)}" if p.beta_p and p.beta else ""
            raise UsageError(
                f"{args.elem} needs beta' = -beta, got beta={format_rat(p.beta)} beta'={format_rat(p.beta_p)}{hint}"
            )
        out = transform(e, tri)
    _emit(dump(out, args.format), args.out)
    if out.params is not None and args.format != "json":
        print(f"params {format_params(out.params)}", file=sys.stderr)
    return 0


def _print_checks(checks: list[Check], findings_only: bool) -> bool:
    regular = [c for c in checks if not c.finding]
    found = [c for c in checks if c.finding]
    for i, c in enumerate(regular, 1):
        print(f"{i:04d} {c.line()}")
    ok = all(c.passed for c in regular)
    if regular:
        npass = sum(c.passed for c in regular)
        print(f"{npass}/{len(regular)} checks passed")
    if found:
        print("findings:")
        for c in found:
            print(f"  {'agrees' if c.passed else 'COUNTEREXAMPLE'}  {c.name}  ({c.detail})")
        bad = [c for c in found if not c.passed]
        print("no counterexample found" if not bad else f"{len(bad)} counterexample(s) found")
    return ok or findings_only


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        kw = {"p": args.p} if name == "conjecture" and args.p is not None else {}
        print(f"== {name}: {SUITES[name].about}")
        checks = run_suite(name, N=args.n, samples=args.samples, seed=args.seed, **kw)
        ok &= _print_checks(checks, SUITES[name].findings_only)
    return 0 if ok else 1


def cmd_egf(args) -> int:
    if args.case:
        try:
            case_args = [] if not args.args else parse_rat_list(args.args)
        except ValueError as exc:
            raise UsageError(f"--args {exc}") from None
        if args.case.startswith("A"):
            case_args = [_params_from(argparse.Namespace(params=args.params, family=None, args=None))]
        polys = reduce_to_polys(closed_egf(args.case, case_args, args.order))
        want = egf_truncated(triangle(closed_egf_params(args.case, case_args), args.order - 1), args.order)
        lines = [f"z^{n}: {p.to_str()}\n" for n, p in enumerate(polys)]
        _emit("".join(lines), args.out)
        agree = all(polys[n] == want.coeff(n) for n in range(args.order))
        print("matches recurrence" if agree else "DOES NOT match recurrence", file=sys.stderr)
        return 0 if agree else 1
    tri = triangle(_params_from(args), args.order - 1)
    s = egf_truncated(tri, args.order)
    _emit("".join(f"z^{n}: {s.coeff(n).to_str()}\n" for n in range(args.order)), args.out)
    return 0


def _kw(pairs: list[str]) -> dict:
    out = {}
    for item in pairs or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--set expects name=value, got {item!r}")
        try:
            out[key] = parse_rat(val)
        except ValueError as exc:
            raise UsageError(f"--set {key}: {exc}") from None
    return out


def cmd_closed_form(args) -> int:
    if args.list or not args.formula:
        for fid, f in cf.REGISTRY.items():
            extra = f" args {','.join(f.args)}" if f.args else ""
            print(f"{fid}: {f.doc}; variants {', '.join(f.variants)}{extra}")
        return 0
    if args.formula not in cf.REGISTRY:
        raise UsageError(f"unknown formula {args.formula!r}")
    f = cf.REGISTRY[args.formula]
    variant = args.variant or f.variants[0]
    kw = _kw(args.set)
    if args.check:
        c = cf.cross_check(args.formula, variant, args.n, **kw)
        print(c.line())
        return 0 if c.passed else 1
    rows = []
    for n in range(args.n + 1):
        ks = [args.k] if args.k is not None else range(n + 1)
        cells = []
        for k in ks:
            if not f.domain(n, k) or k > n:
                cells.append("-")
                continue
            try:
                cells.append(format_rat(cf.closed_form_eval(args.formula, variant, n, k, **kw)))
            except SingularTermError:
                cells.append("?")
        rows.append(",".join(cells) + "\n")
    _emit("".join(rows), args.out)
    return 0


# ----------------------------------------------------------------- parser


def _add_source(p: argparse.ArgumentParser):
    p.add_argument("--params", help="alpha,beta,gamma,alpha',beta',gamma' as integers or p/q")
    p.add_argument("--family", help=f"named family: {', '.join([*FAMILIES, *CLASSICS])}")
    p.add_argument("--args", help="family arguments, comma separated")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gkptri", description="Exact GKP recurrence triangles.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a triangle")
    _add_source(g)
    g.add_argument("--n", type=int, default=12, help="last row index")
    g.add_argument("--format", choices=FORMATS, default="csv")
    g.add_argument("--normalize", default="none", help="rising:<c>, factorial or none")
    g.add_argument("--abs", action="store_true", help="strip signs")
    g.add_argument("--out")
    g.set_defaults(fn=cmd_gen)

    t = sub.add_parser("transform", help="apply a group element or the ss map")
    _add_source(t)
    t.add_argument("--in", dest="input", help="triangle file instead of --params")
    t.add_argument("--in-format", choices=FORMATS)
    t.add_argument("--elem", required=True, help="id, rt, ubt, rur, ur, ru, -<name>, or ss")
    t.add_argument("--scale", help="A,B: rescale upper and lower triples first")
    t.add_argument("--n", type=int, default=12)
    t.add_argument("--format", choices=FORMATS, default="csv")
    t.add_argument("--out")
    t.set_defaults(fn=cmd_transform)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=[*SUITES, "all"])
    v.add_argument("--n", type=int, default=None, help="depth (suite default if omitted)")
    v.add_argument("--samples", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--p", type=int, default=None, help="largest p for the conjecture scan")
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("egf", help="truncated EGF coefficients G_n(t)/n!")
    _add_source(e)
    e.add_argument("--case", choices=CASE_IDS, help="closed-form case instead of the recurrence")
    e.add_argument("--order", type=int, default=8)
    e.add_argument("--out")
    e.set_defaults(fn=cmd_egf)

    c = sub.add_parser("closed-form", help="evaluate a registry formula")
    c.add_argument("formula", nargs="?")
    c.add_argument("--variant")
    c.add_argument("--set", action="append", metavar="NAME=VALUE")
    c.add_argument("--n", type=int, default=6)
    c.add_argument("--k", type=int)
    c.add_argument("--check", action="store_true", help="compare with the recurrence")
    c.add_argument("--list", action="store_true")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_closed_form)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", None) is not None and args.n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (UsageError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
