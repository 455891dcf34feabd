"""Command-line front end.

Exit codes: 0 success, 1 evaluation diagnostic (value still printed),
2 usage or capacity error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import grid as gridmod
from . import verify as verifymod
from .evaluator import EvalConfig, bracket_f, error_bound_step1, eval_F, eval_f
from .sequences import CapacityError, build_lambda_table, moment

DEFAULT_NMAX = 2**20


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-10, help="target error proxy (default 1e-10)")
    p.add_argument("--nmax", type=int, default=DEFAULT_NMAX, help="maximum iteration depth (default 2^20)")
    p.add_argument("--precision", choices=("standard", "extended"), default="standard")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-", help="output path, '-' for standard output")
    p.add_argument("--seed", type=int, default=0, help="seed for sampling suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psimoments", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="dump lambda_0..lambda_n or m_0..m_n")
    p.add_argument("kind", choices=("lambda", "moment"))
    p.add_argument("--n", type=int, required=True)
    _common(p)

    p = sub.add_parser("eval", help="evaluate f or F at one point")
    p.add_argument("--z", required=True, help="point as 're,im' or a single real")
    p.add_argument("--which", choices=("f", "F"), default="f")
    _common(p)

    p = sub.add_parser("grid", help="sample f on a rectangle, im outer / re inner")
    p.add_argument("--re", nargs=2, type=float, metavar=("MIN", "MAX"), required=True)
    p.add_argument("--im", nargs=2, type=float, metavar=("MIN", "MAX"), required=True)
    p.add_argument("--steps", nargs=2, type=int, metavar=("RE_STEPS", "IM_STEPS"), required=True)
    _common(p)

    p = sub.add_parser("bracket", help="certified bracket for f(s), 0 < s <= 1")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--n", type=int, default=1024)
    _common(p)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=verifymod.SUITES + ("all",), default="all")
    _common(p)
    return parser


def _fix_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,0" as an option; glue it to its flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--z", "--s") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def parse_point(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(parts[0].strip().replace("i", "j"))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"cannot parse point {text!r}; expected 're,im'")


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def _num(x):
    if x is None:
        return None
    x = float(x)
    return x if math.isfinite(x) else None


def _table_for(args, extra: int = 0):
    cfg = EvalConfig(tol=args.tol, n_max=args.nmax, n_start=min(16, args.nmax))
    need = cfg.n_max + extra + cfg.order + 2
    return cfg, build_lambda_table(need, args.precision)


def cmd_seq(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    need = args.n + (1 if args.kind == "moment" else 0)
    table = build_lambda_table(need, args.precision)
    values = [table[k] if args.kind == "lambda" else moment(table, k) for k in range(args.n + 1)]
    fmt = table.arith.format
    if args.format == "csv":
        text = "".join(f"{k},{fmt(v)}\n" for k, v in enumerate(values))
    else:
        rows = [{"n": k, "value": float(v) if not table.arith.extended else fmt(v)}
                for k, v in enumerate(values)]
        text = json.dumps(rows) + "\n"
    _emit(text, args.out)
    return 0


def cmd_eval(args) -> int:
    z = parse_point(args.z)
    shift = math.ceil(abs(z)) + 1
    cfg, table = _table_for(args, extra=shift)
    r = (eval_f if args.which == "f" else eval_F)(z, cfg, table)
    if r.value.at_infinity:
        vre = vim = None
    else:
        v = complex(r.value.value)
        vre, vim = v.real, v.imag
    obj = {"re": z.real, "im": z.imag, "value_re": _num(vre), "value_im": _num(vim),
           "err": _num(r.error_estimate), "n_used": r.n_used, "flags": sorted(r.flags)}
    _emit(json.dumps(obj) + "\n", args.out)
    return 0 if r.ok else 1


def cmd_grid(args) -> int:
    try:
        spec = gridmod.GridSpec(args.re[0], args.re[1], args.im[0], args.im[1],
                                args.steps[0], args.steps[1], args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reach = max(abs(args.re[0]), abs(args.re[1])) + max(abs(args.im[0]), abs(args.im[1]))
    cfg, table = _table_for(args, extra=math.ceil(reach) + 1)
    records = gridmod.evaluate_grid(spec, table, cfg)
    text = gridmod.records_to_csv(records) if args.format == "csv" else gridmod.records_to_json(records)
    _emit(text, args.out)
    return 0


def cmd_bracket(args) -> int:
    if not 0 < args.s <= 1:
        raise UsageError("--s must lie in (0, 1]")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    table = build_lambda_table(args.n + 2, args.precision)
    lo, hi = bracket_f(args.s, args.n, table)
    bound = error_bound_step1(args.s, args.n, table)
    obj = {"s": args.s, "n": args.n, "lo": float(lo), "hi": float(hi),
           "width": float(hi - lo), "bound": float(bound)}
    _emit(json.dumps(obj) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    checks = verifymod.run(args.suite, args.seed)
    text = "".join(c.line() + "\n" for c in checks)
    failed = sum(not c.passed for c in checks)
    text += f"{len(checks) - failed}/{len(checks)} checks passed\n"
    _emit(text, args.out)
    return 0 if failed == 0 else 1


COMMANDS = {"seq": cmd_seq, "eval": cmd_eval, "grid": cmd_grid,
            "bracket": cmd_bracket, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_fix_negative_values(argv))
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CapacityError, ValueError) as exc:
        print(f"psimoments: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
