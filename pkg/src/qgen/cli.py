"""Command-line front end.

Subcommands:

* ``table``      weighted Genocchi values (all routes cross-checked),
                 symbolic or evaluated at a rational q
* ``verify``     run one theorem verifier or all of them over a grid and
                 emit a machine-readable report
* ``integral``   truncated fermionic sums with convergence diagnostics
* ``bernstein``  basis values and symmetry checks

Output is byte-deterministic for a fixed invocation: identical configs
produce identical reports.  Rational inputs are given as "a/b" text so
no floating point ever enters.  Exit codes: 0 all requested checks
passed, 1 at least one asserted check failed, 2 usage or configuration
error, 3 precision (modular arithmetic) error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from qgen import __version__
from qgen.bernstein import BernsteinIndex, bernstein_poly, bernstein_symmetry_check
from qgen.genocchi import (
    ROUTE_CLOSED,
    WeightParams,
    build_table,
    weighted_genocchi_poly_closed,
)
from qgen.identities import THEOREMS, SweepConfig, SweepReport, sweep, unresolved_failures
from qgen.padic import (
    IntegrandSpec,
    PadicContext,
    PrecisionError,
    convergence_probe,
    integrate,
    truncated_integral,
)
from qgen.qcore import PoleError, RatFuncQ, eval_at
from qgen.records import VerificationRecord

__all__ = ["build_parser", "console_main", "run", "serialize_report"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _n_values(text: str) -> list[int]:
    try:
        values = sorted({int(part) for part in text.split(",")})
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a truncation list: {text!r}")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("truncation levels must be nonnegative")
    return values


def _coeff_term(text: str) -> tuple[int, Fraction]:
    try:
        m_text, c_text = text.split(":", 1)
        return int(m_text), Fraction(c_text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected m:coeff, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgen",
        description="Exact weighted (h,q)-Genocchi arithmetic and identity verification.",
    )
    parser.add_argument("--version", action="version", version=f"qgen {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")

    p_table = sub.add_parser("table", parents=[common],
                             help="weighted Genocchi tables (all routes cross-checked)")
    p_table.add_argument("--n-max", type=int, default=8)
    p_table.add_argument("--alpha", type=int, default=1)
    p_table.add_argument("--h", type=int, default=1)
    p_table.add_argument("--x", type=int, default=0)
    p_table.add_argument("--at-q", type=_fraction, default=None, metavar="A/B",
                         help="evaluate at a rational q instead of printing symbolic values")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="verify one identity or all of them over a grid")
    p_verify.add_argument("theorem", choices=("all",) + THEOREMS)
    p_verify.add_argument("--n-max", type=int, default=None,
                          help="cap every index range at this value")
    p_verify.add_argument("--alpha-max", type=int, default=None)
    p_verify.add_argument("--h-max", type=int, default=None)
    p_verify.add_argument("--x-min", type=int, default=None)
    p_verify.add_argument("--x-max", type=int, default=None)
    p_verify.add_argument("--s-max", type=int, default=None)
    p_verify.add_argument("--workers", type=int, default=None,
                          help="sweep parallelism (default: QGEN_WORKERS or 1)")

    p_int = sub.add_parser("integral", parents=[common],
                           help="truncated fermionic sums and convergence diagnostics")
    p_int.add_argument("--p", type=int, required=True, help="odd prime")
    p_int.add_argument("--q", type=_fraction, required=True, metavar="A/B")
    p_int.add_argument("--m", type=int, action="append", default=None,
                       help="monomial exponent (repeatable; coefficient 1)")
    p_int.add_argument("--coeff", type=_coeff_term, action="append", default=None,
                       metavar="M:C",
                       help="general term, e.g. --coeff 2:-3/4 (repeatable; "
                            "use --coeff=-2:1/2 for negative exponents)")
    p_int.add_argument("--N", type=_n_values, default=[2], metavar="N1,N2,...",
                       help="truncation levels (comma separated)")
    p_int.add_argument("--M", type=int, default=None, help="working precision exponent")
    p_int.add_argument("--unnormalized", action="store_true",
                       help="also report the raw sums without the bracket normalizer")

    p_bern = sub.add_parser("bernstein", parents=[common],
                            help="weighted q-Bernstein basis values and symmetry checks")
    p_bern.add_argument("--n", type=int, required=True)
    p_bern.add_argument("--alpha", type=int, default=1)
    p_bern.add_argument("--x", type=int, default=0)
    p_bern.add_argument("--k", type=int, default=None,
                        help="single basis index (default: all k = 0..n)")
    return parser


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _record_dict(rec: VerificationRecord) -> dict:
    return {
        "theorem": rec.theorem,
        "params": rec.params_text(),
        "lhs": rec.lhs.to_canonical_string(),
        "rhs": rec.rhs.to_canonical_string(),
        "status": rec.status,
        "variant": rec.variant,
    }


def _json_dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_dump(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def serialize_report(report: SweepReport, fmt: str, config_echo: dict | None = None) -> str:
    """Render a sweep report; byte-stable for identical inputs."""
    records = [_record_dict(r) for r in report.records]
    if fmt == "json":
        return _json_dump({
            "tool-version": __version__,
            "config-echo": config_echo or {},
            "records": records,
            "summary": report.summary,
            "boundaries": list(report.boundaries),
        })
    if fmt == "csv":
        rows = [[r["theorem"], r["params"], r["status"], r["lhs"], r["rhs"]]
                for r in records]
        return _csv_dump(["theorem", "params", "status", "lhs", "rhs"], rows)
    if fmt == "text":
        lines = [f"qgen {__version__} verification report"]
        for r in records:
            variant = "" if r["variant"] == "as-stated" else f" [{r['variant']}]"
            lines.append(f"{r['status']:<14} {r['theorem']} {r['params']}{variant}")
        lines.append("")
        lines.append("summary:")
        for theorem, counts in report.summary.items():
            text = " ".join(f"{k}={v}" for k, v in counts.items())
            lines.append(f"  {theorem}: {text}")
        if report.boundaries:
            lines.append("domain boundaries (status flips along n):")
            for b in report.boundaries:
                lines.append(
                    f"  {b['theorem']} {b['params']}: {b['flip']} between "
                    f"n={b['n_from']} and n={b['n_to']}"
                )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format: {fmt!r}")


def _write_output(text: str, path: str | None) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"qgen: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_table(args) -> int:
    try:
        w = WeightParams(args.alpha, args.h)
    except ValueError as exc:
        print(f"qgen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.n_max < 0:
        print("qgen: --n-max must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    build_table(args.n_max, w, xs=(args.x,))  # cross-checks all three routes
    rows = []
    for n in range(args.n_max + 1):
        value = weighted_genocchi_poly_closed(n, w, args.x)
        if args.at_q is not None:
            try:
                text = str(eval_at(value, args.at_q))
            except PoleError as exc:
                print(f"qgen: {exc}", file=sys.stderr)
                return EXIT_USAGE
        else:
            text = value.to_canonical_string()
        rows.append({"n": n, "alpha": w.alpha, "h": w.h, "x": args.x, "value": text})
    config = {"n-max": args.n_max, "alpha": w.alpha, "h": w.h, "x": args.x,
              "at-q": str(args.at_q) if args.at_q is not None else None}
    if args.format == "json":
        text = _json_dump({"tool-version": __version__, "config-echo": config, "rows": rows})
    elif args.format == "csv":
        text = _csv_dump(["n", "alpha", "h", "x", "value"],
                         [[str(r["n"]), str(r["alpha"]), str(r["h"]), str(r["x"]), r["value"]]
                          for r in rows])
    else:
        lines = [f"weighted Genocchi table alpha={w.alpha} h={w.h} x={args.x}"]
        lines += [f"  n={r['n']:<3} {r['value']}" for r in rows]
        text = "\n".join(lines) + "\n"
    return _write_output(text, args.output)


def _verify_config(args) -> SweepConfig:
    cfg = SweepConfig()
    updates: dict[str, int] = {}
    if args.n_max is not None:
        updates.update(
            n_max=args.n_max,
            scalar_n_max=args.n_max,
            single_n_max=args.n_max,
            pair_n_max=min(cfg.pair_n_max, args.n_max),
            multi_n_max=min(cfg.multi_n_max, args.n_max),
        )
    if args.alpha_max is not None:
        updates.update(alpha_max=args.alpha_max,
                       product_alpha_max=min(cfg.product_alpha_max, args.alpha_max))
    if args.h_max is not None:
        updates.update(h_max=args.h_max,
                       product_h_max=min(cfg.product_h_max, args.h_max))
    if args.x_min is not None:
        updates.update(x_min=args.x_min)
    if args.x_max is not None:
        updates.update(x_max=args.x_max)
    if args.s_max is not None:
        updates.update(s_max=args.s_max)
    from dataclasses import replace
    return replace(cfg, **updates) if updates else cfg


def _cmd_verify(args) -> int:
    config = _verify_config(args)
    only = None if args.theorem == "all" else (args.theorem,)
    report = sweep(config, workers=args.workers, only=only)
    config_echo = {k: getattr(config, k) for k in sorted(config.__dataclass_fields__)}
    config_echo["theorem"] = args.theorem
    text = serialize_report(report, args.format, config_echo)
    code = _write_output(text, args.output)
    if code != EXIT_OK:
        return code
    return EXIT_FAIL if unresolved_failures(report) else EXIT_OK


def _cmd_integral(args) -> int:
    terms: dict[int, Fraction] = {}
    for m in args.m or []:
        terms[m] = terms.get(m, Fraction(0)) + 1
    for m, c in args.coeff or []:
        terms[m] = terms.get(m, Fraction(0)) + c
    if not terms:
        print("qgen: provide at least one term via --m or --coeff", file=sys.stderr)
        return EXIT_USAGE
    spec = IntegrandSpec(terms)
    try:
        contexts = [
            PadicContext(p=args.p, N=N, q=args.q, M=(args.M if args.M is not None else -1))
            for N in args.N
        ]
        limit_sym = integrate(spec)
        limit = eval_at(limit_sym, args.q)
        rows = []
        for ctx in contexts:
            value = truncated_integral(spec, ctx)
            diff = value - limit
            if diff == 0:
                valuation = "inf"
            else:
                from qgen.padic import vp
                v = vp(diff, args.p)
                if ctx.N > 4:
                    v = min(v, ctx.M)
                valuation = str(v)
            row = {"N": ctx.N, "value": str(value), "valuation": valuation}
            if args.unnormalized:
                row["raw-sum"] = str(truncated_integral(spec, ctx, normalized=False))
            rows.append(row)
    except PrecisionError as exc:
        print(f"qgen: precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, PoleError) as exc:
        print(f"qgen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config = {"p": args.p, "q": str(args.q), "spec": spec.describe(),
              "N": args.N, "M": args.M, "unnormalized": args.unnormalized}
    payload = {
        "tool-version": __version__,
        "config-echo": config,
        "limit": str(limit),
        "limit-symbolic": limit_sym.to_canonical_string(),
        "rows": rows,
    }
    if args.format == "json":
        text = _json_dump(payload)
    elif args.format == "csv":
        header = ["N", "value", "valuation"] + (["raw-sum"] if args.unnormalized else [])
        text = _csv_dump(header, [[str(r["N"]), r["value"], r["valuation"]]
                                  + ([r["raw-sum"]] if args.unnormalized else [])
                                  for r in rows])
    else:
        lines = [f"fermionic integral: p={args.p} q={args.q} spec {{{spec.describe()}}}",
                 f"  exact limit = {limit}  (symbolic: {limit_sym})"]
        for r in rows:
            extra = f"  raw-sum={r['raw-sum']}" if args.unnormalized else ""
            lines.append(f"  N={r['N']:<3} value={r['value']}  vp(diff)={r['valuation']}{extra}")
        text = "\n".join(lines) + "\n"
    return _write_output(text, args.output)


def _cmd_bernstein(args) -> int:
    try:
        ks = [args.k] if args.k is not None else list(range(args.n + 1))
        indices = [BernsteinIndex(k, args.n, args.alpha) for k in ks]
    except (IndexError, ValueError) as exc:
        print(f"qgen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    any_fail = False
    for idx in indices:
        value = bernstein_poly(idx, args.x)
        check = bernstein_symmetry_check(idx, args.x)
        any_fail = any_fail or not check.passed
        rows.append({
            "k": idx.k, "n": idx.n, "alpha": idx.alpha, "x": args.x,
            "value": value.to_canonical_string(),
            "symmetry": check.status,
        })
    config = {"n": args.n, "alpha": args.alpha, "x": args.x, "k": args.k}
    if args.format == "json":
        text = _json_dump({"tool-version": __version__, "config-echo": config, "rows": rows})
    elif args.format == "csv":
        text = _csv_dump(["k", "n", "alpha", "x", "value", "symmetry"],
                         [[str(r["k"]), str(r["n"]), str(r["alpha"]), str(r["x"]),
                           r["value"], r["symmetry"]] for r in rows])
    else:
        lines = [f"weighted q-Bernstein basis n={args.n} alpha={args.alpha} x={args.x}"]
        lines += [f"  k={r['k']:<3} {r['symmetry']:<5} {r['value']}" for r in rows]
        text = "\n".join(lines) + "\n"
    code = _write_output(text, args.output)
    if code != EXIT_OK:
        return code
    return EXIT_FAIL if any_fail else EXIT_OK


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code
    handlers = {
        "table": _cmd_table,
        "verify": _cmd_verify,
        "integral": _cmd_integral,
        "bernstein": _cmd_bernstein,
    }
    return handlers[args.command](args)


def console_main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    console_main()
