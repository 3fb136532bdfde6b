"""Command-line front end: verify / constants / checkfn.

Exit codes: 0 = ran with no unexpected violations; 1 = unexpected violations
(identity failures, corrected-variant bound violations, or as_stated
violations without --expect-violations); 2 = configuration or domain errors;
3 = quadrature non-convergence.

`verify` reads an optional JSON config (SweepConfig schema) and lets every
field be overridden by a flag (flag wins).  The report goes to stdout or
--out, as canonical JSON or a flat CSV.  HQFI_TOL_SCALE multiplies the
config's tol_scale for robustness studies.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .harness import SweepConfig, run_checkfn, run_constants, run_verify
from .quad import QuadratureError

__all__ = ["build_parser", "main"]

_VARIANT_FLAG = {"corrected": "symmetric_corrected", "verbatim": "as_stated", "both": "both"}


def _floats(text: str) -> tuple[float, ...]:
    vals = tuple(float(tok) for tok in text.split(",") if tok.strip())
    if not vals:
        raise ValueError(f"expected a comma-separated list of numbers, got {text!r}")
    return vals


def _interval(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"expected LO:HI, got {text!r}")
    return (float(lo), float(hi))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hqfi",
        description="Evaluate a weighted fractional identity and its bound families over parameter sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a sweep campaign and emit a report")
    verify.add_argument("--config", help="JSON file with SweepConfig fields")
    verify.add_argument("--variant", choices=sorted(_VARIANT_FLAG), help="bound variant(s) to sweep")
    verify.add_argument("--format", choices=("json", "csv"), default="json", help="report format (default json)")
    verify.add_argument("--out", help="write the report here instead of stdout")
    verify.add_argument(
        "--expect-violations",
        action="store_true",
        help="as_stated violations are anticipated; do not fail the run for them",
    )
    verify.add_argument("--interval", action="append", type=_interval, metavar="A:B", help="sweep interval (repeatable)")
    verify.add_argument("--x-mode", choices=("h_point", "grid", "explicit"))
    verify.add_argument("--x-count", type=int, help="grid-mode point count")
    verify.add_argument("--x-values", type=_floats, metavar="X1,X2,...", help="explicit-mode evaluation points")
    verify.add_argument("--lambdas", type=_floats, metavar="L1,L2,...")
    verify.add_argument("--alphas", type=_floats, metavar="A1,A2,...")
    verify.add_argument("--qs", type=_floats, metavar="Q1,Q2,...")
    verify.add_argument("--functions", help='comma-separated corpus labels, or "all"')
    verify.add_argument("--seed", type=int, help="checker sampling seed")
    verify.add_argument("--tol-identity", type=float)
    verify.add_argument("--tol-slack", type=float)
    verify.add_argument("--tol-quad-abs", type=float)
    verify.add_argument("--tol-quad-rel", type=float)
    verify.add_argument("--checker-n", type=int)

    constants = sub.add_parser("constants", help="closed-form kernel moments vs quadrature oracles")
    constants.add_argument("--alpha", type=float, required=True)
    constants.add_argument("--lambda", dest="lam", type=float, required=True)
    constants.add_argument("--q", type=float, required=True)
    constants.add_argument("--r", type=float, required=True)
    constants.add_argument("--which", choices=("c1", "c2", "c3", "all"), default="all")
    constants.add_argument("--seed", type=int, default=0, help="accepted for interface symmetry; unused")

    checkfn = sub.add_parser("checkfn", help="convexity checker over a corpus name or expression")
    checkfn.add_argument("--fn", required=True, help="corpus label or expression in x (e.g. 'x*ln(x)')")
    checkfn.add_argument("--domain", type=_interval, required=True, metavar="LO:HI")
    checkfn.add_argument("--n", type=int, default=20, help="grid resolution (default 20)")
    checkfn.add_argument("--mode", choices=("quasi", "convex"), default="quasi")
    checkfn.add_argument("--seed", type=int, default=0)

    return parser


def _env_tol_scale() -> float:
    raw = os.environ.get("HQFI_TOL_SCALE")
    if raw is None:
        return 1.0
    try:
        scale = float(raw)
    except ValueError:
        raise ValueError(f"HQFI_TOL_SCALE must be a positive real, got {raw!r}") from None
    if not (math.isfinite(scale) and scale > 0.0):
        raise ValueError(f"HQFI_TOL_SCALE must be a positive real, got {raw!r}")
    return scale


def _verify_config(args: argparse.Namespace) -> SweepConfig:
    if args.config is not None:
        with open(args.config, encoding="utf-8") as fh:
            base = SweepConfig.from_dict(json.load(fh))
    else:
        base = SweepConfig()
    merged = base.to_dict()
    if args.variant is not None:
        merged["variant"] = _VARIANT_FLAG[args.variant]
    if args.interval:
        merged["intervals"] = args.interval
    if args.functions is not None:
        merged["functions"] = "all" if args.functions == "all" else tuple(
            tok.strip() for tok in args.functions.split(",") if tok.strip()
        )
    for flag, key in (
        ("x_mode", "x_mode"),
        ("x_count", "x_count"),
        ("x_values", "x_values"),
        ("lambdas", "lambdas"),
        ("alphas", "alphas"),
        ("qs", "qs"),
        ("seed", "seed"),
        ("tol_identity", "tol_identity"),
        ("tol_slack", "tol_slack"),
        ("tol_quad_abs", "tol_quad_abs"),
        ("tol_quad_rel", "tol_quad_rel"),
        ("checker_n", "checker_n"),
    ):
        val = getattr(args, flag)
        if val is not None:
            merged[key] = val
    merged["tol_scale"] = merged["tol_scale"] * _env_tol_scale()
    return SweepConfig.from_dict(merged)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _verify_config(args)
    report = run_verify(cfg)
    _emit(report.to_json() if args.format == "json" else report.to_csv(), args.out)
    by_variant = report.summary["violations_by_variant"]
    unexpected = report.summary["identity_failures"] > 0
    unexpected = unexpected or by_variant.get("symmetric_corrected", 0) > 0
    if not args.expect_violations:
        unexpected = unexpected or by_variant.get("as_stated", 0) > 0
    return 1 if unexpected else 0


def _cmd_constants(args: argparse.Namespace) -> int:
    report = run_constants(args.alpha, args.lam, args.q, args.r, args.which)
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_checkfn(args: argparse.Namespace) -> int:
    lo, hi = args.domain
    report = run_checkfn(args.fn, lo, hi, args.n, args.mode, seed=args.seed)
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    # the verdict is data, not a failure signal
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "constants":
            return _cmd_constants(args)
        return _cmd_checkfn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadratureError as exc:
        print(f"quadrature failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
