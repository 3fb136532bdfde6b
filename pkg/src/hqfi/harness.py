"""Campaign orchestration: parameter sweeps, constant cross-checks, report emission.

`run_verify` walks a SweepConfig grid, evaluating the identity residual once
per (function, a, b, x, lam, alpha) and every applicable bound per theorem and
variant on top of it.  Bound families are only asserted where their hypothesis
holds: |f'|^q is re-checked for harmonic quasi-convexity per (function,
interval, q), and failing combinations contribute identity records only
(counted in summary.bound_skips).

`run_constants` puts the closed-form kernel moments next to their quadrature
oracles; `run_checkfn` exposes the convexity checkers over corpus names or a
tiny expression grammar.  All three return plain dicts/records so the CLI can
serialize them; JSON output is canonical (sorted keys) and runs are
deterministic given the config, apart from the generated_at timestamp.
"""
from __future__ import annotations

import json
import math
import operator
import re
from dataclasses import dataclass, fields
from datetime import datetime, timezone
from typing import Callable

from .bounds import ParamPoint, Theorem, Variant, bound_t22, bound_t23, bound_t24, identity_lhs, identity_rhs
from .harmonic import (
    IntervalDomain,
    ScalarFunction,
    abs_derivative_power,
    check_harmonically_convex,
    check_harmonically_quasiconvex,
    validate_corpus,
)
from .kernels import c1, c2, c3, kernel_oracle
from .quad import QuadSpec, QuadratureError, integrate

__all__ = [
    "TOOL_VERSION",
    "SweepConfig",
    "CampaignReport",
    "variants_for",
    "run_verify",
    "run_constants",
    "run_checkfn",
]

TOOL_VERSION = "0.1.0"

_X_MODES = ("h_point", "grid", "explicit")
_VARIANT_SELECTORS = ("as_stated", "symmetric_corrected", "both")
_WHICH = ("c1", "c2", "c3", "all")
_CHECK_MODES = ("quasi", "convex")

_CSV_COLUMNS = (
    "kind",
    "function",
    "a",
    "b",
    "x",
    "lam",
    "alpha",
    "q",
    "theorem",
    "variant",
    "lhs_abs",
    "bound",
    "slack",
    "holds",
    "identity_residual",
    "lhs",
    "rhs",
    "residual",
    "residual_scaled",
    "ok",
)


def variants_for(selector: str) -> tuple[Variant, ...]:
    """Expand a config/CLI variant selector into the concrete sweep tuple."""
    if selector == "both":
        return (Variant.AS_STATED, Variant.SYMMETRIC_CORRECTED)
    return (Variant(selector),)


@dataclass(frozen=True)
class SweepConfig:
    """Grid and tolerance settings for one verification campaign.

    `functions` is either the string "all" or a tuple of corpus labels.
    `x_mode` picks evaluation points per interval: the harmonic mean
    ("h_point"), an inclusive equispaced grid of x_count points ("grid"),
    or the literal x_values ("explicit", each value must lie inside every
    swept interval).  tol_scale multiplies every tolerance in the config;
    the CLI wires HQFI_TOL_SCALE into it.
    """

    intervals: tuple[tuple[float, float], ...] = ((1.0, 2.0),)
    x_mode: str = "h_point"
    x_count: int = 5
    x_values: tuple[float, ...] = ()
    lambdas: tuple[float, ...] = (0.0, 1.0 / 3.0, 0.5, 1.0)
    alphas: tuple[float, ...] = (0.5, 1.0, 2.0)
    qs: tuple[float, ...] = (1.0, 2.0)
    functions: tuple[str, ...] | str = "all"
    variant: str = "symmetric_corrected"
    seed: int = 0
    tol_identity: float = 1e-8
    tol_slack: float = 1e-9
    tol_quad_abs: float = 1e-11
    tol_quad_rel: float = 1e-10
    checker_n: int = 15
    tol_scale: float = 1.0

    def __post_init__(self) -> None:
        try:
            ivals = tuple((float(a), float(b)) for a, b in self.intervals)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"intervals must be (a, b) pairs: {exc}") from exc
        object.__setattr__(self, "intervals", ivals)
        object.__setattr__(self, "x_values", tuple(float(v) for v in self.x_values))
        object.__setattr__(self, "lambdas", tuple(float(v) for v in self.lambdas))
        object.__setattr__(self, "alphas", tuple(float(v) for v in self.alphas))
        object.__setattr__(self, "qs", tuple(float(v) for v in self.qs))
        if self.functions != "all":
            object.__setattr__(self, "functions", tuple(str(s) for s in self.functions))
        object.__setattr__(self, "x_count", int(self.x_count))
        object.__setattr__(self, "checker_n", int(self.checker_n))
        object.__setattr__(self, "seed", int(self.seed))

        if not self.intervals:
            raise ValueError("need at least one interval")
        for a, b in self.intervals:
            if not (math.isfinite(a) and math.isfinite(b) and 0.0 < a < b):
                raise ValueError(f"intervals need 0 < a < b, got ({a}, {b})")
        if self.x_mode not in _X_MODES:
            raise ValueError(f"x_mode must be one of {_X_MODES}, got {self.x_mode!r}")
        if self.x_mode == "grid" and self.x_count < 2:
            raise ValueError(f"grid x_mode needs x_count >= 2, got {self.x_count}")
        if self.x_mode == "explicit" and not self.x_values:
            raise ValueError("explicit x_mode needs a non-empty x_values list")
        if not self.lambdas or any(not (math.isfinite(v) and 0.0 <= v <= 1.0) for v in self.lambdas):
            raise ValueError(f"lambdas must be a non-empty list within [0, 1], got {self.lambdas}")
        if not self.alphas or any(not (math.isfinite(v) and v > 0.0) for v in self.alphas):
            raise ValueError(f"alphas must be a non-empty list of positive reals, got {self.alphas}")
        if not self.qs or any(not (math.isfinite(v) and v >= 1.0) for v in self.qs):
            raise ValueError(f"qs must be a non-empty list of reals >= 1, got {self.qs}")
        if self.functions != "all" and not self.functions:
            raise ValueError("functions selection is empty; use \"all\" or a list of labels")
        if self.variant not in _VARIANT_SELECTORS:
            raise ValueError(f"variant must be one of {_VARIANT_SELECTORS}, got {self.variant!r}")
        for name in ("tol_identity", "tol_slack", "tol_quad_abs", "tol_quad_rel", "tol_scale"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be a positive real, got {v!r}")
        if self.checker_n < 2:
            raise ValueError(f"checker_n must be >= 2, got {self.checker_n}")

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(d) - known)
        if unknown:
            raise ValueError(f"unknown config keys: {unknown}")
        return cls(**d)

    def to_dict(self) -> dict:
        return {
            "intervals": [list(iv) for iv in self.intervals],
            "x_mode": self.x_mode,
            "x_count": self.x_count,
            "x_values": list(self.x_values),
            "lambdas": list(self.lambdas),
            "alphas": list(self.alphas),
            "qs": list(self.qs),
            "functions": "all" if self.functions == "all" else list(self.functions),
            "variant": self.variant,
            "seed": self.seed,
            "tol_identity": self.tol_identity,
            "tol_slack": self.tol_slack,
            "tol_quad_abs": self.tol_quad_abs,
            "tol_quad_rel": self.tol_quad_rel,
            "checker_n": self.checker_n,
            "tol_scale": self.tol_scale,
        }


@dataclass(frozen=True)
class CampaignReport:
    """One run_verify result: records plus a self-consistent summary block."""

    version: str
    generated_at: str
    config: dict
    records: list
    identity_records: list
    violations: list
    summary: dict

    def to_payload(self) -> dict:
        return {
            "version": self.version,
            "generated_at": self.generated_at,
            "config": self.config,
            "records": self.records,
            "identity_records": self.identity_records,
            "violations": self.violations,
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        # one flat table: identity rows first, then bound rows; absent fields
        # stay empty so both record shapes share the header
        def fmt(v) -> str:
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return repr(v) if isinstance(v, float) else str(v)

        lines = [",".join(_CSV_COLUMNS)]
        for rec in self.identity_records:
            row = dict(rec, kind="identity")
            lines.append(",".join(fmt(row.get(col)) for col in _CSV_COLUMNS))
        for rec in self.records:
            row = dict(rec, kind="bound")
            lines.append(",".join(fmt(row.get(col)) for col in _CSV_COLUMNS))
        return "\n".join(lines) + "\n"


_CORPUS_CACHE: list[ScalarFunction] | None = None


def _validated_corpus() -> list[ScalarFunction]:
    # validate_corpus re-proves every quasi tag; do that once per process
    global _CORPUS_CACHE
    if _CORPUS_CACHE is None:
        _CORPUS_CACHE = validate_corpus()
    return _CORPUS_CACHE


def _select_functions(cfg: SweepConfig) -> list[ScalarFunction]:
    fns = _validated_corpus()
    if cfg.functions == "all":
        return list(fns)
    by_label = {f.label: f for f in fns}
    missing = [name for name in cfg.functions if name not in by_label]
    if missing:
        raise ValueError(f"unknown corpus functions {missing}; available: {sorted(by_label)}")
    return [by_label[name] for name in cfg.functions]


def _x_points(cfg: SweepConfig, a: float, b: float) -> tuple[float, ...]:
    if cfg.x_mode == "h_point":
        return (2.0 * a * b / (a + b),)
    if cfg.x_mode == "grid":
        step = (b - a) / (cfg.x_count - 1)
        return tuple(a + i * step for i in range(cfg.x_count - 1)) + (b,)
    for x in cfg.x_values:
        if not a <= x <= b:
            raise ValueError(f"explicit x={x} lies outside interval [{a}, {b}]")
    return cfg.x_values


def _case_error(exc: QuadratureError, **ctx) -> QuadratureError:
    detail = ", ".join(f"{k}={v}" for k, v in ctx.items())
    return QuadratureError(f"{exc} [case: {detail}]")


def run_verify(cfg: SweepConfig) -> CampaignReport:
    """Evaluate identity residuals and all applicable bounds over the config grid."""
    fns = _select_functions(cfg)
    variants = variants_for(cfg.variant)
    quad_args = {
        "abs_tol": cfg.tol_quad_abs * cfg.tol_scale,
        "rel_tol": cfg.tol_quad_rel * cfg.tol_scale,
    }
    id_tol = cfg.tol_identity * cfg.tol_scale
    slack_tol = cfg.tol_slack * cfg.tol_scale

    records: list[dict] = []
    identity_records: list[dict] = []
    violations: list[int] = []
    identity_by_key: dict[tuple, dict] = {}
    hypothesis_ok: dict[tuple, bool] = {}
    bound_skips = 0

    for a, b in cfg.intervals:
        domain = IntervalDomain(a, b)
        eligible = [f for f in fns if f.domain.encloses(domain)]
        if not eligible:
            raise ValueError(f"no selected function covers interval [{a}, {b}]")
        xs = _x_points(cfg, a, b)
        for f in eligible:
            for x in xs:
                for lam in cfg.lambdas:
                    for alpha in cfg.alphas:
                        key = (f.label, a, b, x, lam, alpha)
                        ident = identity_by_key.get(key)
                        if ident is None:
                            pt0 = ParamPoint(a, b, x, lam, alpha, 1.0)
                            try:
                                lhs = identity_lhs(f, pt0, **quad_args)
                                rhs = identity_rhs(f, pt0, **quad_args)
                            except QuadratureError as exc:
                                raise _case_error(exc, function=f.label, a=a, b=b, x=x, lam=lam, alpha=alpha) from exc
                            residual = abs(lhs - rhs)
                            scaled = residual / (1.0 + abs(lhs))
                            ident = {
                                "function": f.label,
                                "a": a,
                                "b": b,
                                "x": x,
                                "lam": lam,
                                "alpha": alpha,
                                "lhs": lhs,
                                "rhs": rhs,
                                "residual": residual,
                                "residual_scaled": scaled,
                                "ok": scaled <= id_tol,
                            }
                            identity_by_key[key] = ident
                            identity_records.append(ident)
                        lhs_abs = abs(ident["lhs"])
                        for q in cfg.qs:
                            hyp_key = (f.label, a, b, q)
                            passed = hypothesis_ok.get(hyp_key)
                            if passed is None:
                                verdict = check_harmonically_quasiconvex(
                                    abs_derivative_power(f, q), domain, n=cfg.checker_n, seed=cfg.seed
                                )
                                passed = not verdict.violated
                                hypothesis_ok[hyp_key] = passed
                            if not passed:
                                bound_skips += 1
                                continue
                            pt = ParamPoint(a, b, x, lam, alpha, q)
                            for theorem in (Theorem.T22, Theorem.T23, Theorem.T24):
                                if theorem is Theorem.T24 and q <= 1.0:
                                    continue
                                for variant in variants:
                                    if theorem is Theorem.T22:
                                        bound = bound_t22(f, pt, variant)
                                    elif theorem is Theorem.T23:
                                        bound = bound_t23(f, pt, variant)
                                    else:
                                        bound = bound_t24(f, pt, variant=variant)
                                    slack = bound - lhs_abs
                                    holds = slack >= -slack_tol
                                    if not holds:
                                        violations.append(len(records))
                                    records.append(
                                        {
                                            "function": f.label,
                                            "a": a,
                                            "b": b,
                                            "x": x,
                                            "lam": lam,
                                            "alpha": alpha,
                                            "q": q,
                                            "theorem": theorem.value,
                                            "variant": variant.value,
                                            "lhs_abs": lhs_abs,
                                            "bound": bound,
                                            "slack": slack,
                                            "holds": holds,
                                            "identity_residual": ident["residual_scaled"],
                                        }
                                    )

    by_variant = {v.value: 0 for v in variants}
    min_slack: dict[str, float | None] = {v.value: None for v in variants}
    for rec in records:
        name = rec["variant"]
        if not rec["holds"]:
            by_variant[name] += 1
        cur = min_slack[name]
        if cur is None or rec["slack"] < cur:
            min_slack[name] = rec["slack"]
    summary = {
        "cases": len(records),
        "identity_cases": len(identity_records),
        "violations": len(violations),
        "violations_by_variant": by_variant,
        "identity_failures": sum(1 for r in identity_records if not r["ok"]),
        "max_identity_residual": max((r["residual_scaled"] for r in identity_records), default=0.0),
        "min_slack_by_variant": min_slack,
        "bound_skips": bound_skips,
    }
    return CampaignReport(
        version=TOOL_VERSION,
        generated_at=datetime.now(timezone.utc).isoformat(),
        config=cfg.to_dict(),
        records=records,
        identity_records=identity_records,
        violations=violations,
        summary=summary,
    )


def _c1_oracle(alpha: float, lam: float, spec_args: dict) -> float:
    def f(t: float) -> float:
        return abs(t**alpha - lam)

    kink = lam ** (1.0 / alpha) if 0.0 < lam < 1.0 else None
    if kink is not None and 0.0 < kink < 1.0:
        return integrate(f, QuadSpec(0.0, kink, **spec_args)) + integrate(f, QuadSpec(kink, 1.0, **spec_args))
    return integrate(f, QuadSpec(0.0, 1.0, **spec_args))


def _delta_block(closed: float, oracle: float) -> dict:
    abs_delta = abs(closed - oracle)
    return {
        "closed": closed,
        "oracle": oracle,
        "abs_delta": abs_delta,
        "rel_delta": abs_delta / max(abs(oracle), 1e-300),
    }


def run_constants(alpha: float, lam: float, q: float, r: float, which: str = "all") -> dict:
    """Closed-form c1/c2/c3 next to their quadrature oracles, with deltas.

    The c2 oracle integrates with endpoints (u, v) = (r, 1) and the c3 oracle
    with (1, r); both normalizing prefactors are 1 at those endpoints, so the
    oracle integral compares directly against the closed form.
    """
    if which not in _WHICH:
        raise ValueError(f"which must be one of {_WHICH}, got {which!r}")
    spec_args = {"abs_tol": 1e-11, "rel_tol": 1e-10}
    results = {}
    if which in ("c1", "all"):
        results["c1"] = _delta_block(c1(alpha, lam), _c1_oracle(alpha, lam, spec_args))
    if which in ("c2", "all"):
        results["c2"] = _delta_block(c2(alpha, lam, q, r), kernel_oracle(alpha, lam, q, r, 1.0))
    if which in ("c3", "all"):
        results["c3"] = _delta_block(c3(alpha, lam, q, r), kernel_oracle(alpha, lam, q, 1.0, r))
    return {"alpha": alpha, "lam": lam, "q": q, "r": r, "which": which, "results": results}


# --- checkfn: corpus lookup plus a deliberately tiny expression grammar ---
#   expr  := term (('+'|'-') term)*
#   term  := unary (('*'|'/') unary)*
#   unary := '-' unary | power
#   power := atom (('**'|'^') unary)?          (right-associative)
#   atom  := NUMBER | 'x' | 'u' | ('ln'|'exp'|'sqrt') '(' expr ')' | '(' expr ')'

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[-+*/^()]))"
)

_FUNCS: dict[str, Callable[[float], float]] = {"ln": math.log, "exp": math.exp, "sqrt": math.sqrt}
_VARS = ("x", "u")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot tokenize expression at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


class _ExprParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> str | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return None

    def _next(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, text: str) -> None:
        if self._peek() != text:
            raise ValueError(f"expected {text!r} at token {self.pos} of expression")
        self._next()

    def parse(self) -> Callable[[float], float]:
        node = self._expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"trailing tokens in expression: {self.tokens[self.pos:]}")
        return node

    def _expr(self) -> Callable[[float], float]:
        node = self._term()
        while self._peek() in ("+", "-"):
            op = operator.add if self._next()[1] == "+" else operator.sub
            node = _bin(op, node, self._term())
        return node

    def _term(self) -> Callable[[float], float]:
        node = self._unary()
        while self._peek() in ("*", "/"):
            op = operator.mul if self._next()[1] == "*" else operator.truediv
            node = _bin(op, node, self._unary())
        return node

    def _unary(self) -> Callable[[float], float]:
        if self._peek() == "-":
            self._next()
            inner = self._unary()
            return lambda u: -inner(u)
        return self._power()

    def _power(self) -> Callable[[float], float]:
        node = self._atom()
        if self._peek() in ("**", "^"):
            self._next()
            exponent = self._unary()
            return _bin(operator.pow, node, exponent)
        return node

    def _atom(self) -> Callable[[float], float]:
        if self.pos >= len(self.tokens):
            raise ValueError("expression ended unexpectedly")
        kind, text = self._next()
        if kind == "num":
            val = float(text)
            return lambda u: val
        if kind == "name":
            if text in _VARS:
                return lambda u: u
            fn = _FUNCS.get(text)
            if fn is None:
                raise ValueError(f"unknown identifier {text!r}; variables are {_VARS}, functions {sorted(_FUNCS)}")
            self._expect("(")
            inner = self._expr()
            self._expect(")")
            return _bin_unary(fn, inner)
        if text == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        raise ValueError(f"unexpected token {text!r} in expression")


def _bin(op, left, right):
    return lambda u: op(left(u), right(u))


def _bin_unary(fn, inner):
    return lambda u: fn(inner(u))


def _resolve_function(name_or_expr: str, domain: IntervalDomain) -> ScalarFunction:
    for f in _validated_corpus():
        if f.label == name_or_expr:
            return f
    compiled = _ExprParser(name_or_expr).parse()
    return ScalarFunction(name_or_expr, domain, compiled)


def run_checkfn(fn: str, lo: float, hi: float, n: int, mode: str, seed: int = 0) -> dict:
    """Run a convexity checker over a corpus function or parsed expression."""
    if mode not in _CHECK_MODES:
        raise ValueError(f"mode must be one of {_CHECK_MODES}, got {mode!r}")
    domain = IntervalDomain(lo, hi)
    f = _resolve_function(fn, domain)
    check = check_harmonically_quasiconvex if mode == "quasi" else check_harmonically_convex
    verdict = check(f, domain, n=n, seed=seed)
    return {
        "function": f.label,
        "domain": [domain.lo, domain.hi],
        "mode": mode,
        "n": n,
        "seed": seed,
        "status": verdict.status,
        "witness": list(verdict.witness) if verdict.witness is not None else None,
        "samples_checked": verdict.samples_checked,
    }
