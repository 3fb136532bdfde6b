"""Harmonic convexity checkers and the reference function corpus.

A function f on a positive interval is harmonically convex when
f(xy/(lx + (1-l)y)) <= l*f(y) + (1-l)*f(x) for all x, y in the interval and
l in [0,1]; replacing the right side with max(f(x), f(y)) gives the weaker
quasi-convex property.  The checkers refute by sampling: a returned violation
is a certificate, a clean pass is only grid evidence.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Mapping

__all__ = [
    "NO_VIOLATION",
    "VIOLATED",
    "IntervalDomain",
    "ScalarFunction",
    "ConvexityVerdict",
    "check_harmonically_convex",
    "check_harmonically_quasiconvex",
    "abs_derivative_power",
    "corpus",
    "validate_corpus",
]

NO_VIOLATION = "no_violation_found"
VIOLATED = "violated"

_VIOLATION_MARGIN = 1e-12
_CBRT_EPS = 6.0554544523933395e-06  # cube root of 2^-52, central-difference step scale
_RANDOM_FACTOR = 10  # random triples per grid row: 10*n


@dataclass(frozen=True)
class IntervalDomain:
    """Closed positive interval [lo, hi] with 0 < lo < hi."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("domain endpoints must be finite")
        if not 0.0 < self.lo < self.hi:
            raise ValueError(f"require 0 < lo < hi, got [{self.lo}, {self.hi}]")

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "IntervalDomain") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


@dataclass(frozen=True, eq=False)
class ScalarFunction:
    """A labelled real function on a positive interval.

    `derivative` is optional; when absent, df falls back to a central
    difference with step h = cbrt(eps) * max(1, |x|).  `quasi_tags` records,
    per exponent q, whether |f'|^q is harmonically quasi-convex on `domain`;
    tags are validated against the checker by `validate_corpus`.
    """

    label: str
    domain: IntervalDomain
    value: Callable[[float], float]
    derivative: Callable[[float], float] | None = None
    quasi_tags: Mapping[float, bool] = field(default_factory=dict)

    def __call__(self, x: float) -> float:
        return self.value(x)

    def df(self, x: float) -> float:
        if self.derivative is not None:
            return self.derivative(x)
        h = _CBRT_EPS * max(1.0, abs(x))
        return (self.value(x + h) - self.value(x - h)) / (2.0 * h)


@dataclass(frozen=True)
class ConvexityVerdict:
    """Checker outcome: status, first witness triple (x, y, l) if violated, sample count."""

    status: str
    witness: tuple[float, float, float] | None
    samples_checked: int

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED


def _harmonic_mix(x: float, y: float, lam: float) -> float:
    return x * y / (lam * x + (1.0 - lam) * y)


def _scan(
    f: ScalarFunction,
    d: IntervalDomain,
    n: int,
    seed: int,
    rhs: Callable[[float, float, float], float],
) -> ConvexityVerdict:
    if n < 2:
        raise ValueError(f"checker grid needs n >= 2, got {n}")
    if not f.domain.encloses(d):
        raise ValueError(f"check domain [{d.lo}, {d.hi}] escapes {f.label} domain")
    step = (d.hi - d.lo) / (n - 1)
    grid = [d.lo + i * step for i in range(n)]
    lams = [i / (n - 1.0) for i in range(n)]
    checked = 0
    for x in grid:
        fx = f(x)
        for y in grid:
            fy = f(y)
            for lam in lams:
                checked += 1
                lhs = f(_harmonic_mix(x, y, lam))
                if lhs > rhs(fx, fy, lam) + _VIOLATION_MARGIN:
                    return ConvexityVerdict(VIOLATED, (x, y, lam), checked)
    rng = random.Random(seed)
    for _ in range(_RANDOM_FACTOR * n):
        x = rng.uniform(d.lo, d.hi)
        y = rng.uniform(d.lo, d.hi)
        lam = rng.random()
        checked += 1
        lhs = f(_harmonic_mix(x, y, lam))
        if lhs > rhs(f(x), f(y), lam) + _VIOLATION_MARGIN:
            return ConvexityVerdict(VIOLATED, (x, y, lam), checked)
    return ConvexityVerdict(NO_VIOLATION, None, checked)


def check_harmonically_convex(
    f: ScalarFunction, d: IntervalDomain | None = None, n: int = 20, seed: int = 0
) -> ConvexityVerdict:
    """Grid-plus-random refutation of f(mix) <= l*f(y) + (1-l)*f(x)."""
    return _scan(f, d or f.domain, n, seed, lambda fx, fy, lam: lam * fy + (1.0 - lam) * fx)


def check_harmonically_quasiconvex(
    f: ScalarFunction, d: IntervalDomain | None = None, n: int = 20, seed: int = 0
) -> ConvexityVerdict:
    """Grid-plus-random refutation of f(mix) <= max(f(x), f(y))."""
    return _scan(f, d or f.domain, n, seed, lambda fx, fy, lam: max(fx, fy))


def abs_derivative_power(f: ScalarFunction, q: float) -> ScalarFunction:
    """|f'|^q as a ScalarFunction on the same domain (the bound hypotheses act on this)."""
    if not (math.isfinite(q) and q >= 1.0):
        raise ValueError(f"require q >= 1, got {q}")
    return ScalarFunction(
        label=f"|{f.label}'|^{q:g}",
        domain=f.domain,
        value=lambda u: abs(f.df(u)) ** q,
    )


def _piecewise_value(u: float) -> float:
    return 1.0 if u <= 1.0 else (u - 2.0) ** 2


def _piecewise_deriv(u: float) -> float:
    # right-branch value at the kink: the correct one-sided sup on [1, b]
    return 0.0 if u < 1.0 else 2.0 * (u - 2.0)


def corpus() -> list[ScalarFunction]:
    """Reference functions, each tagged with |f'|^q quasi-convexity at q in {1, 2}."""
    both_true = {1.0: True, 2.0: True}
    unit = IntervalDomain(1.0, 2.0)
    return [
        ScalarFunction("const_zero", unit, lambda u: 0.0, lambda u: 0.0, both_true),
        ScalarFunction("const_3_2", unit, lambda u: 1.5, lambda u: 0.0, both_true),
        ScalarFunction("identity", unit, lambda u: u, lambda u: 1.0, both_true),
        ScalarFunction("square", unit, lambda u: u * u, lambda u: 2.0 * u, both_true),
        ScalarFunction("reciprocal", unit, lambda u: 1.0 / u, lambda u: -1.0 / (u * u), both_true),
        ScalarFunction("xlnx", unit, lambda u: u * math.log(u), lambda u: math.log(u) + 1.0, both_true),
        ScalarFunction("expx", unit, lambda u: math.exp(u), math.exp, both_true),
        ScalarFunction("sqrtx", unit, math.sqrt, lambda u: 0.5 / math.sqrt(u), both_true),
        # quasi-convex but not harmonically convex; |f'|^q has disconnected
        # sublevel sets on the full domain, hence the False tags
        ScalarFunction(
            "piecewise_plateau",
            IntervalDomain(0.1, 4.0),
            _piecewise_value,
            _piecewise_deriv,
            {1.0: False, 2.0: False},
        ),
    ]


def validate_corpus(n: int = 25, seed: int = 0) -> list[ScalarFunction]:
    """Corpus with every quasi_tags entry re-proven by the checker; raises on mismatch."""
    fns = corpus()
    for f in fns:
        for q, claimed in f.quasi_tags.items():
            verdict = check_harmonically_quasiconvex(abs_derivative_power(f, q), f.domain, n=n, seed=seed)
            if verdict.violated == claimed:
                raise RuntimeError(
                    f"corpus tag mismatch: {f.label} q={q} tagged {claimed}, "
                    f"checker says {verdict.status} (witness {verdict.witness})"
                )
    return fns
