"""Gamma, beta, and the Gauss hypergeometric function 2F1 on the real slice used here.

2F1 has two independent routes: the defining power series and the Euler
integral representation evaluated with this package's own quadrature.  Both
are exposed so cross-checks between them stay meaningful; `hyp2f1` picks the
series away from z = 1 and the integral close to it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .quad import QuadSpec, SingularWeight, integrate, integrate_singular

__all__ = ["HypParams", "gamma", "beta", "hyp2f1", "hyp2f1_series", "hyp2f1_integral"]

_SERIES_TERM_CUTOFF = 1e-16
_SERIES_MAX_TERMS = 10_000
_SERIES_Z_LIMIT = 0.9
_INNER_SPEC_ARGS = {"abs_tol": 1e-14, "rel_tol": 1e-12, "max_depth": 60}


@dataclass(frozen=True)
class HypParams:
    """Arguments of 2F1(a, b; c; z) restricted to c > b > 0 and 0 <= z < 1."""

    a: float
    b: float
    c: float
    z: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "z"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"hyp2f1 parameter {name} must be finite")
        if not self.c > self.b > 0.0:
            raise ValueError(f"hyp2f1 requires c > b > 0, got b={self.b}, c={self.c}")
        if not 0.0 <= self.z < 1.0:
            raise ValueError(f"hyp2f1 defined for z in [0, 1), got z={self.z}")


def gamma(x: float) -> float:
    """Gamma function for x > 0."""
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"gamma requires x > 0, got {x}")
    return math.gamma(x)


def beta(x: float, y: float) -> float:
    """Euler beta function for x, y > 0, computed in log space."""
    if not (math.isfinite(x) and x > 0.0 and math.isfinite(y) and y > 0.0):
        raise ValueError(f"beta requires x, y > 0, got ({x}, {y})")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def hyp2f1_series(p: HypParams) -> float:
    """2F1 by its power series; terms stop at 1e-16 relative."""
    term = 1.0
    total = 1.0
    for n in range(_SERIES_MAX_TERMS):
        term *= (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1.0)) * p.z
        total += term
        if abs(term) <= _SERIES_TERM_CUTOFF * abs(total):
            return total
    raise RuntimeError(f"2F1 series did not converge within {_SERIES_MAX_TERMS} terms for {p}")


def hyp2f1_integral(p: HypParams) -> float:
    """2F1 by the Euler integral, split at 1/2 so each endpoint weight is declared.

    int_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt / beta(b, c-b).  A weight
    exponent below 1 is integrable-singular and goes through the exact
    substitution; at or above 1 the factor is sampled directly.
    """
    a, b, cb, z = p.a, p.b, p.c - p.b, p.z

    def full(t: float) -> float:
        return t ** (b - 1.0) * (1.0 - t) ** (cb - 1.0) * (1.0 - z * t) ** (-a)

    if b < 1.0:
        low = integrate_singular(
            lambda t: (1.0 - t) ** (cb - 1.0) * (1.0 - z * t) ** (-a),
            SingularWeight(b, "lower"),
            QuadSpec(0.0, 0.5, **_INNER_SPEC_ARGS),
        )
    else:
        low = integrate(full, QuadSpec(0.0, 0.5, **_INNER_SPEC_ARGS))
    if cb < 1.0:
        high = integrate_singular(
            lambda t: t ** (b - 1.0) * (1.0 - z * t) ** (-a),
            SingularWeight(cb, "upper"),
            QuadSpec(0.5, 1.0, **_INNER_SPEC_ARGS),
        )
    else:
        high = integrate(full, QuadSpec(0.5, 1.0, **_INNER_SPEC_ARGS))
    return (low + high) / beta(b, cb)


def hyp2f1(p: HypParams) -> float:
    """2F1(a, b; c; z): series for z <= 0.9, Euler integral above."""
    if p.z <= _SERIES_Z_LIMIT:
        return hyp2f1_series(p)
    return hyp2f1_integral(p)
