"""Closed-form kernel moments and their brute-force quadrature oracle.

The moments are weighted integrals of |t^alpha - lam| against the squared
harmonic-interpolation denominator:

  c1(alpha, lam)       = int_0^1 |t^alpha - lam| dt
  c2(alpha, lam, q, r) = x^{2q} int_0^1 |t^alpha - lam| (ta + (1-t)x)^{-2q} dt,  r = a/x
  c3(alpha, lam, q, r) = b^{2q} int_0^1 |t^alpha - lam| (tb + (1-t)x)^{-2q} dt,  r = x/b

Both c2 and c3 depend on the endpoints only through the ratio r in (0, 1].
The closed forms split the integral at the kink t = lam^(1/alpha) and resolve
each piece through 2F1; every identity here is pinned against `kernel_oracle`
by the tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .quad import QuadSpec, integrate
from .specialfn import HypParams, hyp2f1

__all__ = ["KernelArgs", "c1", "c2", "c3", "c3_as_stated", "kernel_oracle"]


@dataclass(frozen=True)
class KernelArgs:
    """Validated moment arguments: alpha > 0, lam in [0,1], q >= 1, r in (0,1]."""

    alpha: float
    lam: float
    q: float
    r: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"require alpha > 0, got {self.alpha}")
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError(f"require lam in [0, 1], got {self.lam}")
        if not (math.isfinite(self.q) and self.q >= 1.0):
            raise ValueError(f"require q >= 1, got {self.q}")
        if not 0.0 < self.r <= 1.0:
            raise ValueError(f"require r in (0, 1], got {self.r}")


def c1(alpha: float, lam: float) -> float:
    """int_0^1 |t^alpha - lam| dt."""
    KernelArgs(alpha, lam, 1.0, 1.0)
    if lam == 0.0:
        return 1.0 / (alpha + 1.0)
    return (2.0 * alpha * lam ** (1.0 + 1.0 / alpha) + 1.0) / (alpha + 1.0) - lam


def c2(alpha: float, lam: float, q: float, r: float) -> float:
    """Closed form of the left-brace moment; r = a/x."""
    KernelArgs(alpha, lam, q, r)
    z1 = 1.0 - r
    main = hyp2f1(HypParams(2.0 * q, alpha + 1.0, alpha + 2.0, z1)) / (alpha + 1.0)
    if lam == 0.0:
        return main
    main -= lam * hyp2f1(HypParams(2.0 * q, 1.0, 2.0, z1))
    m = lam ** (1.0 / alpha)
    z2 = m * (1.0 - r)
    corr = 2.0 * lam ** (1.0 + 1.0 / alpha) * (
        hyp2f1(HypParams(2.0 * q, 1.0, 2.0, z2))
        - hyp2f1(HypParams(2.0 * q, alpha + 1.0, alpha + 2.0, z2)) / (alpha + 1.0)
    )
    return main + corr


def c3(alpha: float, lam: float, q: float, r: float) -> float:
    """Closed form of the right-brace moment; r = x/b.

    The interior-lam correction rescales the denominator to the kink point:
    with m = lam^(1/alpha) and s = r + m(1-r), the correction is
    2 lam^(1+1/alpha) s^{-2q} [2F1(2q,1;2;z3) - 2F1(2q,1;alpha+2;z3)/(alpha+1)],
    z3 = m(1-r)/s.  See c3_as_stated for the form without the rescaling.
    """
    KernelArgs(alpha, lam, q, r)
    z1 = 1.0 - r
    main = hyp2f1(HypParams(2.0 * q, 1.0, alpha + 2.0, z1)) / (alpha + 1.0)
    if lam == 0.0:
        return main
    main -= lam * hyp2f1(HypParams(2.0 * q, 1.0, 2.0, z1))
    m = lam ** (1.0 / alpha)
    s = r + m * (1.0 - r)
    z3 = m * (1.0 - r) / s
    corr = 2.0 * lam ** (1.0 + 1.0 / alpha) * s ** (-2.0 * q) * (
        hyp2f1(HypParams(2.0 * q, 1.0, 2.0, z3))
        - hyp2f1(HypParams(2.0 * q, 1.0, alpha + 2.0, z3)) / (alpha + 1.0)
    )
    return main + corr


def c3_as_stated(alpha: float, lam: float, q: float, r: float) -> float:
    """Right-brace moment with the unrescaled correction term.

    Diverges from kernel_oracle for 0 < lam < 1 (e.g. alpha=1, lam=1/2, q=1,
    r=1/2: 0.38629 here vs 0.52887 from the integral); agrees at lam in {0,1}.
    Kept for comparison runs only; c3 is the form the bounds use.
    """
    KernelArgs(alpha, lam, q, r)
    z1 = 1.0 - r
    main = hyp2f1(HypParams(2.0 * q, 1.0, alpha + 2.0, z1)) / (alpha + 1.0)
    if lam == 0.0:
        return main
    main -= lam * hyp2f1(HypParams(2.0 * q, 1.0, 2.0, z1))
    corr = 2.0 * lam ** (1.0 + 1.0 / alpha) * (
        hyp2f1(HypParams(2.0 * q, 1.0, 2.0, z1))
        - hyp2f1(HypParams(2.0 * q, 1.0, alpha + 2.0, z1)) / (alpha + 1.0)
    )
    return main + corr


def kernel_oracle(
    alpha: float,
    lam: float,
    q: float,
    u: float,
    v: float,
    *,
    split_at_kink: bool = True,
    abs_tol: float = 1e-11,
    rel_tol: float = 1e-10,
    max_depth: int = 60,
) -> float:
    """Adaptive quadrature of int_0^1 |t^alpha - lam| (tu + (1-t)v)^{-2q} dt.

    Independent of the closed forms: no 2F1 involved.  The integrand has a
    kink at t = lam^(1/alpha); splitting there is the default and a no-split
    run is kept as a robustness cross-check.
    """
    if not (math.isfinite(u) and u > 0.0 and math.isfinite(v) and v > 0.0):
        raise ValueError(f"require positive endpoints, got u={u}, v={v}")
    KernelArgs(alpha, lam, q, min(u, v) / max(u, v))

    def f(t: float) -> float:
        return abs(t**alpha - lam) / (t * u + (1.0 - t) * v) ** (2.0 * q)

    kink = lam ** (1.0 / alpha) if 0.0 < lam < 1.0 else None
    if split_at_kink and kink is not None and 0.0 < kink < 1.0:
        left = integrate(f, QuadSpec(0.0, kink, abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth))
        right = integrate(f, QuadSpec(kink, 1.0, abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth))
        return left + right
    return integrate(f, QuadSpec(0.0, 1.0, abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth))
