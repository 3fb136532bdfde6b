"""The weighted fractional identity and the three bound families built on it.

For f differentiable on [a, b] in (0, inf), x in [a, b], lam in [0, 1] and
alpha > 0, the identity value is

  I(f; a, b, x, lam, alpha) =
      (1-lam) [wa + wb] f(x) + lam [wa f(a) + wb f(b)]
      - Gamma(alpha+1) [ J_{1/x+}^alpha (f o inv)(1/a) + J_{1/x-}^alpha (f o inv)(1/b) ]

with wa = ((x-a)/(ax))^alpha, wb = ((b-x)/(bx))^alpha and inv(t) = 1/t.
`identity_lhs` assembles exactly that; `identity_rhs` evaluates the equivalent
kernel-integral form, and the pair is the residual check the harness sweeps.

When |f'|^q is harmonically quasi-convex on [a, b], |I| is bounded by three
families (T22: power-mean, T23: its q=1 reduction shape, T24: Holder).  Each
family carries two variants: `symmetric_corrected` is the proof-faithful form
(denominators x^2, b^2; second sup over {|f'(x)|, |f'(b)|}); `as_stated`
reproduces the source text verbatim (denominators x^{2q}, b^{2q} and the
asymmetric second sup in T22), which is refutable and kept for counterexample
hunting.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .fracint import rl_left, rl_right
from .harmonic import IntervalDomain, ScalarFunction
from .kernels import c1, c2, c3
from .quad import QuadSpec, integrate
from .specialfn import gamma

__all__ = [
    "Theorem",
    "Variant",
    "ParamPoint",
    "HolderPair",
    "BoundReport",
    "identity_lhs",
    "identity_rhs",
    "bound_t22",
    "bound_t23",
    "bound_t24",
    "evaluate_bound",
    "specialize",
    "ostrowski_bound",
    "SPECIAL_KINDS",
]

_SLACK_TOL = 1e-9


class Theorem(str, enum.Enum):
    T22 = "T22"
    T23 = "T23"
    T24 = "T24"


class Variant(str, enum.Enum):
    AS_STATED = "as_stated"
    SYMMETRIC_CORRECTED = "symmetric_corrected"


SPECIAL_KINDS = ("simpson", "midpoint", "trapezoid", "ostrowski", "hadamard_weighted")


@dataclass(frozen=True)
class ParamPoint:
    """Evaluation point (a, b, x, lam, alpha, q) with 0 < a <= x <= b, a < b."""

    a: float
    b: float
    x: float
    lam: float
    alpha: float
    q: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b) and 0.0 < self.a < self.b):
            raise ValueError(f"require 0 < a < b, got a={self.a}, b={self.b}")
        if not self.a <= self.x <= self.b:
            raise ValueError(f"require x in [a, b], got x={self.x} outside [{self.a}, {self.b}]")
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError(f"require lam in [0, 1], got {self.lam}")
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"require alpha > 0, got {self.alpha}")
        if not (math.isfinite(self.q) and self.q >= 1.0):
            raise ValueError(f"require q >= 1, got {self.q}")

    @property
    def h_point(self) -> float:
        """Harmonic mean 2ab/(a+b) of the interval endpoints."""
        return 2.0 * self.a * self.b / (self.a + self.b)


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents with 1/p + 1/q = 1, both > 1."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.p) and self.p > 1.0 and math.isfinite(self.q) and self.q > 1.0):
            raise ValueError(f"require p, q > 1, got p={self.p}, q={self.q}")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise ValueError(f"require 1/p + 1/q = 1, got p={self.p}, q={self.q}")

    @classmethod
    def from_q(cls, q: float) -> "HolderPair":
        if not (math.isfinite(q) and q > 1.0):
            raise ValueError(f"conjugate exponent needs q > 1, got {q}")
        return cls(q / (q - 1.0), q)


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluation: |identity lhs| against a theorem bound."""

    theorem: Theorem
    variant: Variant
    lhs_abs: float
    bound: float
    slack: float
    holds: bool


def identity_lhs(
    f: ScalarFunction,
    p: ParamPoint,
    *,
    abs_tol: float = 1e-11,
    rel_tol: float = 1e-10,
    max_depth: int = 60,
) -> float:
    """Boundary/fractional assembly of the identity value I(f; p).

    At x = a the left fractional interval [1/x, 1/a] is empty and its operator
    contributes 0 (mirrored at x = b); the weight wa (wb) vanishes with it.
    """
    a, b, x, lam, alpha = p.a, p.b, p.x, p.lam, p.alpha
    wa = ((x - a) / (a * x)) ** alpha
    wb = ((b - x) / (b * x)) ** alpha
    boundary = (1.0 - lam) * (wa + wb) * f(x) + lam * (wa * f(a) + wb * f(b))

    def recip(t: float) -> float:
        return f(1.0 / t)

    frac = 0.0
    if x > a:
        frac += rl_left(recip, 1.0 / x, alpha, 1.0 / a, abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth)
    if x < b:
        frac += rl_right(recip, 1.0 / x, alpha, 1.0 / b, abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth)
    return boundary - gamma(alpha + 1.0) * frac


def _kernel_integral(
    df, end: float, x: float, lam: float, alpha: float, spec_args: dict
) -> float:
    """int_0^1 (t^alpha - lam) A^{-2} f'(end*x/A) dt, A = t*end + (1-t)*x, split at the kink."""

    def g(t: float) -> float:
        A = t * end + (1.0 - t) * x
        return (t**alpha - lam) / (A * A) * df(end * x / A)

    kink = lam ** (1.0 / alpha) if 0.0 < lam < 1.0 else None
    if kink is not None and 0.0 < kink < 1.0:
        return integrate(g, QuadSpec(0.0, kink, **spec_args)) + integrate(
            g, QuadSpec(kink, 1.0, **spec_args)
        )
    return integrate(g, QuadSpec(0.0, 1.0, **spec_args))


def identity_rhs(
    f: ScalarFunction,
    p: ParamPoint,
    *,
    abs_tol: float = 1e-11,
    rel_tol: float = 1e-10,
    max_depth: int = 60,
) -> float:
    """Kernel-integral form of the identity value; a brace with zero prefactor is skipped."""
    a, b, x, lam, alpha = p.a, p.b, p.x, p.lam, p.alpha
    spec_args = {"abs_tol": abs_tol, "rel_tol": rel_tol, "max_depth": max_depth}
    total = 0.0
    if x > a:
        pref = (x - a) ** (alpha + 1.0) / (a * x) ** (alpha - 1.0)
        total += pref * _kernel_integral(f.df, a, x, lam, alpha, spec_args)
    if x < b:
        pref = (b - x) ** (alpha + 1.0) / (b * x) ** (alpha - 1.0)
        total -= pref * _kernel_integral(f.df, b, x, lam, alpha, spec_args)
    return total


def _brace_terms(
    f: ScalarFunction, p: ParamPoint, kq: float, variant: Variant, far_is_b: bool
) -> float:
    """Shared bound assembly: kernel moments at exponent kq, sup factors, denominators.

    (sup{A^q, B^q})^{1/q} = max(A, B) for A, B >= 0, so the sup factor is the
    plain max of derivative magnitudes regardless of q.  far_is_b picks the
    companion point of the second sup: b for the symmetric forms, a for the
    one as-stated family that repeats f'(a) there.
    """
    a, b, x, lam, alpha = p.a, p.b, p.x, p.lam, p.alpha
    corrected = variant is Variant.SYMMETRIC_CORRECTED
    inv_kq = 1.0 / kq
    total = 0.0
    if x > a:
        den = x * x if corrected else x ** (2.0 * kq)
        sup = max(abs(f.df(x)), abs(f.df(a)))
        total += (x - a) ** (alpha + 1.0) / ((a * x) ** (alpha - 1.0) * den) * sup * c2(
            alpha, lam, kq, a / x
        ) ** inv_kq
    if x < b:
        den = b * b if corrected else b ** (2.0 * kq)
        sup = max(abs(f.df(x)), abs(f.df(b if far_is_b else a)))
        total += (b - x) ** (alpha + 1.0) / ((b * x) ** (alpha - 1.0) * den) * sup * c3(
            alpha, lam, kq, x / b
        ) ** inv_kq
    return total


def bound_t22(
    f: ScalarFunction, p: ParamPoint, variant: Variant = Variant.SYMMETRIC_CORRECTED
) -> float:
    """Power-mean bound: c1^{1-1/q} times the kernel-moment braces at exponent q.

    The as-stated form of this family repeats f'(a) in the second sup; the
    corrected variant uses f'(b) there, matching the first-moment family.
    """
    far_is_b = variant is Variant.SYMMETRIC_CORRECTED
    return c1(p.alpha, p.lam) ** (1.0 - 1.0 / p.q) * _brace_terms(f, p, p.q, variant, far_is_b)


def bound_t23(
    f: ScalarFunction, p: ParamPoint, variant: Variant = Variant.SYMMETRIC_CORRECTED
) -> float:
    """First-moment bound: braces at exponent 1, no c1 prefactor.

    Coincides with bound_t22 at q = 1 by construction.  The as_stated variant
    keeps the raw x^{2q}, b^{2q} denominators with the sweep's q; its second
    sup is over {|f'(x)|, |f'(b)|} in both variants.
    """
    a, b, x, lam, alpha, q = p.a, p.b, p.x, p.lam, p.alpha, p.q
    corrected = variant is Variant.SYMMETRIC_CORRECTED
    total = 0.0
    if x > a:
        den = x * x if corrected else x ** (2.0 * q)
        sup = max(abs(f.df(x)), abs(f.df(a)))
        total += (x - a) ** (alpha + 1.0) / ((a * x) ** (alpha - 1.0) * den) * sup * c2(alpha, lam, 1.0, a / x)
    if x < b:
        den = b * b if corrected else b ** (2.0 * q)
        sup = max(abs(f.df(x)), abs(f.df(b)))
        total += (b - x) ** (alpha + 1.0) / ((b * x) ** (alpha - 1.0) * den) * sup * c3(alpha, lam, 1.0, x / b)
    return total


def bound_t24(
    f: ScalarFunction,
    p: ParamPoint,
    h: HolderPair | None = None,
    variant: Variant = Variant.SYMMETRIC_CORRECTED,
) -> float:
    """Holder bound: c1^{1/q} times the braces at the conjugate exponent p = q/(q-1)."""
    if p.q <= 1.0:
        raise ValueError(f"Holder bound needs q > 1, got q={p.q}")
    if h is None:
        h = HolderPair.from_q(p.q)
    elif abs(h.q - p.q) > 1e-12:
        raise ValueError(f"HolderPair q={h.q} inconsistent with point q={p.q}")
    # the as_stated denominators for this family are x^{2p}, b^{2p}; both
    # variants keep f'(b) in the second sup
    shadow = replace(p, q=h.p)
    return c1(p.alpha, p.lam) ** (1.0 / p.q) * _brace_terms(f, shadow, h.p, variant, True)


def evaluate_bound(
    f: ScalarFunction,
    p: ParamPoint,
    theorem: Theorem,
    variant: Variant = Variant.SYMMETRIC_CORRECTED,
    *,
    slack_tol: float = _SLACK_TOL,
    abs_tol: float = 1e-11,
    rel_tol: float = 1e-10,
    max_depth: int = 60,
) -> BoundReport:
    """|identity_lhs| against the requested bound; holds when slack >= -slack_tol."""
    lhs_abs = abs(identity_lhs(f, p, abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth))
    if theorem is Theorem.T22:
        bound = bound_t22(f, p, variant)
    elif theorem is Theorem.T23:
        bound = bound_t23(f, p, variant)
    else:
        bound = bound_t24(f, p, variant=variant)
    slack = bound - lhs_abs
    return BoundReport(theorem, variant, lhs_abs, bound, slack, slack >= -slack_tol)


def specialize(kind: str, base: ParamPoint) -> ParamPoint:
    """Named parameter slices: simpson (x=H, lam=1/3), midpoint (x=H, lam=0),
    trapezoid (x=H, lam=1), ostrowski (lam=0, x free), hadamard_weighted (x=H, lam kept)."""
    if kind not in SPECIAL_KINDS:
        raise ValueError(f"unknown specialization {kind!r}, expected one of {SPECIAL_KINDS}")
    h = base.h_point
    if kind == "simpson":
        return replace(base, x=h, lam=1.0 / 3.0)
    if kind == "midpoint":
        return replace(base, x=h, lam=0.0)
    if kind == "trapezoid":
        return replace(base, x=h, lam=1.0)
    if kind == "ostrowski":
        return replace(base, lam=0.0)
    return replace(base, x=h)


def ostrowski_bound(
    M: float,
    p: ParamPoint,
    theorem: Theorem,
    variant: Variant = Variant.SYMMETRIC_CORRECTED,
) -> float:
    """Bound at lam = 0 for |f'| <= M: the general bound with f(u) = M*u, sup = M exactly."""
    if p.lam != 0.0:
        raise ValueError(f"ostrowski bound requires lam = 0, got {p.lam}")
    if not (math.isfinite(M) and M >= 0.0):
        raise ValueError(f"require M >= 0, got {M}")
    linear = ScalarFunction(
        "ostrowski_linear", IntervalDomain(p.a, p.b), lambda u: M * u, lambda u: M
    )
    if theorem is Theorem.T22:
        return bound_t22(linear, p, variant)
    if theorem is Theorem.T23:
        return bound_t23(linear, p, variant)
    return bound_t24(linear, p, variant=variant)
