"""Generalized hypergeometric 1F2 series and the real Gamma function.

Everything downstream (Lommel and Struve kernels, their normalized forms)
is assembled from

    1F2(a; b1, b2; x) = sum_{n>=0} (a)_n / ((b1)_n (b2)_n) * x^n / n!

summed by plain forward recursion on the term ratio.  The alternating
series is well conditioned for |x| up to a few dozen, which covers every
argument the radius computations produce; larger arguments are the job of
the closed-form continuations in :mod:`lsradii.kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameter, NonConvergence

__all__ = [
    "SeriesConfig",
    "Hyp1F2Args",
    "hyp1f2",
    "hyp1f2_deriv",
    "gamma_real",
    "DEFAULT_CONFIG",
]


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation contract for series summation.

    rel_tol is the relative magnitude, against the running partial sum,
    below which the next term stops the summation.
    """

    rel_tol: float = 1e-15
    max_terms: int = 400

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1e-6):
            raise InvalidParameter(
                f"rel_tol must lie in (0, 1e-6), got {self.rel_tol}"
            )
        if self.max_terms < 50:
            raise InvalidParameter(
                f"max_terms must be >= 50, got {self.max_terms}"
            )


DEFAULT_CONFIG = SeriesConfig()


def _is_nonpositive_integer(b: float) -> bool:
    return b <= 0.0 and float(b) == int(b)


@dataclass(frozen=True)
class Hyp1F2Args:
    """Arguments of 1F2; the lower parameters must avoid the poles."""

    a: float
    b1: float
    b2: float
    x: complex

    def __post_init__(self):
        for b in (self.b1, self.b2):
            if _is_nonpositive_integer(b):
                raise InvalidParameter(
                    f"lower parameter {b} is a pole of the 1F2 coefficients"
                )
        if not (abs(self.x) < math.inf):
            raise InvalidParameter("argument x must be finite")


def sum_hyp1f2(a, b1, b2, x, rel_tol=1e-15, max_terms=400):
    """Raw summation engine; x may be real or complex.

    Stops once |term| <= rel_tol * |partial sum|.  The terms decay
    factorially past their peak, so even when heavy cancellation leaves a
    small sum the criterion is met well inside the term cap for the
    arguments this library produces.
    """
    s = 1.0 + 0.0 * x  # promote to complex iff x is complex
    t = s
    n = 0
    while n < max_terms:
        t = t * (a + n) * x / ((b1 + n) * (b2 + n) * (n + 1))
        s += t
        n += 1
        if abs(t) <= rel_tol * abs(s):
            return s
    raise NonConvergence(
        f"1F2 did not converge in {max_terms} terms at |x|={abs(x):.3g}; "
        "the argument is too large for plain summation"
    )


def sum_hyp1f2_deriv(a, b1, b2, x, k, rel_tol=1e-15, max_terms=400):
    """k-th derivative of 1F2 with respect to x, by exact coefficient shift.

    d^k/dx^k sum c_n x^n = sum_m c_{m+k} (m+k)!/m! x^m, with the ratio
    c_{m+k+1}(m+k+1)!/(m+1)! / (c_{m+k}(m+k)!/m!) reducing to
    (a+m+k) / ((b1+m+k)(b2+m+k)(m+1)).
    """
    t = 1.0
    for j in range(k):
        t *= (a + j) / ((b1 + j) * (b2 + j))
    t = t + 0.0 * x
    s = t
    m = 0
    while m < max_terms:
        t = t * (a + m + k) * x / ((b1 + m + k) * (b2 + m + k) * (m + 1))
        s += t
        m += 1
        if abs(t) <= rel_tol * abs(s):
            return s
    raise NonConvergence(
        f"1F2 derivative (k={k}) did not converge in {max_terms} terms "
        f"at |x|={abs(x):.3g}"
    )


def hyp1f2(args: Hyp1F2Args, cfg: SeriesConfig = DEFAULT_CONFIG):
    """1F2(a; b1, b2; x) under the truncation contract of ``cfg``."""
    return sum_hyp1f2(args.a, args.b1, args.b2, args.x,
                      cfg.rel_tol, cfg.max_terms)


def hyp1f2_deriv(args: Hyp1F2Args, k: int, cfg: SeriesConfig = DEFAULT_CONFIG):
    """k-th derivative of 1F2 with respect to x (k=0 reduces to hyp1f2)."""
    if k < 0:
        raise InvalidParameter(f"derivative order must be >= 0, got {k}")
    if k == 0:
        return hyp1f2(args, cfg)
    return sum_hyp1f2_deriv(args.a, args.b1, args.b2, args.x, k,
                            cfg.rel_tol, cfg.max_terms)


def gamma_real(x: float) -> float:
    """Gamma(x) for x > 0 via the platform Lanczos implementation."""
    if not x > 0.0:
        raise InvalidParameter(f"gamma_real requires x > 0, got {x}")
    return math.gamma(x)
