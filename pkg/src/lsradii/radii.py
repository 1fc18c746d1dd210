"""Radii of beta-uniform convexity of order alpha.

A form F belongs to the class beta-UC(alpha) on the disk U(r) when

    Re(1 + z F''/F') > beta |z F''/F'| + alpha          on U(r),

equivalently when the curvature values lie in the conic domain
R_{beta,alpha}.  On each form's interval (0, b) -- b the first positive
zero of the relevant derivative denominator -- the map

    psi(r) = (1 - alpha) + (1 + beta) * (curvature(r) - 1)

decreases strictly from 1 - alpha to -infinity, and its unique root is
the radius.  Each of the six theorem equations equals c * psi for a fixed
positive constant c (1 for f, g, u, v; 4 for h; 2 for w), so one monotone
bisection serves all six forms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BracketFailure, InvalidParameter, NumericalFailure
from .forms import (FormKind, curvature_data, curvature_real, curvature_sum,
                    form_weight)
from .kernels import (LommelParam, ProductTruncation, StruveParam, lommel_s,
                      lommel_s_deriv, struve_h, struve_h_deriv)
from .series import DEFAULT_CONFIG, SeriesConfig
from .tables import bracket_singularity

__all__ = [
    "UniformityParams",
    "RadiusResult",
    "DiskReport",
    "psi",
    "printed_lhs",
    "radius",
    "uc_radius",
    "convexity_radius",
    "conic_contains",
    "conic_margin",
    "classify_domain",
    "verify_disk",
]


@dataclass(frozen=True)
class UniformityParams:
    """Class parameters: beta >= 0, alpha in [0, 1)."""

    alpha: float = 0.0
    beta: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.alpha < 1.0):
            raise InvalidParameter(f"alpha must lie in [0,1), got {self.alpha}")
        if not self.beta >= 0.0:
            raise InvalidParameter(f"beta must be >= 0, got {self.beta}")


UC = UniformityParams(alpha=0.0, beta=1.0)


@dataclass(frozen=True)
class RadiusResult:
    """Solved radius with its bracket and residual diagnostics."""

    radius: float
    bracket_hi: float
    iterations: int
    residual: float


@dataclass(frozen=True)
class DiskReport:
    """Conic-membership sampling summary for one disk."""

    inside_fraction: float
    worst_margin: float
    samples: int


def psi(form: FormKind, param, up: UniformityParams, r: float,
        cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """(1-alpha) + (1+beta)(curvature(r) - 1); root = the radius."""
    return (1.0 - up.alpha) + (1.0 + up.beta) * (
        curvature_real(form, param, r, cfg) - 1.0
    )


def printed_lhs(form: FormKind, param, up: UniformityParams, r: float,
                cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """The theorem equation's left side, assembled term for term.

    Equals printed_constant(form) * psi; kept as an independent assembly
    so the equality is a meaningful cross-check rather than a tautology.
    """
    al, be = up.alpha, up.beta
    if form.family == "lommel":
        mu = param.mu
        y = math.sqrt(r) if form.sqrt_variable else r
        s0 = lommel_s(param, y, cfg)
        s1 = lommel_s_deriv(param, y, 1, cfg)
        s2 = lommel_s_deriv(param, y, 2, cfg)
        if form is FormKind.F:
            return (1.0 - al) + (1.0 + be) * (
                r * s2 / s1 + (1.0 / (mu + 0.5) - 1.0) * r * s1 / s0
            )
        if form is FormKind.G:
            return (1.0 - al) - (1.0 + be) * (
                0.5 + mu - r * ((1.5 - mu) * s1 + r * s2)
                / ((0.5 - mu) * s0 + r * s1)
            )
        return 4.0 * (1.0 - al) - (1.0 + be) * (
            1.0 + 2.0 * mu - 2.0 * y * ((2.5 - mu) * s1 + y * s2)
            / ((1.5 - mu) * s0 + y * s1)
        )
    nu = param.nu
    y = math.sqrt(r) if form.sqrt_variable else r
    h0 = struve_h(param, y, cfg)
    h1 = struve_h_deriv(param, y, 1, cfg)
    h2 = struve_h_deriv(param, y, 2, cfg)
    if form is FormKind.U:
        return (1.0 - al) + (1.0 + be) * (
            r * h2 / h1 + (1.0 / (nu + 1.0) - 1.0) * r * h1 / h0
        )
    if form is FormKind.V:
        return (1.0 - al) - (1.0 + be) * (
            1.0 + nu - r * ((1.0 - nu) * h1 + r * h2) / (-nu * h0 + r * h1)
        )
    return 2.0 * (1.0 - al) - (1.0 + be) * (
        1.0 + nu - y * ((2.0 - nu) * h1 + y * h2)
        / ((1.0 - nu) * h0 + y * h1)
    )


def _bisect_decreasing(fn, lo: float, hi: float, tol: float, cap: int = 200):
    """Bisection for the unique root of a strictly decreasing function."""
    iterations = 0
    while hi - lo > tol and iterations < cap:
        mid = 0.5 * (lo + hi)
        if fn(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    return 0.5 * (lo + hi), iterations


def radius(form: FormKind, param, up: UniformityParams,
           tol: float = 1e-12, cfg: SeriesConfig = DEFAULT_CONFIG) -> RadiusResult:
    """Smallest positive root of the theorem equation for the form.

    psi decreases strictly from 1-alpha to -infinity on (0, b), so the
    root is bracketed by construction; bisection is unconditionally
    convergent and the residual at the returned point is reported.
    """
    if tol < 1e-14:
        raise InvalidParameter(f"tol must be >= 1e-14, got {tol}")
    shape = param.mu if form.family == "lommel" else param.nu
    b = bracket_singularity(form.value, shape, cfg)
    lo = 1e-12 * b
    hi = b * (1.0 - 1e-9)
    if psi(form, param, up, hi, cfg) >= 0.0:
        raise BracketFailure(
            f"psi({form.value}) is non-negative at the singularity edge "
            f"{hi:.6g}; zero table or singularity location is wrong"
        )
    root, iters = _bisect_decreasing(
        lambda r: psi(form, param, up, r, cfg), lo, hi, tol
    )
    return RadiusResult(radius=root, bracket_hi=b, iterations=iters,
                        residual=psi(form, param, up, root, cfg))


def uc_radius(form: FormKind, param, tol: float = 1e-12,
              cfg: SeriesConfig = DEFAULT_CONFIG) -> RadiusResult:
    """Radius of uniform convexity (alpha=0, beta=1).

    Additionally verifies that the corollary equation -- the printed
    theorem left side at (0, 1) -- vanishes at the root.
    """
    result = radius(form, param, UC, tol, cfg)
    corollary = printed_lhs(form, param, UC, result.radius, cfg)
    corollary /= form.printed_constant
    if abs(corollary) > 1e-9:
        raise NumericalFailure(
            f"corollary residual {corollary:.3e} at r={result.radius!r} "
            f"exceeds 1e-9 for form {form.value}"
        )
    return result


def convexity_radius(form: FormKind, param, tol: float = 1e-12,
                     cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Root of curvature(r) = 0: the classical radius of convexity.

    Solved directly on the curvature (not through psi) so it provides an
    independent check of the beta=0, alpha=0 reduction.
    """
    shape = param.mu if form.family == "lommel" else param.nu
    b = bracket_singularity(form.value, shape, cfg)
    fn = lambda r: curvature_real(form, param, r, cfg)
    if fn(b * (1.0 - 1e-9)) >= 0.0:
        raise BracketFailure("curvature does not turn negative before b")
    root, _ = _bisect_decreasing(fn, 1e-12 * b, b * (1.0 - 1e-9), tol)
    return root


def conic_contains(wv: complex, up: UniformityParams) -> bool:
    """Membership of w in R_{beta,alpha}: u > beta*sqrt((u-1)^2+v^2) + alpha."""
    return conic_margin(wv, up) > 0.0


def conic_margin(wv: complex, up: UniformityParams) -> float:
    w = complex(wv)
    return w.real - up.beta * math.hypot(w.real - 1.0, w.imag) - up.alpha


def classify_domain(beta: float) -> str:
    """Conic section type of the boundary curve as beta varies."""
    if beta < 0.0:
        raise InvalidParameter(f"beta must be >= 0, got {beta}")
    if beta > 1.0:
        return "elliptic"
    if beta == 1.0:
        return "parabolic"
    if beta > 0.0:
        return "hyperbolic"
    return "half_plane"


def verify_disk(form: FormKind, param, up: UniformityParams, r: float,
                samples: int, seed: int, n_zeros: int = 300,
                cfg: SeriesConfig = DEFAULT_CONFIG) -> DiskReport:
    """Sample curvature values on |z| <= r and test conic membership.

    Draws ``samples`` points uniform in the disk (deterministic in
    ``seed``) plus 64 real-axis points packed toward +-r; the positive
    real axis is the extremal direction, where the theorem bound is
    attained.  samples=0 is vacuous: fraction 1, margin +infinity.
    """
    if samples < 0:
        raise InvalidParameter(f"samples must be >= 0, got {samples}")
    if samples == 0:
        return DiskReport(inside_fraction=1.0, worst_margin=math.inf, samples=0)
    data = curvature_data(form, param, n_zeros, cfg)
    if r >= data.singularity:
        raise InvalidParameter(
            f"disk radius {r} reaches the first singularity "
            f"{data.singularity:.6g}"
        )
    rng = np.random.default_rng(seed)
    rad = r * np.sqrt(rng.random(samples))
    ang = 2.0 * math.pi * rng.random(samples)
    pts = [complex(rr * math.cos(aa), rr * math.sin(aa))
           for rr, aa in zip(rad, ang)]
    pts.extend(sgn * r * (1.0 - j / 128.0)
               for sgn in (1.0, -1.0) for j in range(32))
    trunc = ProductTruncation(n_zeros)
    inside = 0
    worst = math.inf
    for zp in pts:
        margin = conic_margin(curvature_sum(data, zp, trunc), up)
        if margin > 0.0:
            inside += 1
        worst = min(worst, margin)
    return DiskReport(inside_fraction=inside / len(pts),
                      worst_margin=worst, samples=len(pts))
