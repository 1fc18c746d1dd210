"""Lommel and Struve kernels of the first kind, with derivatives.

The two kernels are

    s(z)   = s_{mu-1/2,1/2}(z)
           = z^(mu+1/2)/(mu(mu+1)) * 1F2(1; (mu+2)/2, (mu+3)/2; -z^2/4)
    H_nu(z) = (z/2)^(nu+1) / (sqrt(pi/4) Gamma(nu+3/2))
           * 1F2(1; 3/2, nu+3/2; -z^2/4)

For z up to ``Z_SWITCH`` both are summed directly (the alternating series
loses roughly z/ln10 digits to cancellation, so 14 keeps ~9 clean digits
in the worst case and full precision over the radius-solving range).
Beyond the switch the series is useless in double precision and the
kernels continue through closed forms:

* Lommel: substituting w = sqrt(z) * s reduces the inhomogeneous Bessel
  equation to v'' + v = z^(mu-1), whose particular solution with the
  s-type behaviour at the origin is an incomplete-gamma expression along
  the imaginary axis; the upper incomplete gamma is evaluated by a Lentz
  continued fraction in complex doubles (machine accurate for |z| >~ 10).
* Struve: scipy's Struve implementation plus the standard recurrence for
  H', and the defining differential equation for H''.

Both continuations are cross-checked against the series on the overlap
band by the test suite.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from scipy import special as _sp

from .errors import InsufficientZeros, InvalidParameter
from .series import (DEFAULT_CONFIG, SeriesConfig, gamma_real, sum_hyp1f2,
                     sum_hyp1f2_deriv)
from .zeros import tail_gap

__all__ = [
    "LommelParam",
    "StruveParam",
    "ProductTruncation",
    "lommel_s",
    "lommel_s_deriv",
    "struve_h",
    "struve_h_deriv",
    "ml_product",
    "Z_SWITCH",
]

SQRT_PI = math.sqrt(math.pi)

# Beyond this the 1F2 series cancellation exceeds the double-precision
# budget and evaluation switches to the closed-form continuations.
Z_SWITCH = 14.0


@dataclass(frozen=True)
class LommelParam:
    """Shape parameter mu of s_{mu-1/2,1/2}.

    The radius theorems require mu in (-1, 1), mu != 0, mu != -1/2.
    Construction outside that set needs unsafe=True and emits a warning.
    """

    mu: float
    unsafe: bool = False

    def __post_init__(self):
        mu = self.mu
        in_hypothesis = -1.0 < mu < 1.0 and mu != 0.0 and mu != -0.5
        if not in_hypothesis:
            if not self.unsafe:
                raise InvalidParameter(
                    f"mu={mu} violates the hypotheses mu in (-1,1), mu != 0, "
                    "mu != -1/2; pass unsafe=True to compute anyway"
                )
            warnings.warn(
                f"mu={mu} is outside the theorem hypotheses; results are "
                "not covered by the radius statements",
                RuntimeWarning,
                stacklevel=2,
            )
        if mu * (mu + 1.0) == 0.0:
            raise InvalidParameter(
                f"mu={mu} makes the Lommel prefactor 1/(mu(mu+1)) singular"
            )


@dataclass(frozen=True)
class StruveParam:
    """Shape parameter nu of H_nu; the theorems require |nu| <= 1/2."""

    nu: float
    unsafe: bool = False

    def __post_init__(self):
        if not abs(self.nu) <= 0.5:
            if not self.unsafe:
                raise InvalidParameter(
                    f"nu={self.nu} violates |nu| <= 1/2; pass unsafe=True "
                    "to compute anyway"
                )
            warnings.warn(
                f"nu={self.nu} is outside the theorem hypotheses",
                RuntimeWarning,
                stacklevel=2,
            )


@dataclass(frozen=True)
class ProductTruncation:
    """Number of zeros retained in a truncated Mittag-Leffler product."""

    n_zeros: int = 200

    def __post_init__(self):
        if self.n_zeros < 10:
            raise InvalidParameter(
                f"n_zeros must be >= 10, got {self.n_zeros}"
            )


def _require_positive(z: float) -> None:
    if not z > 0.0:
        raise InvalidParameter(f"argument must be > 0, got z={z}")


# ---------------------------------------------------------------------------
# large-argument continuation: Lommel via the incomplete gamma
# ---------------------------------------------------------------------------

def _upper_gamma_cf(a: float, w: complex, max_iter: int = 300) -> complex:
    """Upper incomplete Gamma(a, w) by the modified Lentz continued fraction.

    Converges rapidly for |w| >> |a|; used here only with w = i*z and
    z >= Z_SWITCH, where 3-20 iterations reach machine precision.
    """
    tiny = 1e-300
    b = w + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    for i in range(1, max_iter):
        an = -i * (i - a)
        b = b + 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return cmath.exp(-w + a * cmath.log(w)) * h


def _lommel_vvp(mu: float, z: float) -> tuple:
    """(v, v') for v = sqrt(z)*s, the solution of v'' + v = z^(mu-1).

    For mu > 0:   v = Im[e^{iz} Q],  Q = e^{-i pi mu/2} gamma_lower(mu, iz)
    For mu <= 0:  integrate by parts once so the integral converges at 0:
                  v = Re[e^{iz} Q]/mu, Q = e^{-i pi(mu+1)/2} gamma_lower(mu+1, iz)
    and v' follows from the same Q (the inhomogeneous term is real).
    """
    if mu > 0.0:
        a = mu
        q = cmath.exp(-1j * math.pi * mu / 2.0) * (
            math.gamma(a) - _upper_gamma_cf(a, 1j * z)
        )
        e = cmath.exp(1j * z)
        v = (e * q).imag
        vp = (1j * e * q).imag
    else:
        a = mu + 1.0
        q = cmath.exp(-1j * math.pi * a / 2.0) * (
            math.gamma(a) - _upper_gamma_cf(a, 1j * z)
        )
        e = cmath.exp(1j * z)
        v = (e * q).real / mu
        vp = ((1j * e * q).real + z ** mu) / mu
    return v, vp


def _lommel_large(mu: float, z: float):
    """(s, s') for z beyond the series range."""
    v, vp = _lommel_vvp(mu, z)
    rz = math.sqrt(z)
    s = v / rz
    sp = -0.5 * v / (z * rz) + vp / rz
    return s, sp


# ---------------------------------------------------------------------------
# series-range building blocks
# ---------------------------------------------------------------------------

def _lommel_f012(mu: float, z: float, cfg: SeriesConfig):
    """F, F', F'' in z for F(z) = 1F2(1;(mu+2)/2,(mu+3)/2;-z^2/4)."""
    b1 = (mu + 2.0) / 2.0
    b2 = (mu + 3.0) / 2.0
    x = -z * z / 4.0
    f = sum_hyp1f2(1.0, b1, b2, x, cfg.rel_tol, cfg.max_terms)
    d1 = sum_hyp1f2_deriv(1.0, b1, b2, x, 1, cfg.rel_tol, cfg.max_terms)
    d2 = sum_hyp1f2_deriv(1.0, b1, b2, x, 2, cfg.rel_tol, cfg.max_terms)
    fp = d1 * (-z / 2.0)
    fpp = d2 * (z * z / 4.0) + d1 * (-0.5)
    return f, fp, fpp


def _struve_e012(nu: float, z: float, cfg: SeriesConfig):
    """E, E', E'' in z for E(z) = 1F2(1;3/2,nu+3/2;-z^2/4)."""
    b2 = nu + 1.5
    x = -z * z / 4.0
    e = sum_hyp1f2(1.0, 1.5, b2, x, cfg.rel_tol, cfg.max_terms)
    d1 = sum_hyp1f2_deriv(1.0, 1.5, b2, x, 1, cfg.rel_tol, cfg.max_terms)
    d2 = sum_hyp1f2_deriv(1.0, 1.5, b2, x, 2, cfg.rel_tol, cfg.max_terms)
    ep = d1 * (-z / 2.0)
    epp = d2 * (z * z / 4.0) + d1 * (-0.5)
    return e, ep, epp


def _struve_prefactor(nu: float) -> float:
    """H_nu(z) = z^(nu+1) * E(z) / prefactor."""
    return 2.0 ** nu * SQRT_PI * gamma_real(nu + 1.5)


# ---------------------------------------------------------------------------
# public kernel operations
# ---------------------------------------------------------------------------

def lommel_s(p: LommelParam, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """s_{mu-1/2,1/2}(z) on the positive real axis."""
    _require_positive(z)
    mu = p.mu
    if z <= Z_SWITCH:
        f, _, _ = _lommel_f012(mu, z, cfg)
        return z ** (mu + 0.5) / (mu * (mu + 1.0)) * f
    return _lommel_large(mu, z)[0]


def lommel_s_deriv(p: LommelParam, z: float, order: int,
                   cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """First or second derivative of s_{mu-1/2,1/2}."""
    _require_positive(z)
    if order not in (1, 2):
        raise InvalidParameter(f"order must be 1 or 2, got {order}")
    mu = p.mu
    if z <= Z_SWITCH:
        f, fp, fpp = _lommel_f012(mu, z, cfg)
        k = z ** (mu + 0.5) / (mu * (mu + 1.0))
        if order == 1:
            return k * ((mu + 0.5) * f / z + fp)
        return k * ((mu * mu - 0.25) * f / (z * z)
                    + 2.0 * (mu + 0.5) * fp / z + fpp)
    s, sp = _lommel_large(mu, z)
    if order == 1:
        return sp
    # second derivative from the defining equation
    # z^2 s'' + z s' + (z^2 - 1/4) s = z^(mu+1/2)
    return (z ** (mu + 0.5) - z * sp - (z * z - 0.25) * s) / (z * z)


def struve_h(p: StruveParam, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Struve function H_nu(z) on the positive real axis."""
    _require_positive(z)
    nu = p.nu
    if z <= Z_SWITCH:
        e, _, _ = _struve_e012(nu, z, cfg)
        return z ** (nu + 1.0) * e / _struve_prefactor(nu)
    return float(_sp.struve(nu, z))


def _struve_hp_large(nu: float, z: float) -> float:
    # H'_nu = (z/2)^nu/(sqrt(pi)Gamma(nu+3/2)) - H_{nu+1} + (nu/z) H_nu,
    # which keeps every Struve order >= nu (scipy's v = -1 is unreliable).
    lead = (z / 2.0) ** nu / (SQRT_PI * gamma_real(nu + 1.5))
    return lead - float(_sp.struve(nu + 1.0, z)) + nu / z * float(_sp.struve(nu, z))


def struve_h_deriv(p: StruveParam, z: float, order: int,
                   cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """First or second derivative of H_nu."""
    _require_positive(z)
    if order not in (1, 2):
        raise InvalidParameter(f"order must be 1 or 2, got {order}")
    nu = p.nu
    if z <= Z_SWITCH:
        e, ep, epp = _struve_e012(nu, z, cfg)
        c = _struve_prefactor(nu)
        if order == 1:
            return ((nu + 1.0) * e / z + ep) * z ** (nu + 1.0) / c
        return (nu * (nu + 1.0) * e / (z * z)
                + 2.0 * (nu + 1.0) * ep / z + epp) * z ** (nu + 1.0) / c
    hp = _struve_hp_large(nu, z)
    if order == 1:
        return hp
    # z^2 H'' + z H' + (z^2 - nu^2) H = 4 (z/2)^(nu+1) / (sqrt(pi) Gamma(nu+1/2))
    h = float(_sp.struve(nu, z))
    rhs = 4.0 * (z / 2.0) ** (nu + 1.0) * float(_sp.rgamma(nu + 0.5)) / SQRT_PI
    return (rhs - z * hp - (z * z - nu * nu) * h) / (z * z)


# ---------------------------------------------------------------------------
# even factors: the same positive zeros, no fractional powers
# ---------------------------------------------------------------------------
# Zero scans run on these rather than on the kernels themselves, so the
# z^(mu +- 1/2) prefactors never enter the sign logic.  They hand over to
# the machine-accurate continuations earlier than the kernels do (z > 8
# instead of 14): refining zeros to 1e-12 brackets needs evaluations whose
# noise stays below slope * tol, which the cancelling series cannot offer
# past z ~ 8.

_Z_EVEN = 8.0

def lommel_even(mu: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """F(z); positive zeros identical to those of s_{mu-1/2,1/2}."""
    if z <= _Z_EVEN:
        return sum_hyp1f2(1.0, (mu + 2.0) / 2.0, (mu + 3.0) / 2.0,
                          -z * z / 4.0, cfg.rel_tol, cfg.max_terms)
    s, _ = _lommel_large(mu, z)
    return mu * (mu + 1.0) * z ** (-mu - 0.5) * s


def lommel_deriv_even(mu: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """(mu+1/2)F + zF'; positive zeros identical to those of s'."""
    if z <= _Z_EVEN:
        f, fp, _ = _lommel_f012(mu, z, cfg)
        return (mu + 0.5) * f + z * fp
    _, sp = _lommel_large(mu, z)
    return mu * (mu + 1.0) * z ** (0.5 - mu) * sp


def g_deriv_even(mu: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """g'(z) = F + zF' for g(z) = z F(z)."""
    if z <= _Z_EVEN:
        f, fp, _ = _lommel_f012(mu, z, cfg)
        return f + z * fp
    s, sp = _lommel_large(mu, z)
    return mu * (mu + 1.0) * z ** (-mu - 0.5) * ((0.5 - mu) * s + z * sp)


def h_deriv_even(mu: float, y: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """2F(y) + yF'(y); vanishes exactly where h'(y^2) does.

    h(z) = z P(z) with P(z) = F(sqrt(z)), so h'(z) = F(y) + yF'(y)/2 at
    y = sqrt(z); the factor 2 only normalizes.
    """
    if y <= _Z_EVEN:
        f, fp, _ = _lommel_f012(mu, y, cfg)
        return 2.0 * f + y * fp
    s, sp = _lommel_large(mu, y)
    return mu * (mu + 1.0) * y ** (-mu - 0.5) * ((1.5 - mu) * s + y * sp)


def struve_even(nu: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """E(z); positive zeros identical to those of H_nu."""
    if z <= _Z_EVEN:
        return sum_hyp1f2(1.0, 1.5, nu + 1.5, -z * z / 4.0,
                          cfg.rel_tol, cfg.max_terms)
    return _struve_prefactor(nu) * z ** (-nu - 1.0) * float(_sp.struve(nu, z))


def struve_even_prime(nu: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """dE/dz, used to pin down the touching (even-multiplicity) zeros of E."""
    if z <= _Z_EVEN:
        _, ep, _ = _struve_e012(nu, z, cfg)
        return ep
    h = float(_sp.struve(nu, z))
    hp = _struve_hp_large(nu, z)
    c = _struve_prefactor(nu)
    return c * (hp * z ** (-nu - 1.0) - (nu + 1.0) * h * z ** (-nu - 2.0))


def struve_deriv_even(nu: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """(nu+1)E + zE'; positive zeros identical to those of H'."""
    if z <= _Z_EVEN:
        e, ep, _ = _struve_e012(nu, z, cfg)
        return (nu + 1.0) * e + z * ep
    return _struve_prefactor(nu) * z ** (-nu) * _struve_hp_large(nu, z)


def v_deriv_even(nu: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """v'(z) = E + zE' for v(z) = z E(z)."""
    if z <= _Z_EVEN:
        e, ep, _ = _struve_e012(nu, z, cfg)
        return e + z * ep
    h = float(_sp.struve(nu, z))
    hp = _struve_hp_large(nu, z)
    return _struve_prefactor(nu) * z ** (-nu - 1.0) * (-nu * h + z * hp)


def w_deriv_even(nu: float, y: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """2E(y) + yE'(y); vanishes exactly where w'(y^2) does."""
    if y <= _Z_EVEN:
        e, ep, _ = _struve_e012(nu, y, cfg)
        return 2.0 * e + y * ep
    h = float(_sp.struve(nu, y))
    hp = _struve_hp_large(nu, y)
    return _struve_prefactor(nu) * y ** (-nu - 1.0) * ((1.0 - nu) * h + y * hp)


# ---------------------------------------------------------------------------
# truncated Mittag-Leffler products
# ---------------------------------------------------------------------------

_ML_PREFACTORS = {
    "lommel": lambda mu, z: z ** (mu + 0.5) / (mu * (mu + 1.0)),
    "lommel_deriv": lambda mu, z: (mu + 0.5) * z ** (mu - 0.5) / (mu * (mu + 1.0)),
    "struve": lambda nu, z: z ** (nu + 1.0) / _struve_prefactor(nu),
    "struve_deriv": lambda nu, z: (nu + 1.0) * z ** nu / _struve_prefactor(nu),
}

_TAIL_EXTEND = 400  # extrapolated zeros beyond the table, before the integral


def ml_product(kind: str, p, z: float, zeros, trunc: ProductTruncation,
               cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Kernel value reconstructed from its zeros.

    Evaluates prefactor * prod_{n<=N} (1 - z^2/zero_n^2) with the product
    truncated at N = trunc.n_zeros factors (zeros counted with their
    recorded multiplicity), then corrected for the omitted tail: table
    entries beyond the cut enter explicitly, the next _TAIL_EXTEND zeros
    are extrapolated on the local spacing, and the remainder is the
    midpoint integral of log(1 - z^2/t^2).  Cross-check oracle only; the
    series/continuation route stays authoritative.
    """
    if kind not in _ML_PREFACTORS:
        raise InvalidParameter(f"unknown product kind {kind!r}")
    shape = p.mu if isinstance(p, LommelParam) else p.nu
    n = trunc.n_zeros
    if zeros.weighted_count < n:
        raise InsufficientZeros(
            f"table {zeros.label!r} holds {zeros.weighted_count} zeros "
            f"(with multiplicity) but {n} were requested"
        )
    pref = _ML_PREFACTORS[kind](shape, z)

    log_prod = 0.0
    tail = 0.0
    used = 0
    for d, m in zip(zeros.zeros, zeros.multiplicities):
        take = min(m, n - used)
        used += take
        rest = m - take
        factor = 1.0 - (z / d) * (z / d)
        if take:
            if factor == 0.0:
                return 0.0
            log_prod += take * math.log(abs(factor))
            if factor < 0.0 and take % 2 == 1:
                pref = -pref
        if rest:
            tail += rest * math.log1p(-z * z / (d * d))
    zs = zeros.zeros
    gap = tail_gap(zeros)
    dens = float(zeros.multiplicities[-1])
    d = zs[-1]
    for _ in range(_TAIL_EXTEND):
        d += gap
        tail += dens * math.log1p(-z * z / (d * d))
    t0 = d + 0.5 * gap
    tail += dens / gap * (-t0 * math.log1p(-z * z / (t0 * t0))
                          - z * math.log((t0 + z) / (t0 - z)))
    return pref * math.exp(log_prod + tail)
