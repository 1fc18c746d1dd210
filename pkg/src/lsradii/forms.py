"""The six normalized forms and their curvature 1 + z F''(z)/F'(z).

Normalizations of the Lommel kernel s = s_{mu-1/2,1/2} (with k = mu(mu+1)):

    f(z) = (k s(z))^(1/(mu+1/2))        g(z) = k z^(1/2-mu) s(z)
    h(z) = k z^((3-2mu)/4) s(sqrt(z))

and of the Struve kernel H_nu (with c = sqrt(pi) 2^nu Gamma(nu+3/2)):

    u(z) = (c H(z))^(1/(nu+1))          v(z) = c z^(-nu) H(z)
    w(z) = c z^((1-nu)/2) H(sqrt(z))

All six reduce to z + O(z^2), so the curvature tends to 1 at the origin.
On the positive real axis the curvature is assembled from kernel ratios,
exactly mirroring the identities behind the radius theorems; on complex
disks it is evaluated through the zero-based expansions

    1 + zF''/F' = 1 - sum 2z^2/(d_n^2 - z^2) - wt * sum 2z^2/(k_n^2 - z^2)

(with d_n the derivative zeros, k_n the kernel zeros, wt the form's
logarithmic weight; for the sqrt-variable forms h, w the sums collapse to
sum z/(d_n^2 - z)).  Truncated sums carry a tail correction: the next 400
zeros extrapolated on the local spacing, then an integral comparison.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels, tables
from .errors import (InsufficientZeros, InvalidParameter,
                     PreconditionViolation, SingularityReached)
from .kernels import (LommelParam, ProductTruncation, StruveParam, lommel_s,
                      lommel_s_deriv, struve_h, struve_h_deriv)
from .series import DEFAULT_CONFIG, SeriesConfig
from .zeros import ZeroTable, tail_gap

__all__ = [
    "FormKind",
    "CurvatureSeriesData",
    "eval_form",
    "curvature_real",
    "curvature_sum",
    "curvature_data",
    "form_weight",
]

_DENOM_FLOOR = 1e-300


class FormKind(enum.Enum):
    """The six computable normalized forms."""

    F = "f"
    G = "g"
    H = "h"
    U = "u"
    V = "v"
    W = "w"

    @classmethod
    def from_tag(cls, tag: str) -> "FormKind":
        try:
            return cls(tag.lower())
        except ValueError:
            raise InvalidParameter(f"unknown form {tag!r}; expected f,g,h,u,v,w")

    @property
    def family(self) -> str:
        return "lommel" if self in (FormKind.F, FormKind.G, FormKind.H) else "struve"

    @property
    def sqrt_variable(self) -> bool:
        return self in (FormKind.H, FormKind.W)

    @property
    def printed_constant(self) -> float:
        """Positive constant relating the theorem's printed equation to psi."""
        return {FormKind.H: 4.0, FormKind.W: 2.0}.get(self, 1.0)


def _shape(form: FormKind, param) -> float:
    if form.family == "lommel":
        if not isinstance(param, LommelParam):
            raise InvalidParameter(f"form {form.value} requires LommelParam")
        return param.mu
    if not isinstance(param, StruveParam):
        raise InvalidParameter(f"form {form.value} requires StruveParam")
    return param.nu


def form_weight(form: FormKind, param) -> float:
    """Coefficient of the kernel-zero sum: 1/(mu+1/2)-1 for f,
    1/(nu+1)-1 for u, zero for the other four forms."""
    p = _shape(form, param)
    if form is FormKind.F:
        return 1.0 / (p + 0.5) - 1.0
    if form is FormKind.U:
        return 1.0 / (p + 1.0) - 1.0
    return 0.0


def eval_form(form: FormKind, param, z: float,
              cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Value of the normalized form at real z > 0."""
    if not z > 0.0:
        raise InvalidParameter(f"z must be > 0, got {z}")
    p = _shape(form, param)
    if form is FormKind.F:
        base = kernels.lommel_even(p, z, cfg)
        if base <= 0.0:
            raise InvalidParameter(
                "f is defined by a fractional power; z lies beyond the "
                "first kernel zero where the base turns non-positive"
            )
        return z * base ** (1.0 / (p + 0.5))
    if form is FormKind.G:
        return z * kernels.lommel_even(p, z, cfg)
    if form is FormKind.H:
        return z * kernels.lommel_even(p, math.sqrt(z), cfg)
    if form is FormKind.U:
        base = kernels.struve_even(p, z, cfg)
        if base <= 0.0:
            raise InvalidParameter(
                "u is defined by a fractional power; z lies beyond the "
                "first kernel zero where the base turns non-positive"
            )
        return z * base ** (1.0 / (p + 1.0))
    if form is FormKind.V:
        return z * kernels.struve_even(p, z, cfg)
    return z * kernels.struve_even(p, math.sqrt(z), cfg)


def _guard(den: float, what: str) -> float:
    if abs(den) < _DENOM_FLOOR:
        raise SingularityReached(f"{what} denominator collapsed ({den!r})")
    return den


def curvature_real(form: FormKind, param, r: float,
                   cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """1 + r F''(r)/F'(r) on (0, first singularity), via kernel ratios."""
    if not r > 0.0:
        raise InvalidParameter(f"r must be > 0, got {r}")
    p = _shape(form, param)
    if form.family == "lommel":
        y = math.sqrt(r) if form.sqrt_variable else r
        s0 = lommel_s(param, y, cfg)
        s1 = lommel_s_deriv(param, y, 1, cfg)
        s2 = lommel_s_deriv(param, y, 2, cfg)
        if form is FormKind.F:
            return (1.0 + r * s2 / _guard(s1, "s'")
                    + (1.0 / (p + 0.5) - 1.0) * r * s1 / _guard(s0, "s"))
        if form is FormKind.G:
            den = _guard((0.5 - p) * s0 + r * s1, "g'")
            return (0.5 - p) + r * ((1.5 - p) * s1 + r * s2) / den
        den = _guard((1.5 - p) * s0 + y * s1, "h'")
        return (3.0 - 2.0 * p) / 4.0 + 0.5 * y * ((2.5 - p) * s1 + y * s2) / den
    y = math.sqrt(r) if form.sqrt_variable else r
    h0 = struve_h(param, y, cfg)
    h1 = struve_h_deriv(param, y, 1, cfg)
    h2 = struve_h_deriv(param, y, 2, cfg)
    if form is FormKind.U:
        return (1.0 + r * h2 / _guard(h1, "H'")
                + (1.0 / (p + 1.0) - 1.0) * r * h1 / _guard(h0, "H"))
    if form is FormKind.V:
        den = _guard(-p * h0 + r * h1, "v'")
        return -p + r * ((1.0 - p) * h1 + r * h2) / den
    den = _guard((1.0 - p) * h0 + y * h1, "w'")
    return 0.5 * (1.0 - p + y * ((2.0 - p) * h1 + y * h2) / den)


@dataclass(frozen=True)
class CurvatureSeriesData:
    """Zero tables and weight feeding the curvature expansions.

    For the sqrt-variable forms the derivative table is in the sqrt
    variable and its entries square to the singular points.
    """

    form: FormKind
    param: object
    function_zeros: ZeroTable
    derivative_zeros: ZeroTable
    weight: float

    def __post_init__(self):
        if not math.isfinite(self.weight):
            raise InvalidParameter("weight must be finite (mu != -1/2 upstream)")
        if len(self.function_zeros) == 0 or len(self.derivative_zeros) == 0:
            raise InvalidParameter("zero tables must be nonempty")

    @property
    def singularity(self) -> float:
        d1 = self.derivative_zeros.first
        return d1 * d1 if self.form.sqrt_variable else d1


_EXTEND = 400


def _split_weights(table: ZeroTable, n: int):
    """Arrays (zeros, weights-in-sum, weights-in-tail) splitting the table
    at n factors counted with multiplicity."""
    if table.weighted_count < n:
        raise InsufficientZeros(
            f"table {table.label!r} holds {table.weighted_count} zeros "
            f"(with multiplicity), {n} requested"
        )
    d = np.asarray(table.zeros)
    m = np.asarray(table.multiplicities, dtype=float)
    cum = np.cumsum(m)
    take = np.clip(m - np.maximum(cum - n, 0.0), 0.0, None)
    return d, take, m - take


def _sum_pair_squared(z2: complex, table: ZeroTable, n: int) -> complex:
    """sum over the first n weighted zeros of 2 z^2/(d^2 - z^2).

    Remaining table entries, then _EXTEND extrapolated zeros, then an
    integral comparison estimate the omitted tail.
    """
    d, take, rest = _split_weights(table, n)
    terms = 2.0 * z2 / (d * d - z2)
    total = np.sum(take * terms) + np.sum(rest * terms)
    gap = tail_gap(table)
    dens = float(table.multiplicities[-1])
    ext = d[-1] + gap * np.arange(1, _EXTEND + 1)
    total += dens * np.sum(2.0 * z2 / (ext * ext - z2))
    t0 = ext[-1] + 0.5 * gap
    zc = np.sqrt(complex(z2))
    total += dens / gap * zc * np.log((t0 + zc) / (t0 - zc))
    return complex(total)


def _sum_linear(z: complex, table: ZeroTable, n: int) -> complex:
    """sum over the first n weighted entries of z/(d^2 - z), tail included.

    Entries are sqrt-variable zeros; d^2 are the actual singular points.
    """
    d, take, rest = _split_weights(table, n)
    terms = z / (d * d - z)
    total = np.sum(take * terms) + np.sum(rest * terms)
    gap = tail_gap(table)
    dens = float(table.multiplicities[-1])
    ext = d[-1] + gap * np.arange(1, _EXTEND + 1)
    total += dens * np.sum(z / (ext * ext - z))
    t0 = ext[-1] + 0.5 * gap
    w = cmath.sqrt(complex(z))
    if w == 0.0:
        return complex(total)
    total += dens / gap * 0.5 * w * np.log((t0 + w) / (t0 - w))
    return complex(total)


def curvature_sum(data: CurvatureSeriesData, z: complex,
                  trunc: ProductTruncation = ProductTruncation(300)) -> complex:
    """Curvature at complex z from the zero tables.

    Valid for |z| strictly inside the first singularity of the form's
    derivative; real z reproduces curvature_real, and conjugate z gives
    the conjugate value (all coefficients are real).
    """
    zc = complex(z)
    if abs(zc) >= data.singularity:
        raise PreconditionViolation(
            f"|z|={abs(zc):.6g} is not inside the first singularity "
            f"{data.singularity:.6g}"
        )
    n = trunc.n_zeros
    if data.form.sqrt_variable:
        return 1.0 - _sum_linear(zc, data.derivative_zeros, n)
    z2 = zc * zc
    total = 1.0 - _sum_pair_squared(z2, data.derivative_zeros, n)
    if data.weight != 0.0:
        total -= data.weight * _sum_pair_squared(z2, data.function_zeros, n)
    return complex(total)


def curvature_data(form: FormKind, param, n_zeros: int = 300,
                   cfg: SeriesConfig = DEFAULT_CONFIG) -> CurvatureSeriesData:
    """Assemble the zero tables a form needs for disk evaluation.

    Tables run 120 entries past the truncation depth so the sums' tail
    estimates rest on known zeros rather than extrapolation alone.
    """
    p = _shape(form, param)
    family = form.family
    deriv_target = {
        FormKind.F: "lommel-deriv",
        FormKind.G: "g-deriv",
        FormKind.H: "h-deriv",
        FormKind.U: "struve-deriv",
        FormKind.V: "v-deriv",
        FormKind.W: "w-deriv",
    }[form]
    depth = n_zeros + 120
    func = tables.build_zero_table(family, p, depth, cfg=cfg)
    deriv = tables.build_zero_table(deriv_target, p, depth, cfg=cfg)
    return CurvatureSeriesData(
        form=form,
        param=param,
        function_zeros=func,
        derivative_zeros=deriv,
        weight=form_weight(form, param),
    )
