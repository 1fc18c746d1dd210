"""Named zero-table builders.

Each target names a function whose ascending positive zeros downstream
code needs: the two kernels, their derivatives, and the derivatives of
the four normalized forms that have their own zero sequences.  The
square-root forms (h, w) are scanned in the sqrt-variable, where their
zeros are asymptotically pi-spaced; entries of those tables square to
the actual zeros of h' and w'.

Builders are memoized per process; tables are immutable.
"""

from __future__ import annotations

import functools
import math

from . import kernels
from .errors import InvalidParameter, NotEnoughZeros
from .series import DEFAULT_CONFIG, SeriesConfig
from .zeros import ZeroTable, positive_zeros

__all__ = ["ZERO_TARGETS", "build_zero_table", "bracket_singularity"]

_SCANS = {
    "lommel": (kernels.lommel_even, None),
    "lommel-deriv": (kernels.lommel_deriv_even, None),
    "struve": (kernels.struve_even, kernels.struve_even_prime),
    "struve-deriv": (kernels.struve_deriv_even, None),
    "g-deriv": (kernels.g_deriv_even, None),
    "h-deriv": (kernels.h_deriv_even, None),
    "v-deriv": (kernels.v_deriv_even, None),
    "w-deriv": (kernels.w_deriv_even, None),
}

ZERO_TARGETS = tuple(sorted(_SCANS))

# scanned in y = sqrt(z); table entries square to the zeros proper
_SQRT_VARIABLE = frozenset({"h-deriv", "w-deriv"})


def _family(target: str) -> str:
    return "lommel" if target in ("lommel", "lommel-deriv", "g-deriv",
                                  "h-deriv") else "struve"


@functools.lru_cache(maxsize=None)
def build_zero_table(target: str, shape: float, count: int,
                     scan_step: float = 0.25, tol: float = 1e-12,
                     cfg: SeriesConfig = DEFAULT_CONFIG) -> ZeroTable:
    """First ``count`` distinct positive zeros of the named target.

    ``shape`` is mu for the Lommel-family targets and nu for the Struve
    family.  The Struve kernel scan carries its derivative so touching
    zeros (nu = 1/2) refine through a clean sign change.

    The default scan step is coarser than the generic positive_zeros
    default: distinct zeros of every target here are at least ~2.4 apart
    (asymptotically pi or 2*pi), which a 0.25 step cannot straddle; the
    spacing sanity check below guards the assumption.
    """
    if target not in _SCANS:
        raise InvalidParameter(
            f"unknown zero target {target!r}; expected one of {ZERO_TARGETS}"
        )
    f, fprime = _SCANS[target]
    handle = lambda z: f(shape, z, cfg)
    prime = (lambda z: fprime(shape, z, cfg)) if fprime is not None else None
    suffix = "mu" if _family(target) == "lommel" else "nu"
    label = f"{target}({suffix}={shape:g})"
    if target in _SQRT_VARIABLE:
        label += " [sqrt variable]"
    # distinct zeros are 2*pi-spaced when the kernel only touches zero
    # (Struve at nu = 1/2), so the safety cap doubles the pi-spaced default
    limit = (2 * count + 4) * math.pi + 10.0
    table = positive_zeros(handle, count, scan_step=scan_step, tol=tol,
                           upper_limit=limit, label=label, fprime=prime)
    if not pi_spacing_sanity(table):
        raise NotEnoughZeros(
            f"zero spacing of {label} collapsed below the scan resolution; "
            "rebuild with a finer scan_step"
        )
    return table


_BRACKET_TARGET = {
    "f": "lommel-deriv",
    "g": "g-deriv",
    "h": "h-deriv",
    "u": "struve-deriv",
    "v": "v-deriv",
    "w": "w-deriv",
}


def bracket_singularity(form_tag: str, shape: float,
                        cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """First positive zero of the form's derivative denominator.

    This is the right end of the interval on which the curvature map is
    defined and strictly decreasing; every radius lies strictly below it.
    For h and w the scan variable is sqrt(z), so the entry squares.
    """
    target = _BRACKET_TARGET[form_tag]
    table = build_zero_table(target, shape, 1, cfg=cfg)
    first = table.first
    return first * first if target in _SQRT_VARIABLE else first


def kernel_first_zero(form_tag: str, shape: float,
                      cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """First positive zero of the underlying kernel (s or H).

    For the sqrt-variable forms this is reported in the form's own
    variable, i.e. the square of the kernel zero.
    """
    family = "lommel" if form_tag in "fgh" else "struve"
    z1 = build_zero_table(family, shape, 1, cfg=cfg).first
    return z1 * z1 if form_tag in ("h", "w") else z1


def ordering_chain_ok(form_tag: str, shape: float, radius: float,
                      cfg: SeriesConfig = DEFAULT_CONFIG) -> bool:
    """radius < first derivative zero < first kernel zero, per theorem."""
    b = bracket_singularity(form_tag, shape, cfg)
    k1 = kernel_first_zero(form_tag, shape, cfg)
    return radius < b < k1


def pi_spacing_sanity(table: ZeroTable, rel: float = 0.75) -> bool:
    """Gaps of distinct entries never collapse below ``rel`` * pi.

    Cheap guard that the scan step did not straddle a zero pair; the
    kernels' distinct zeros are asymptotically pi-spaced (2*pi for the
    touching Struve case, which only widens gaps).
    """
    zs = table.zeros
    return all(b - a > rel * math.pi * 0.5 for a, b in zip(zs, zs[1:]))
