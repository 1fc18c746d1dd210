"""Positive real zeros by bracketing scan plus bisection.

The kernels here have simple, asymptotically pi-spaced positive zeros,
so a fixed-step scan with bisection refinement is robust and fast.  One
genuine wrinkle is supported: a function can *touch* zero without a sign
change (an even-multiplicity zero; the Struve kernel at nu = 1/2 does
exactly this at 2*pi*n).  The scanner therefore also inspects one-signed
local extrema and, when the refined extremum sits at the numerical zero
level, records a double zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (InsufficientZeros, InvalidParameter, NotEnoughZeros,
                     PreconditionViolation)

__all__ = [
    "ZeroTable",
    "positive_zeros",
    "interlacing_check",
    "lemma1_bound_check",
]

# |f(extremum)| below this fraction of the bracket-edge magnitude is
# classified as a touching zero; genuine one-signed minima of the kernels
# sit many orders of magnitude higher, true touch points at roundoff.
_TOUCH_REL = 1e-8


@dataclass(frozen=True)
class ZeroTable:
    """Ascending positive zeros of a named real-analytic function.

    Entries are distinct; an even-multiplicity (touching) zero carries
    multiplicity 2 in the parallel tuple.  ``tol`` is the bracket width
    the refinement achieved.
    """

    label: str
    zeros: tuple
    tol: float
    scan_step: float
    multiplicities: tuple = ()

    def __post_init__(self):
        zs = tuple(float(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zs)
        mult = self.multiplicities or tuple(1 for _ in zs)
        mult = tuple(int(m) for m in mult)
        if len(mult) != len(zs):
            raise InvalidParameter("multiplicities must match zeros in length")
        object.__setattr__(self, "multiplicities", mult)
        if any(z <= 0.0 for z in zs):
            raise InvalidParameter("zero table entries must be positive")
        if any(b <= a for a, b in zip(zs, zs[1:])):
            raise InvalidParameter("zero table entries must be strictly increasing")
        if any(m < 1 for m in mult):
            raise InvalidParameter("multiplicities must be >= 1")

    def __len__(self):
        return len(self.zeros)

    @property
    def weighted_count(self) -> int:
        return sum(self.multiplicities)

    @property
    def first(self) -> float:
        return self.zeros[0]

    def head(self, count: int) -> tuple:
        if len(self.zeros) < count:
            raise InsufficientZeros(
                f"table {self.label!r} holds {len(self.zeros)} zeros, "
                f"{count} requested"
            )
        return self.zeros[:count]


def _bisect(f, a, b, fa, fb, tol):
    """Plain bisection on a sign change; returns (midpoint, width)."""
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m, 0.0
        if (fa < 0.0) != (fm < 0.0):
            b, fb = m, fm
        else:
            a, fa = m, fm
    return 0.5 * (a + b), b - a


def _refine_extremum(f, a, m, b, tol):
    """Golden-section refinement of a one-signed interior extremum.

    Works on |f|; accuracy of the abscissa is sqrt(eps)-limited for a
    quadratic touch point, so ``tol`` below ~1e-8 is not meaningful here.
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    lo, hi = a, b
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = abs(f(x1)), abs(f(x2))
    goal = max(tol, 1e-9)
    while hi - lo > goal:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = abs(f(x1))
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = abs(f(x2))
    x = 0.5 * (lo + hi)
    return x, f(x)


def positive_zeros(f, count: int, scan_step: float = 0.05, tol: float = 1e-12,
                   upper_limit: float = None, label: str = "f",
                   fprime=None) -> ZeroTable:
    """First ``count`` distinct positive zeros of ``f``, ascending.

    Sign changes between scan points are refined by bisection to bracket
    width <= tol.  A scan point evaluating exactly to zero is accepted
    as-is.  One-signed local extrema whose refined value sits at the
    numerical zero level are recorded as touching zeros of multiplicity 2
    (refined through ``fprime`` when supplied, golden section otherwise).

    Raises NotEnoughZeros if the scan exhausts ``upper_limit`` first.
    """
    if count < 0:
        raise InvalidParameter(f"count must be >= 0, got {count}")
    if scan_step <= 0.0 or tol <= 0.0:
        raise InvalidParameter("scan_step and tol must be positive")
    if upper_limit is None:
        upper_limit = (count + 2) * math.pi + 10.0
    if count == 0:
        return ZeroTable(label=label, zeros=(), tol=tol, scan_step=scan_step,
                         multiplicities=())

    found = []       # (zero, multiplicity)
    achieved = 0.0

    z_prev = scan_step
    f_prev = f(z_prev)
    if f_prev == 0.0:
        found.append((z_prev, 1))
    z_pprev, f_pprev = None, None
    z = 2.0 * scan_step
    while len(found) < count and z <= upper_limit:
        f_cur = f(z)
        if f_cur == 0.0:
            found.append((z, 1))
        elif f_prev != 0.0 and (f_prev < 0.0) != (f_cur < 0.0):
            root, width = _bisect(f, z_prev, z, f_prev, f_cur, tol)
            found.append((root, 1))
            achieved = max(achieved, width)
        elif (f_pprev is not None and f_prev != 0.0
              and (f_pprev > 0.0) == (f_prev > 0.0) == (f_cur > 0.0)
              and abs(f_prev) < abs(f_pprev) and abs(f_prev) < abs(f_cur)):
            # one-signed dip: either a touching zero or a plain extremum
            scale = max(abs(f_pprev), abs(f_cur))
            if fprime is not None:
                fpa, fpb = fprime(z_pprev), fprime(z)
                if fpa != 0.0 and (fpa < 0.0) != (fpb < 0.0):
                    x, width = _bisect(fprime, z_pprev, z, fpa, fpb, tol)
                    vx = f(x)
                else:
                    x, vx, width = None, None, None
            else:
                x, vx = _refine_extremum(f, z_pprev, z_prev, z, tol)
                width = max(tol, 1e-9)
            if x is not None:
                # test for touching first: at a true touch point the
                # refined value is roundoff of either sign
                if abs(vx) <= _TOUCH_REL * scale:
                    found.append((x, 2))
                    achieved = max(achieved, width)
                elif (vx > 0.0) != (f_prev > 0.0):
                    # the dip decisively crosses: recover both simple zeros
                    r1, w1 = _bisect(f, z_pprev, x, f_pprev, vx, tol)
                    r2, w2 = _bisect(f, x, z, vx, f_cur, tol)
                    found.append((r1, 1))
                    if len(found) < count:
                        found.append((r2, 1))
                    achieved = max(achieved, w1, w2)
        z_pprev, f_pprev = z_prev, f_prev
        z_prev, f_prev = z, f_cur
        z += scan_step

    if len(found) < count:
        raise NotEnoughZeros(
            f"found {len(found)} zeros of {label!r} below {upper_limit:.6g}; "
            f"{count} requested (check scan_step/upper_limit)"
        )
    return ZeroTable(
        label=label,
        zeros=tuple(r for r, _ in found),
        tol=max(achieved, tol),
        scan_step=scan_step,
        multiplicities=tuple(m for _, m in found),
    )


def tail_gap(table: ZeroTable, window: int = 8) -> float:
    """Mean spacing of the table's deepest entries.

    Averaged over an even number of gaps because some kernels (Struve
    near nu = 0) have gaps alternating around the asymptotic spacing;
    extrapolating on a single gap would drift the whole tail lattice.
    """
    zs = table.zeros
    if len(zs) < 2:
        return zs[0]
    k = min(window, len(zs) - 1)
    if k > 1 and k % 2:
        k -= 1
    return (zs[-1] - zs[-1 - k]) / k


def interlacing_check(a: ZeroTable, b: ZeroTable, count: int) -> bool:
    """True iff b_1 < a_1 < b_2 < a_2 < ... through index ``count``.

    ``b`` holds the derivative zeros, ``a`` the function zeros; for the
    kernels here the first derivative zero precedes the first function
    zero, which fixes the pairing above.
    """
    az = a.head(count)
    bz = b.head(count)
    for i in range(count):
        if not bz[i] < az[i]:
            return False
        if i + 1 < count and not az[i] < bz[i + 1]:
            return False
    return True


def lemma1_bound_check(a: float, b: float, r: float, z: complex,
                       lam: float) -> bool:
    """Check the disk inequalities used by every radius proof.

    Ordering a > b > r >= |z| checks, for lambda in [0, 1],

        |z/(b-z) - lam*z/(a-z)| <= r/(b-r) - lam*r/(a-r)        (modulus)
        Re(z/(b-z) - lam*z/(a-z)) <= r/(b-r) - lam*r/(a-r)      (real part)
        Re(z/(b-z)) <= |z/(b-z)| <= r/(b-r)                     (single pole)

    Ordering b > a > r >= |z| checks |1/((a+z)(b-z))| <= 1/((a-r)(b+r)).
    Equality holds on the positive real axis at z = r, so comparisons
    carry a 1e-12 relative slack.
    """
    if not 0.0 <= lam <= 1.0:
        raise PreconditionViolation(f"lambda must lie in [0,1], got {lam}")
    if not r >= abs(z):
        raise PreconditionViolation(f"need r >= |z|, got r={r}, |z|={abs(z)}")
    zc = complex(z)

    def le(lhs, rhs):
        return lhs <= rhs + 1e-12 * max(1.0, abs(rhs))

    if a > b > r:
        lhs_c = zc / (b - zc) - lam * zc / (a - zc)
        rhs = r / (b - r) - lam * r / (a - r)
        single = zc / (b - zc)
        return (le(abs(lhs_c), rhs)
                and le(lhs_c.real, rhs)
                and le(single.real, abs(single))
                and le(abs(single), r / (b - r)))
    if b > a > r:
        return le(abs(1.0 / ((a + zc) * (b - zc))),
                  1.0 / ((a - r) * (b + r)))
    raise PreconditionViolation(
        f"need a > b > r >= |z| or b > a > r >= |z|; got a={a}, b={b}, r={r}"
    )
