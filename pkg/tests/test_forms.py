"""Tests for the normalized forms and the two curvature routes."""

import dataclasses
import math

import pytest

from lsradii import (FormKind, InsufficientZeros, InvalidParameter,
                     LommelParam, PreconditionViolation, ProductTruncation,
                     SeriesConfig, StruveParam, curvature_data,
                     curvature_real, curvature_sum, eval_form, form_weight,
                     lommel_s)
from lsradii.forms import _guard
from lsradii.errors import SingularityReached

CFG = SeriesConfig()
ALL_FORMS = [
    (FormKind.F, LommelParam(0.3)),
    (FormKind.G, LommelParam(0.3)),
    (FormKind.H, LommelParam(0.3)),
    (FormKind.U, StruveParam(0.5)),
    (FormKind.V, StruveParam(0.5)),
    (FormKind.W, StruveParam(0.5)),
]


# --- values -----------------------------------------------------------------

def test_g_form_value(mu03):
    # g(z) = z 1F2(1; 23/20, 33/20; -z^2/4) = mu(mu+1) z^(1/2-mu) s(z)
    z = 0.5
    got = eval_form(FormKind.G, mu03, z, CFG)
    via_kernel = 0.39 * z ** 0.2 * lommel_s(mu03, z, CFG)
    assert got == pytest.approx(via_kernel, rel=1e-13)


def test_v_form_trig(nu05):
    got = eval_form(FormKind.V, nu05, 1.0, CFG)
    assert got == pytest.approx(2.0 * (1.0 - math.cos(1.0)), rel=1e-12)


def test_w_form_trig(nu05):
    got = eval_form(FormKind.W, nu05, 4.0, CFG)
    assert got == pytest.approx(2.0 * (1.0 - math.cos(2.0)), rel=1e-12)


def test_f_form_fractional_power(mu03):
    z = 0.4
    base = eval_form(FormKind.G, mu03, z, CFG) / z
    assert eval_form(FormKind.F, mu03, z, CFG) == pytest.approx(
        z * base ** 1.25, rel=1e-13)


def test_f_form_beyond_first_zero_rejected(mu03):
    with pytest.raises(InvalidParameter):
        eval_form(FormKind.F, mu03, 4.0, CFG)   # first kernel zero ~ 3.74
    with pytest.raises(InvalidParameter):
        eval_form(FormKind.G, mu03, 0.0, CFG)


def test_all_forms_slope_one_at_origin():
    # every normalization is z + O(z^2)
    z = 1e-7
    for form, param in ALL_FORMS:
        assert eval_form(form, param, z, CFG) == pytest.approx(z, rel=1e-6)


# --- curvature on the real axis ----------------------------------------------

@pytest.mark.parametrize("form,param", ALL_FORMS)
def test_curvature_limit_one_at_origin(form, param):
    assert curvature_real(form, param, 1e-8, CFG) == pytest.approx(1.0, abs=1e-6)


def test_w_curvature_closed_form(nu05):
    # 1 + z w''/w' = 1 - (1 - sqrt(r) cot sqrt(r))/2 at nu = 1/2
    for r in (0.5, 1.0, 2.0, math.pi ** 2 / 4.0):
        y = math.sqrt(r)
        want = 1.0 - 0.5 * (1.0 - y / math.tan(y))
        assert curvature_real(FormKind.W, nu05, r, CFG) == pytest.approx(
            want, rel=1e-12)


@pytest.mark.parametrize("form,param", ALL_FORMS)
def test_curvature_strictly_decreasing(form, param):
    from lsradii import bracket_singularity
    shape = param.mu if form.family == "lommel" else param.nu
    b = bracket_singularity(form.value, shape, CFG)
    values = [curvature_real(form, param, b * i / 51.0, CFG)
              for i in range(1, 51)]
    assert all(x > y for x, y in zip(values, values[1:]))


def test_denominator_guard():
    with pytest.raises(SingularityReached):
        _guard(0.0, "probe")
    with pytest.raises(SingularityReached):
        _guard(1e-301, "probe")


# --- curvature from zero tables ----------------------------------------------

def test_sum_at_origin_is_one(mu03):
    data = curvature_data(FormKind.F, mu03, 300, CFG)
    assert curvature_sum(data, 0.0) == 1.0 + 0.0j


def test_sum_conjugate_symmetry(mu03):
    data = curvature_data(FormKind.F, mu03, 300, CFG)
    z = complex(0.3, 0.25)
    a = curvature_sum(data, z)
    b = curvature_sum(data, z.conjugate())
    assert b == pytest.approx(a.conjugate(), rel=1e-14)


def test_f_sum_matches_series_ratio(mu03):
    data = curvature_data(FormKind.F, mu03, 300, CFG)
    got = curvature_sum(data, 0.4)
    want = curvature_real(FormKind.F, mu03, 0.4, CFG)
    assert abs(got.imag) < 1e-12
    assert got.real == pytest.approx(want, rel=1e-6)


@pytest.mark.parametrize("form,param", ALL_FORMS)
def test_identity_chain_on_real_axis(form, param):
    # series-ratio curvature equals the zero-expansion curvature: the
    # identity every radius equation rests on
    data = curvature_data(form, param, 300, CFG)
    sing = data.singularity
    for i in range(1, 20):
        r = 0.95 * sing * i / 20.0
        got = curvature_sum(data, r).real
        want = curvature_real(form, param, r, CFG)
        assert got == pytest.approx(want, rel=1e-5, abs=1e-8), f"r={r}"


def test_u_sum_against_second_difference_of_u():
    # independent route: numerically differentiate the u form itself
    p = StruveParam(0.25)
    data = curvature_data(FormKind.U, p, 300, CFG)
    r = abs(complex(0.3, 0.2))
    h = 1e-4
    u = lambda t: eval_form(FormKind.U, p, t, CFG)
    up = (u(r + h) - u(r - h)) / (2 * h)
    upp = (u(r + h) - 2 * u(r) + u(r - h)) / h ** 2
    want = 1.0 + r * upp / up
    got = curvature_sum(data, r).real
    assert got == pytest.approx(want, abs=1e-5)
    # and the complex point is conjugate-symmetric
    z = complex(0.3, 0.2)
    assert curvature_sum(data, z).conjugate() == pytest.approx(
        curvature_sum(data, z.conjugate()), rel=1e-14)


def test_weight_bookkeeping(mu03):
    # zeroing the weight must reduce the f expansion to the single-sum
    # form used by the weightless forms over the same derivative table
    data = curvature_data(FormKind.F, mu03, 300, CFG)
    no_weight = dataclasses.replace(data, weight=0.0)
    alike = dataclasses.replace(no_weight, form=FormKind.G)
    z = complex(0.2, 0.1)
    assert curvature_sum(no_weight, z) == curvature_sum(alike, z)
    assert form_weight(FormKind.G, mu03) == 0.0
    assert form_weight(FormKind.F, mu03) == pytest.approx(0.25)
    assert form_weight(FormKind.U, StruveParam(0.5)) == pytest.approx(-1 / 3)


def test_sum_preconditions(mu03):
    data = curvature_data(FormKind.F, mu03, 300, CFG)
    with pytest.raises(PreconditionViolation):
        curvature_sum(data, data.singularity * 1.01)
    with pytest.raises(InsufficientZeros):
        curvature_sum(data, 0.1, ProductTruncation(10_000))


def test_family_param_mismatch():
    with pytest.raises(InvalidParameter):
        eval_form(FormKind.F, StruveParam(0.5), 1.0, CFG)
    with pytest.raises(InvalidParameter):
        curvature_real(FormKind.V, LommelParam(0.3), 1.0, CFG)
