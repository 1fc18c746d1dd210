"""Tests for psi, the radius solver, and the conic-domain predicates."""

import math

import pytest

from lsradii import (BracketFailure, FormKind, InvalidParameter, LommelParam,
                     SeriesConfig, StruveParam, UniformityParams,
                     classify_domain, conic_contains, conic_margin,
                     convexity_radius, kernel_first_zero, printed_lhs, psi,
                     radius, uc_radius, verify_disk)

CFG = SeriesConfig()
UC = UniformityParams(0.0, 1.0)

ALL_FORMS = [
    (FormKind.F, LommelParam(0.3)),
    (FormKind.G, LommelParam(0.3)),
    (FormKind.H, LommelParam(0.3)),
    (FormKind.U, StruveParam(0.5)),
    (FormKind.V, StruveParam(0.5)),
    (FormKind.W, StruveParam(0.5)),
]


def test_uniformity_validation():
    with pytest.raises(InvalidParameter):
        UniformityParams(alpha=1.0)
    with pytest.raises(InvalidParameter):
        UniformityParams(alpha=-0.1)
    with pytest.raises(InvalidParameter):
        UniformityParams(beta=-1.0)


@pytest.mark.parametrize("form,param", ALL_FORMS)
@pytest.mark.parametrize("alpha,beta", [(0.0, 1.0), (0.3, 0.5), (0.75, 2.0)])
def test_psi_origin_limit(form, param, alpha, beta):
    up = UniformityParams(alpha, beta)
    assert psi(form, param, up, 1e-8, CFG) == pytest.approx(
        1.0 - alpha, abs=1e-6)


def test_psi_matches_printed_h():
    up = UniformityParams(0.2, 0.5)
    p = LommelParam(0.3)
    lhs = printed_lhs(FormKind.H, p, up, 0.8, CFG)
    assert 4.0 * psi(FormKind.H, p, up, 0.8, CFG) == pytest.approx(
        lhs, abs=1e-10)


def test_psi_w_vanishes_at_quarter_pi_squared(nu05):
    val = psi(FormKind.W, nu05, UC, math.pi ** 2 / 4.0, CFG)
    assert abs(val) <= 1e-10


@pytest.mark.parametrize("form,param", ALL_FORMS)
@pytest.mark.parametrize("alpha,beta", [(0.0, 0.0), (0.0, 1.0), (0.5, 0.5),
                                        (0.25, 2.0)])
def test_printed_equals_constant_times_psi(form, param, alpha, beta):
    up = UniformityParams(alpha, beta)
    c = form.printed_constant
    from lsradii import bracket_singularity
    shape = param.mu if form.family == "lommel" else param.nu
    b = bracket_singularity(form.value, shape, CFG)
    for i in range(1, 10):
        r = 0.9 * b * i / 10.0
        assert printed_lhs(form, param, up, r, CFG) == pytest.approx(
            c * psi(form, param, up, r, CFG), rel=1e-10, abs=1e-10)


@pytest.mark.parametrize("form,param", ALL_FORMS)
def test_radius_result_invariants(form, param):
    res = radius(form, param, UC, cfg=CFG)
    assert 0.0 < res.radius < res.bracket_hi
    assert abs(res.residual) <= 1e-10
    assert res.iterations <= 200


@pytest.mark.parametrize("form,param", ALL_FORMS)
def test_ordering_chain(form, param):
    # radius < first derivative zero < first kernel zero
    res = radius(form, param, UC, cfg=CFG)
    shape = param.mu if form.family == "lommel" else param.nu
    k1 = kernel_first_zero(form.value, shape, CFG)
    assert res.radius < res.bracket_hi < k1


def test_unique_sign_change_of_psi(mu03):
    res = radius(FormKind.F, mu03, UC, cfg=CFG)
    changes = 0
    prev = psi(FormKind.F, mu03, UC, res.bracket_hi * 1e-3, CFG)
    for i in range(2, 51):
        cur = psi(FormKind.F, mu03, UC, res.bracket_hi * (1 - 1e-9) * i / 51,
                  CFG)
        if (prev > 0) != (cur > 0):
            changes += 1
        prev = cur
    assert changes == 1


def test_uc_radius_examples(mu03, nu05):
    assert uc_radius(FormKind.F, mu03, cfg=CFG).radius == pytest.approx(
        0.6623, abs=5e-4)
    assert uc_radius(FormKind.W, nu05, cfg=CFG).radius == pytest.approx(
        math.pi ** 2 / 4.0, abs=1e-10)


def test_radius_tol_validation(mu03):
    with pytest.raises(InvalidParameter):
        radius(FormKind.F, mu03, UC, tol=1e-15)


def test_beta_zero_reduction(mu03):
    # alpha = beta = 0 reduces to the classical convexity radius
    got = radius(FormKind.F, mu03, UniformityParams(0.0, 0.0), cfg=CFG)
    conv = convexity_radius(FormKind.F, mu03, cfg=CFG)
    assert got.radius == pytest.approx(conv, abs=1e-10)


def test_strict_below_convexity_radius(mu03):
    conv = convexity_radius(FormKind.F, mu03, cfg=CFG)
    for up in (UniformityParams(0.0, 0.5), UniformityParams(0.2, 0.0), UC):
        assert radius(FormKind.F, mu03, up, cfg=CFG).radius < conv


def test_radius_monotone_quick(mu03):
    r_by_alpha = [radius(FormKind.F, mu03, UniformityParams(a, 1.0),
                         cfg=CFG).radius for a in (0.0, 0.25, 0.5, 0.75)]
    assert all(x >= y for x, y in zip(r_by_alpha, r_by_alpha[1:]))


# --- conic domain ------------------------------------------------------------

def test_conic_examples():
    assert conic_contains(1.0 + 0.0j, UC)
    assert not conic_contains(1.0 + 1.0j, UC)          # boundary: 1 > 1 fails
    half = UniformityParams(0.3, 0.0)
    assert conic_contains(0.31 + 5.0j, half)           # beta=0: Re > alpha
    assert not conic_contains(0.29 + 0.0j, half)


def test_conic_margin_sign():
    up = UniformityParams(0.1, 0.7)
    w = 0.9 + 0.2j
    m = conic_margin(w, up)
    assert m == pytest.approx(0.9 - 0.7 * math.hypot(-0.1, 0.2) - 0.1)
    assert conic_contains(w, up) == (m > 0)


def test_classify_domain():
    assert classify_domain(2.0) == "elliptic"
    assert classify_domain(1.0) == "parabolic"
    assert classify_domain(0.3) == "hyperbolic"
    assert classify_domain(0.0) == "half_plane"
    with pytest.raises(InvalidParameter):
        classify_domain(-0.5)


# --- disk sampling -----------------------------------------------------------

def test_verify_disk_vacuous(mu03):
    rep = verify_disk(FormKind.F, mu03, UC, 0.5, 0, seed=7, cfg=CFG)
    assert rep.inside_fraction == 1.0
    assert rep.worst_margin == math.inf
    assert rep.samples == 0


def test_verify_disk_inside_and_outside(mu03):
    res = radius(FormKind.F, mu03, UC, cfg=CFG)
    inside = verify_disk(FormKind.F, mu03, UC, 0.99 * res.radius, 100,
                         seed=11, cfg=CFG)
    assert inside.inside_fraction == 1.0
    assert inside.worst_margin > 0.0
    outside = verify_disk(FormKind.F, mu03, UC, 1.05 * res.radius, 100,
                          seed=11, cfg=CFG)
    assert outside.inside_fraction < 1.0
    assert outside.worst_margin < 0.0


def test_verify_disk_deterministic(mu03):
    a = verify_disk(FormKind.F, mu03, UC, 0.5, 64, seed=3, cfg=CFG)
    b = verify_disk(FormKind.F, mu03, UC, 0.5, 64, seed=3, cfg=CFG)
    assert a == b


def test_verify_disk_validation(mu03):
    with pytest.raises(InvalidParameter):
        verify_disk(FormKind.F, mu03, UC, 0.5, -1, seed=0, cfg=CFG)
    with pytest.raises(InvalidParameter):
        verify_disk(FormKind.F, mu03, UC, 50.0, 10, seed=0, cfg=CFG)
