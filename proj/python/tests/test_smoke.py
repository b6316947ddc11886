import math

import pytest

import sig6


@pytest.fixture(scope="module")
def ctx():
    return sig6.Sig6Context(sig6.Modulus(0.5))


def test_closed_form_matches_series():
    for z in (0.0, 0.1, 0.5, 0.9):
        closed = sig6.f16_56_half(z)
        series = sig6.gauss_2f1_series(1 / 6, 5 / 6, 1 / 2, z)
        assert closed == pytest.approx(series, rel=1e-12)


def test_k_routes_agree():
    m = sig6.Modulus(0.5)
    reference = sig6.complete_K_agm(m)
    for route in (
        sig6.complete_K_series,
        sig6.complete_K_quadrature,
        sig6.complete_K_psi_integral,
        sig6.complete_K_cubic_integral,
    ):
        assert route(m) == pytest.approx(reference, rel=1e-10)
    assert reference > math.pi / 2


def test_pythagorean_and_anchors(ctx):
    K = ctx.K
    assert ctx.s6(0.0) == 0.0
    assert ctx.c6(0.0) == 1.0
    assert ctx.s6(K) == pytest.approx(1.0, abs=1e-12)
    for u in (0.3, 1.1, 2.0, -0.7):
        assert ctx.s6(u) ** 2 + ctx.c6(u) ** 2 == pytest.approx(1.0, abs=1e-12)


def test_inversion_round_trip(ctx):
    for T in (-2.0, -0.4, 0.0, 0.9, 1.5, 4.0):
        assert ctx.phi(ctx.f(T)) == pytest.approx(T, abs=1e-10)


def test_periodicity(ctx):
    K = ctx.K
    assert ctx.s6(0.37 + 4 * K) == pytest.approx(ctx.s6(0.37), abs=1e-10)


def test_weierstrass_roots_sum_to_zero():
    data = sig6.weierstrass_build(sig6.Modulus(0.5))
    assert data.e1 > data.e2 > data.e3
    assert data.e1 + data.e2 + data.e3 == pytest.approx(0.0, abs=1e-14)
    assert sig6.half_period_integral(data) == pytest.approx(data.omega, rel=1e-8)


def test_identity_reports_pass():
    report = sig6.verify_sextic_identity([0.05, 0.2, 0.4, 0.6, 0.85])
    assert report.passed
    assert len(report.points) == 5
    for which in ("theorem", "corollary"):
        assert sig6.verify_bbg([0.1, 0.3, 0.7, 0.9], which).passed


def test_modulus_map_pair_unpacks():
    x, xi = sig6.map_x_to_xi(0.5)
    assert x == 0.5
    assert xi == pytest.approx(0.5, abs=1e-14)


def test_quadrature_callbacks():
    assert sig6.integrate_smooth(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-12)


def test_errors_map_to_python_exceptions():
    with pytest.raises(sig6.DomainError):
        sig6.Modulus(1.5)
    with pytest.raises(sig6.Sig6Error):
        sig6.Sig6Context(sig6.Modulus(1e-9))
    with pytest.raises(sig6.DomainError):
        sig6.verify_bbg([0.5], "lemma")


def test_self_test_passes():
    results = sig6.self_test()
    assert [r.id for r in results] == list(range(1, 10))
    assert all(r.passed for r in results)
