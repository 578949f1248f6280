import cmath
import math

import mpmath as mp
import numpy as np
import pytest

from leastcap import constants as C
from leastcap import exact
from leastcap.errors import BoundaryError, DomainError, PoleError
from leastcap.verify import triangle_grid

UNIT = exact.ISO_RIGHT_UNIT
CENTERED = exact.ISO_RIGHT_CENTERED
T30 = exact.TRIANGLE_306090
SIM = exact.UNIT_TO_CENTERED


def boundary_samples(tri, per_side):
    return tri.boundary_points(per_side)


# ---------------------------------------------------------------------------
# sigma route

@pytest.mark.parametrize("w", [0.3 + 0.3j, 0.25 + 0.25j, 0.1 + 0.6j, 0.5 + 0.2j, 0.05 + 0.05j])
def test_f_w_sigma_boundary_zero_normalization(w):
    ctx = exact.SigmaMapContext(w)
    assert abs(ctx.w_prime - exact.reflect_hypotenuse(w)) == 0
    assert abs(exact.f_w_sigma(w, ctx)) < 1e-11
    assert abs(exact.f_w_sigma(1.0, ctx) - 1.0) < 1e-12
    for z in boundary_samples(UNIT, 20):
        assert abs(abs(exact.f_w_sigma(z, ctx)) - 1.0) < 1e-9


def test_f_w_sigma_interior_modulus_below_one():
    ctx = exact.SigmaMapContext(0.3 + 0.3j)
    for z in triangle_grid(UNIT, 6):
        assert abs(exact.f_w_sigma(z, ctx)) < 1.0


def test_f_w_sigma_reflection_consistency():
    ctx = exact.SigmaMapContext(0.2 + 0.35j)
    for y in np.linspace(-0.9, 0.9, 7):
        a = exact._ratio(-1 + 1j * y, ctx.zeros, ctx.poles, ctx.lat)
        b = exact._ratio(1 + 1j * y, ctx.zeros, ctx.poles, ctx.lat)
        assert abs(a[0] / a[1] - b[0] / b[1]) < 1e-9
    for x in np.linspace(-0.9, 0.9, 7):
        a = exact._ratio(x - 1j, ctx.zeros, ctx.poles, ctx.lat)
        b = exact._ratio(x + 1j, ctx.zeros, ctx.poles, ctx.lat)
        assert abs(a[0] / a[1] - b[0] / b[1]) < 1e-9


def test_h_sigma_examples():
    w0 = (1 + 1j) * 0.3011216108413220815538254
    assert abs(1 / exact.h_sigma(w0) - 0.3346161009568417919464744) < 1e-15
    assert abs(1 / exact.h_sigma(w0) - C.MAX_RADIUS_ISO) < 1e-12


def test_h_sigma_is_derivative_limit():
    w = (1 + 1j) / 3
    ctx = exact.SigmaMapContext(w)
    h = 1e-5
    lim = abs(exact.f_w_sigma(w + h, ctx) / h)
    assert abs(lim - exact.h_sigma(w)) < 1e-8 * exact.h_sigma(w) / 1e-3


def test_h_sigma_derivative_limit_richardson():
    # second-order accurate limit via the symmetric quotient
    w = (1 + 1j) / 3
    ctx = exact.SigmaMapContext(w)
    h = 1e-4
    d = (exact.f_w_sigma(w + h, ctx) - exact.f_w_sigma(w - h, ctx)) / (2 * h)
    assert abs(abs(d) - exact.h_sigma(w)) < 1e-8


def test_h_sigma_domain():
    with pytest.raises(DomainError):
        exact.h_sigma(0.8 + 0.8j)
    with pytest.raises(BoundaryError):
        exact.h_sigma(0.5 + 1e-12j)


def test_h_sigma_diagonal_symmetry():
    for t in (0.15, 0.3, 0.42):
        w = (1 + 1j) * t
        n = (1 - 1j) / math.sqrt(2)
        eps = 1e-5
        d = (exact.h_sigma(w + eps * n) - exact.h_sigma(w - eps * n)) / (2 * eps)
        assert abs(d) < 1e-7
        assert abs(exact.h_sigma(complex(w.imag, w.real)) - exact.h_sigma(w)) < 1e-12


def test_t0_minimizes_h_sigma_on_diagonal():
    from leastcap.optimize import maximize_on_segment

    t, _ = maximize_on_segment(lambda s: 1 / exact.h_sigma((1 + 1j) * s), 0.1, 0.45)
    assert abs(t - exact.t0_closed_form()) < 1e-10


# ---------------------------------------------------------------------------
# Weierstrass p maps

def test_psi_phi_examples():
    assert abs(exact.map_psi(1.0)) < 1e-12
    assert abs(exact.map_psi(0.2970894700 + 0.1926647354j) - 1j) < 1e-8
    assert exact.map_psi(0.4 + 0.3j).imag > 0
    assert abs(exact.map_phi(1.0) - 1.0) < 1e-12
    assert abs(exact.map_phi(0.1926647354 + 0.2970894700j) - 1j) < 1e-8
    z = 0.3 + 0.2j
    assert abs(exact.map_psi(1j * z.conjugate()).conjugate() * exact.map_phi(z) - 1) < 1e-12


def test_psi_matches_weierstrass_formula():
    from leastcap.special import weierstrass_p

    p1 = C.P_OF_1
    for z in triangle_grid(UNIT, 4):
        p = weierstrass_p(z)
        ref = -((p - p1) ** 2) / (4 * p1 * p)
        assert abs(exact.map_psi(z) - ref) < 1e-10 * max(1, abs(ref))


def test_inverse_examples():
    assert abs(exact.map_phi_inv(0)) < 1e-15
    assert abs(exact.map_phi_inv(1) - 1) < 1e-13
    assert abs(exact.map_phi_inv(1j) - (0.1926647354 + 0.2970894700j)) < 1e-9
    assert abs(exact.map_psi_inv(1j) - (0.2970894700 + 0.1926647354j)) < 1e-9
    # the map constants follow from the independent mpmath beta function
    ref = mp.sqrt(2 * mp.pi) / mp.gamma(0.25) ** 2 * mp.betainc(0.5, 0.25, 0, 1j)
    assert abs(exact.map_phi_inv(1j) - complex(ref)) < 1e-12


def test_identity_on_grid():
    worst = max(
        abs(exact.map_psi(1j * z.conjugate()).conjugate() * exact.map_phi(z) - 1)
        for z in triangle_grid(UNIT, 10)
    )
    assert worst < 1e-9


@pytest.mark.parametrize("zeta", [0.3 + 0.2j, -1.4 + 0.7j, 2.5 + 0.1j, 0.1 + 3j, 1j])
def test_upper_half_plane_round_trips(zeta):
    assert abs(exact.map_phi(exact.map_phi_inv(zeta)) - zeta) < 1e-9 * max(1, abs(zeta))
    assert abs(exact.map_psi(exact.map_psi_inv(zeta)) - zeta) < 1e-9 * max(1, abs(zeta))
    assert abs(exact.theta_iso(exact.theta_iso_inv(zeta)) - zeta) < 1e-9 * max(1, abs(zeta))


def test_triangle_round_trips():
    for z in triangle_grid(UNIT, 5):
        assert abs(exact.map_phi_inv(exact.map_phi(z)) - z) < 1e-9
        assert abs(exact.map_psi_inv(exact.map_psi(z)) - z) < 1e-9
        zk = SIM(z)
        assert abs(exact.theta_iso_inv(exact.theta_iso(zk)) - zk) < 1e-9


# ---------------------------------------------------------------------------
# sn-dn route

def test_theta_iso_examples():
    assert abs(exact.theta_iso(0)) < 1e-15
    assert abs(exact.theta_iso(C.KAPPA) - 1) < 1e-12
    assert abs(exact.theta_iso(-C.KAPPA) + 1) < 1e-12
    assert abs(exact.theta_iso(0.4154481080j) - 1j) < 1e-9
    zeta = 0.37 + 0.21j
    assert abs(exact.theta_iso(exact.theta_iso_inv(zeta)) - zeta) < 1e-9


def test_theta_iso_inv_examples():
    assert abs(exact.theta_iso_inv(1) - C.KAPPA) < 1e-12
    assert abs(exact.theta_iso_inv(1j) - 0.4154481080j) < 1e-10
    zeta = 0.6 + 0.8j
    assert abs(exact.theta_iso_inv(-zeta.conjugate()) + exact.theta_iso_inv(zeta).conjugate()) < 1e-15
    with pytest.raises(DomainError):
        exact.theta_iso_inv(0.3 - 0.1j)


def test_theta_iso_inv_against_integral():
    # (1/2) int_0^zeta (1 - s^2)^(-3/4) ds along the segment, by mpmath
    for zeta in (0.4 + 0.3j, 1.5 + 0.5j, -0.8 + 1.2j):
        ref = 0.5 * mp.quad(lambda t: zeta * (1 - (t * zeta) ** 2) ** (-0.75), [0, 1])
        assert abs(exact.theta_iso_inv(zeta) - complex(ref)) < 1e-12


def test_theta_iso_pole():
    with pytest.raises(PoleError):
        exact.theta_iso(1j * C.KAPPA)


@pytest.mark.parametrize("fn,dfn,tri", [
    (exact.theta_iso, exact.theta_iso_prime, CENTERED),
    (exact.theta_306090, exact.theta_306090_prime, T30),
])
def test_theta_prime_finite_differences(fn, dfn, tri):
    rng = np.random.default_rng(11)
    h = 1e-6
    for _ in range(20):
        a, b = rng.uniform(0.1, 0.8, 2)
        z = tri.from_barycentric(a, b * (1 - a))
        fd = (fn(z + h) - fn(z - h)) / (2 * h)
        assert abs(fd - dfn(z)) / abs(dfn(z)) < 1e-6


def test_f_w_theta():
    w = 0.1 + 0.5j
    assert abs(exact.f_w_theta(w, w)) < 1e-15
    assert abs(abs(exact.f_w_theta(0.3, w)) - 1) < 1e-12
    for z in boundary_samples(CENTERED, 20):
        if abs(z - 1j * C.KAPPA) > 1e-3:
            assert abs(abs(exact.f_w_theta(z, w)) - 1) < 1e-9


def test_f_w_theta_matches_sigma_modulus():
    for w in (0.3 + 0.3j, 0.2 + 0.5j):
        ctx = exact.SigmaMapContext(w)
        worst = 0.0
        for z in triangle_grid(UNIT, 10):
            a = abs(exact.f_w_theta(SIM(z), SIM(w)))
            b = abs(exact.f_w_sigma(z, ctx))
            worst = max(worst, abs(a - b))
        assert worst < 1e-9


def test_h_engines_agree_on_grid():
    worst = 0.0
    for w in triangle_grid(UNIT, 10):
        a = 1 / exact.h_sigma(w)
        b = (1 / exact.h_theta(SIM(w))) / (math.sqrt(2) * C.KAPPA)
        worst = max(worst, abs(a - b))
    assert worst < 1e-10


def test_h_theta_axis_form():
    y = 0.3 * C.KAPPA
    assert abs(exact.h_theta(1j * y) - exact.h_theta_axis(y)) < 1e-11


def test_axis_equation():
    t0 = exact.t0_closed_form()
    assert abs(exact.axis_critical_equation((1 - 2 * t0) * C.KAPPA)) < 1e-12
    assert abs(exact.axis_critical_equation(0.0) - (1 - 1.1687708944)) < 1e-10
    assert exact.axis_critical_equation(0.39 * C.KAPPA) * exact.axis_critical_equation(0.41 * C.KAPPA) < 0
    y = exact.axis_critical_root()
    assert abs(y / C.KAPPA - 0.3977567783173558368923490) < 1e-14
    assert abs(1 / exact.h_theta(1j * y) - math.sqrt(2) * C.KAPPA * 0.3346161009568417919464744) < 1e-14


def test_t0_closed_form():
    t0 = exact.t0_closed_form()
    assert abs(t0 - 0.3011216108413220815538254) < 1e-15
    assert abs((1 - 2 * t0) * C.KAPPA - exact.axis_critical_root()) < 1e-14


# ---------------------------------------------------------------------------
# 30-60-90

def test_theta_306090_examples():
    assert abs(exact.theta_306090(0)) < 1e-15
    assert abs(exact.theta_306090(C.KAPPA_306090) - 0.25) < 1e-12
    assert abs(exact.theta_306090(0.7065812599 + 1.6814450943j) - 1j) < 1e-8
    assert exact.theta_306090(0.5 + 0.9j).imag > 0
    with pytest.raises(PoleError):
        exact.theta_306090(1j * math.sqrt(3) * C.KAPPA_306090)


def test_theta_306090_boundary_is_real():
    for z in boundary_samples(T30, 15):
        if abs(z - T30.v[2]) > 1e-2:
            t = exact.theta_306090(z)
            assert abs(t.imag) < 1e-10 * max(1, abs(t))


def test_h_306090_optimum():
    w0 = (0.3599371272406945147550792 + 0.4062604057445303763104149j) * C.KAPPA_306090
    r = 1 / exact.h_306090(w0)
    hyp = 2 * C.KAPPA_306090
    assert abs(r - 0.2105704622445114724079460 * hyp) < 1e-12
    assert abs(r - C.MAX_RADIUS_306090_REL * hyp) < 1e-10
    # a small step in any direction lowers the radius
    for d in np.exp(2j * np.pi * np.arange(8) / 8):
        assert 1 / exact.h_306090(w0 + 1e-3 * d) < r


def test_306090_boundary_modulus():
    w = T30.centroid
    for z in boundary_samples(T30, 20):
        if abs(z - T30.v[2]) > 1e-2:
            assert abs(abs(exact.f_w_306090(z, w)) - 1) < 1e-9
    assert abs(exact.f_w_306090(w, w)) < 1e-15


def test_closure_guard():
    with pytest.raises(DomainError):
        exact.theta_306090(-1.0)
    assert cmath.isfinite(exact.theta_306090(1e-12 + 0.5j))
