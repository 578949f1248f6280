"""Complex special functions for the square lattice and the Jacobi maps.

Weierstrass sigma and p are evaluated through theta_1 series with nome
exp(-pi); Jacobi sn/cn/dn at complex argument through the real-argument
AGM values and the addition theorem; incomplete integrals by the compound
Gauss-Jacobi quadrature in :mod:`leastcap.quadrature`.
"""

from dataclasses import dataclass
import cmath
import math

from . import constants
from .errors import DomainError, PoleError
from .kernels import jacobi_real, theta1_derivs
from .quadrature import integrate_power_product

_THETA_TERMS = 14


@dataclass(frozen=True)
class LatticeParams:
    """Square lattice {2m + 2ni} with its invariants and theta data."""

    half_period_1: complex
    half_period_2: complex
    g2: float
    g3: float
    nome_q: float
    eta1: float
    theta1_prime0: float

    @property
    def eta2(self):
        return -1j * self.eta1


def _make_lattice():
    q = constants.NOME
    _, t1, _, t3 = theta1_derivs(0.0, q, _THETA_TERMS)
    t1 = t1.real
    eta1 = -(math.pi**2) * t3.real / (12.0 * t1)
    # e1 = p(1) from theta quotients gives g2 = 4 e1**2 for g3 = 0
    return LatticeParams(
        half_period_1=1 + 0j,
        half_period_2=1j,
        g2=constants.G2,
        g3=0.0,
        nome_q=q,
        eta1=eta1,
        theta1_prime0=t1,
    )


LATTICE = _make_lattice()


def weierstrass_sigma(z, lat=LATTICE):
    """Weierstrass sigma for the lattice {2m + 2ni}."""
    z = complex(z)
    v = 0.5 * math.pi * z
    th = theta1_derivs(v, lat.nome_q, _THETA_TERMS)[0]
    return cmath.exp(0.5 * lat.eta1 * z * z) * th / (0.5 * math.pi * lat.theta1_prime0)


def _reduce(z):
    """Representative of z modulo the lattice in the cell |Re|, |Im| <= 1."""
    return complex(z.real - 2.0 * round(z.real / 2.0), z.imag - 2.0 * round(z.imag / 2.0))


def _theta_log_derivs(z, lat):
    z = _reduce(complex(z))
    if abs(z) < 1e-12:
        raise PoleError(f"Weierstrass p has a pole at lattice point near {z}")
    v = 0.5 * math.pi * z
    t0, t1, t2, t3 = theta1_derivs(v, lat.nome_q, _THETA_TERMS)
    return t1 / t0, t2 / t0, t3 / t0


def weierstrass_p(z, lat=LATTICE):
    """Weierstrass p; raises :class:`PoleError` within 1e-12 of the lattice."""
    a, b, _ = _theta_log_derivs(z, lat)
    return -lat.eta1 + (0.5 * math.pi) ** 2 * (a * a - b)


def weierstrass_p_prime(z, lat=LATTICE):
    """Derivative of Weierstrass p."""
    a, b, c = _theta_log_derivs(z, lat)
    return -((0.5 * math.pi) ** 3) * (c - 3.0 * a * b + 2.0 * a**3)


def elliptic_K(m):
    """Complete elliptic integral of the first kind, parameter convention."""
    if m >= 1.0:
        raise DomainError(f"K(m) requires m < 1, got {m}")
    a, b = 1.0, math.sqrt(1.0 - m)
    for _ in range(60):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (a + b)


def elliptic_K_prime(m):
    return elliptic_K(1.0 - m)


def jacobi_sn_cn_dn(u, m):
    """Jacobi sn, cn, dn at complex ``u`` for real parameter ``0 < m < 1``.

    Uses the addition theorem on u = x + iy, with the real part at parameter
    m and the imaginary part at the complementary parameter 1 - m.
    """
    if not 0.0 <= m < 1.0:
        raise DomainError(f"parameter must lie in [0, 1), got {m}")
    u = complex(u)
    K = elliptic_K(m)
    Kp = elliptic_K(1.0 - m)
    x = u.real - 4.0 * K * round(u.real / (4.0 * K))
    y = u.imag - 4.0 * Kp * round(u.imag / (4.0 * Kp))
    s, c, d = jacobi_real(x, m)
    if y == 0.0:
        return complex(s), complex(c), complex(d)
    s1, c1, d1 = jacobi_real(y, 1.0 - m)
    delta = c1 * c1 + m * s * s * s1 * s1
    if abs(delta) < 1e-14:
        raise PoleError(f"Jacobi functions have a pole near u = {u}")
    sn = complex(s * d1, c * d * s1 * c1) / delta
    cn = complex(c * c1, -s * d * s1 * d1) / delta
    dn = complex(d * c1 * d1, -m * s * c * s1) / delta
    return sn, cn, dn


def arcsin_principal(x):
    """Principal arcsine; real arguments above 1 map to pi/2 - i*arccosh(x)."""
    if isinstance(x, (int, float)) or (isinstance(x, complex) and x.imag == 0):
        xr = complex(x).real
        if xr > 1.0:
            return complex(0.5 * math.pi, -math.acosh(xr))
        if xr < -1.0:
            return complex(-0.5 * math.pi, math.acosh(-xr))
        return complex(math.asin(xr))
    return cmath.asin(x)


def _elliptic_roots(m):
    roots, exps = [1.0, -1.0], [-0.5, -0.5]
    if m != 0.0:
        r = cmath.sqrt(1.0 / complex(m))
        roots += [r, -r]
        exps += [-0.5, -0.5]
    return roots, exps


def elliptic_F(phi, m, side=1):
    """Incomplete elliptic integral of the first kind F(phi | m).

    Integrates 1/sqrt((1 - t^2)(1 - m t^2)) along the straight path from 0
    to sin(phi). Where the path runs along a branch cut (real sin(phi)
    beyond a branch point) the integrand takes its limit from the upper
    half plane (``side=1``) or the lower one (``side=-1``).
    """
    m = float(m)
    if m == 1.0:
        raise DomainError("F(phi | 1) is not supported (logarithmic singularity)")
    x = cmath.sin(complex(phi))
    if abs(x.imag) <= 1e-15 * abs(x):
        x = complex(x.real, 0.0)
    roots, exps = _elliptic_roots(m)
    return integrate_power_product(0.0, x, roots, exps, side=side)


def elliptic_F_path(phi, m, via):
    """F(phi | m) integrated along the polyline 0 -> ``via`` -> sin(phi).

    Used to confirm path independence of :func:`elliptic_F`.
    """
    x = cmath.sin(complex(phi))
    roots, exps = _elliptic_roots(float(m))
    return integrate_power_product(0.0, via, roots, exps) + integrate_power_product(
        via, x, roots, exps
    )


def incomplete_beta(zeta, alpha, beta):
    """Incomplete Euler beta B(zeta; alpha, beta) = int_0^zeta s^(a-1) (1-s)^(b-1) ds.

    Principal branches; for real zeta > 1 or zeta < 0 the path follows the
    cut and the integrand is continued from the upper half plane.
    """
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    zeta = complex(zeta)
    if zeta.imag == 0:
        zeta = complex(zeta.real, 0.0)
    if zeta.imag == 0 and zeta.real > 1 and beta <= 0:
        raise DomainError("path passes through the non-integrable branch point s = 1")
    return integrate_power_product(0.0, zeta, [0.0, 1.0], [alpha - 1.0, beta - 1.0], side=1)


def _hyp2f1_series(a, b, c, z):
    term = 1 + 0j
    total = 1 + 0j
    for n in range(4000):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) <= 1e-17 * abs(total):
            return total
    raise DomainError(f"2F1 series did not converge at z = {z}")


def gauss_2f1(a, b, c, z):
    """Gauss hypergeometric 2F1(a, b; c; z).

    Power series for |z| <= 0.8; outside that disk only the pattern
    c = a + 1 (or c = b + 1) is supported, through
    2F1(a, b; a+1; z) = a z^(-a) B(z; a, 1-b).
    """
    if c <= 0 and float(c).is_integer():
        raise DomainError(f"c must not be a nonpositive integer, got {c}")
    z = complex(z)
    if z.imag == 0:
        z = complex(z.real, 0.0)
    if z == 0:
        return 1 + 0j
    if abs(z) <= 0.8:
        return _hyp2f1_series(a, b, c, z)
    if abs(c - (a + 1)) > 1e-15 and abs(c - (b + 1)) <= 1e-15:
        a, b = b, a
    if abs(c - (a + 1)) <= 1e-15 and a > 0:
        return a * z ** (-a) * incomplete_beta(z, a, 1.0 - b)
    raise DomainError(f"2F1({a}, {b}; {c}; z) unsupported for |z| > 0.8")
