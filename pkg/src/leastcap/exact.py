"""Closed-form conformal maps for the two exceptional triangles.

Isosceles right triangle, three ways:

* ``T = {x > 0, y > 0, x + y < 1}`` with the disk map built from Weierstrass
  sigma on the lattice {2m + 2ni};
* the same triangle with a Weierstrass p map ``psi`` (and ``phi``) onto the upper
  half plane, whose inverses are incomplete beta integrals;
* the centered isosceles right triangle ``{y > 0, y < x + kappa, y < -x + kappa}`` with
  ``theta(z) = sqrt(2) sn(sqrt(2) z, 1/2) dn(sqrt(2) z, 1/2)``.

30-60-90 triangle ``{x > 0, y > 0, sqrt(3) x + y < sqrt(3) kappa30}`` with a
squared sn/dn over (1 + cn)^4 map.

The capacity kernel ``h(w)`` is the limit of ``|f_w(z) / (z - w)|`` as z -> w;
the inner radius relative to w is ``1 / h(w)``.
"""

from dataclasses import dataclass, field
import math

from . import constants as C
from .errors import BoundaryError, ConvergenceError, DomainError, PoleError
from .geometry import Similarity, Triangle
from .special import (
    LATTICE,
    LatticeParams,
    arcsin_principal,
    elliptic_F,
    elliptic_K,
    gauss_2f1,
    incomplete_beta,
    jacobi_sn_cn_dn,
    weierstrass_p,
    weierstrass_sigma,
)

ISO_RIGHT_UNIT = Triangle((0j, 1 + 0j, 1j))
ISO_RIGHT_CENTERED = Triangle((-C.KAPPA + 0j, C.KAPPA + 0j, 1j * C.KAPPA))
TRIANGLE_306090 = Triangle((0j, C.KAPPA_306090 + 0j, 1j * C.SQRT3 * C.KAPPA_306090))

#: Unit isosceles right triangle -> centered triangle (0, 1, i) -> (i kappa, -kappa, kappa).
UNIT_TO_CENTERED = Similarity(-C.KAPPA * (1 + 1j), 1j * C.KAPPA)

_OUTSIDE_TOL = 1e-9
_BOUNDARY_TOL = 1e-9

# phi^(-1)(1) = 1 and psi^(-1)(1) = i fix these prefactors.
PHI_INV_SCALE = math.sqrt(2.0 * math.pi) / C.GAMMA_1_4**2
PSI_INV_SCALE = (1j - 1.0) * math.sqrt(math.pi) / C.GAMMA_1_4**2


def _check_closure(tri, z, name):
    if tri.boundary_distance(z) < -_OUTSIDE_TOL * tri.diameter:
        raise DomainError(f"{name}: {complex(z)} lies outside the triangle")


def _check_interior(tri, w, name):
    d = tri.boundary_distance(w)
    if d < 0:
        raise DomainError(f"{name}: {complex(w)} lies outside the triangle")
    if d <= _BOUNDARY_TOL * tri.diameter:
        raise BoundaryError(f"{name}: {complex(w)} is on the boundary")


# ---------------------------------------------------------------------------
# Weierstrass sigma map

@dataclass(frozen=True)
class SigmaMapContext:
    """Data defining the disk map f_w of the unit isosceles right triangle."""

    w: complex
    w_prime: complex = field(init=False)
    C_w: complex = field(init=False)
    lat: LatticeParams = LATTICE

    def __post_init__(self):
        w = complex(self.w)
        _check_interior(ISO_RIGHT_UNIT, w, "sigma map")
        object.__setattr__(self, "w", w)
        wp = reflect_hypotenuse(w)
        object.__setattr__(self, "w_prime", wp)
        object.__setattr__(self, "C_w", _sigma_constant(w, wp, self.lat))

    @property
    def zeros(self):
        w, wp = self.w, self.w_prime
        return (w, -w, wp.conjugate(), -wp.conjugate())

    @property
    def poles(self):
        w, wp = self.w, self.w_prime
        return (wp, -wp, w.conjugate(), -w.conjugate())


def reflect_hypotenuse(w):
    """Mirror image of w across the line x + y = 1."""
    w = complex(w)
    return 1 + 1j - 1j * w.conjugate()


def _ratio(z, zeros, poles, lat):
    num = 1.0 + 0j
    den = 1.0 + 0j
    for a in zeros:
        num *= weierstrass_sigma(z - a, lat)
    for b in poles:
        den *= weierstrass_sigma(z - b, lat)
    return num, den


def _sigma_constant(w, wp, lat):
    zeros = (w, -w, wp.conjugate(), -wp.conjugate())
    poles = (wp, -wp, w.conjugate(), -w.conjugate())
    num, den = _ratio(1.0, zeros, poles, lat)
    return den / num


def f_w_sigma(z, ctx):
    """Disk map of the unit isosceles right triangle sending ``ctx.w`` to 0."""
    z = complex(z)
    _check_closure(ISO_RIGHT_UNIT, z, "f_w_sigma")
    num, den = _ratio(z, ctx.zeros, ctx.poles, ctx.lat)
    if abs(den) < 1e-13 * max(1.0, abs(num)):
        raise PoleError(f"f_w_sigma has a pole near {z}")
    return ctx.C_w * num / den


def h_sigma(w, lat=LATTICE):
    """Capacity kernel of the unit isosceles right triangle (sigma route)."""
    w = complex(w)
    _check_interior(ISO_RIGHT_UNIT, w, "h_sigma")
    wp = reflect_hypotenuse(w)
    wc, wpc = w.conjugate(), wp.conjugate()
    s = lambda x: weierstrass_sigma(x, lat)  # noqa: E731
    const = (s(1 - wp) * s(1 + wp) * s(1 - wc) * s(1 + wc)) / (
        s(1 - w) * s(1 + w) * s(1 - wpc) * s(1 + wpc)
    )
    local = (s(2 * w) * s(w - wpc) * s(w + wpc)) / (
        s(w - wp) * s(w + wp) * s(w - wc) * s(w + wc)
    )
    return abs(const * local)


# ---------------------------------------------------------------------------
# Weierstrass p maps onto the upper half plane

def map_psi(z):
    """Weierstrass p map of the unit triangle onto C+ with (0, 1, i) -> (inf, 0, 1)."""
    z = complex(z)
    _check_closure(ISO_RIGHT_UNIT, z, "map_psi")
    if abs(z) < 1e-12:
        raise PoleError("map_psi has a pole at the vertex 0")
    p = weierstrass_p(z)
    return -((p - C.P_OF_1) ** 2) / (4.0 * C.P_OF_1 * p)


def map_phi(z):
    """Map of the unit triangle onto C+ with (0, 1, i) -> (0, 1, inf)."""
    z = complex(z)
    _check_closure(ISO_RIGHT_UNIT, z, "map_phi")
    if abs(z - 1j) < 1e-12:
        raise PoleError("map_phi has a pole at the vertex i")
    return 1.0 / map_psi(1j * z.conjugate()).conjugate()


def map_phi_inv(zeta):
    """Inverse of :func:`map_phi`: a scaled incomplete beta B(zeta; 1/2, 1/4)."""
    return PHI_INV_SCALE * incomplete_beta(zeta, 0.5, 0.25)


def map_psi_inv(zeta):
    """Inverse of :func:`map_psi`: a scaled incomplete beta B(zeta; 1/4, 1/4) plus 1."""
    return PSI_INV_SCALE * incomplete_beta(zeta, 0.25, 0.25) + 1.0


# ---------------------------------------------------------------------------
# sn-dn map of the centered isosceles right triangle

def _theta_iso_parts(z):
    u = C.SQRT2 * complex(z)
    return jacobi_sn_cn_dn(u, 0.5)


def theta_iso(z):
    """sn-dn map of the centered triangle onto C+ with (-k, k, ik) -> (-1, 1, inf)."""
    z = complex(z)
    _check_closure(ISO_RIGHT_CENTERED, z, "theta_iso")
    sn, _, dn = _theta_iso_parts(z)
    return C.SQRT2 * sn * dn


def theta_iso_prime(z):
    """Derivative of :func:`theta_iso`: 2 cn (dn^2 - sn^2 / 2)."""
    sn, cn, dn = _theta_iso_parts(z)
    return 2.0 * cn * (dn * dn - 0.5 * sn * sn)


def theta_iso_inv(zeta):
    """Inverse of theta_iso, (zeta/2) 2F1(1/2, 3/4; 3/2; zeta^2), on closed C+."""
    zeta = complex(zeta)
    if zeta.imag < 0:
        raise DomainError(f"theta_iso_inv expects Im(zeta) >= 0, got {zeta}")
    if zeta.real < 0:
        # mirror symmetry across the imaginary axis keeps sqrt(zeta^2) = zeta
        return -theta_iso_inv(-zeta.conjugate()).conjugate()
    zeta = complex(zeta.real, zeta.imag + 0.0)
    return 0.5 * zeta * gauss_2f1(0.5, 0.75, 1.5, zeta * zeta)


def f_w_theta(z, w):
    """Disk map of the centered isosceles right triangle sending w to 0."""
    tw = theta_iso(w)
    tz = theta_iso(z)
    return (tz - tw) / (tz - tw.conjugate())


def h_theta(w):
    """Capacity kernel of the centered isosceles right triangle."""
    w = complex(w)
    _check_interior(ISO_RIGHT_CENTERED, w, "h_theta")
    t = theta_iso(w)
    return abs(theta_iso_prime(w) / (t - t.conjugate()))


def h_theta_axis(y):
    """Closed form of :func:`h_theta` on the symmetry axis w = iy."""
    sn, cn, dn = jacobi_sn_cn_dn(1j * C.SQRT2 * y, 0.5)
    return abs(1j * cn**3 / (C.SQRT2 * sn * dn))


_DN_TARGET = math.sqrt((1.0 + C.SQRT3) / 2.0)


def axis_critical_equation(y):
    """dn(i sqrt(2) y, 1/2) - sqrt((1 + sqrt 3)/2); its root locates the optimum."""
    return jacobi_sn_cn_dn(1j * C.SQRT2 * y, 0.5)[2].real - _DN_TARGET


def _axis_critical_derivative(y):
    sn, cn, _ = jacobi_sn_cn_dn(1j * C.SQRT2 * y, 0.5)
    # d/dy dn(i sqrt2 y) = -m sn cn * i sqrt2
    return (-0.5 * sn * cn * 1j * C.SQRT2).real


def axis_critical_root(lo=0.3 * C.KAPPA, hi=0.5 * C.KAPPA):
    """Root of :func:`axis_critical_equation` by bisection then Newton polish."""
    flo, fhi = axis_critical_equation(lo), axis_critical_equation(hi)
    if flo * fhi > 0:
        raise ConvergenceError("axis critical equation has no sign change on the bracket")
    while hi - lo > 1e-15 * C.KAPPA:
        mid = 0.5 * (lo + hi)
        fm = axis_critical_equation(mid)
        if fm == 0:
            lo = hi = mid
            break
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    y = 0.5 * (lo + hi)
    for _ in range(3):
        d = _axis_critical_derivative(y)
        if d == 0:
            break
        step = axis_critical_equation(y) / d
        y -= step
        if abs(step) < 1e-17:
            break
    return y


def t0_closed_form():
    """Diagonal coordinate of the least capacity point, Re F(arcsin x, 2) / (2 kappa).

    Here x = sqrt((1 + sqrt 3)/2) > 1, so the amplitude is complex.
    """
    phi = arcsin_principal(_DN_TARGET)
    return elliptic_F(phi, 2.0).real / (2.0 * C.KAPPA)


# ---------------------------------------------------------------------------
# 30-60-90 triangle

# sn, cn, dn share a pole at u = iK' (the midpoint of the vertical leg) where
# theta stays finite; near it the map is evaluated at v = u - iK' through
# sn(v + iK') = 1/(k sn v), cn(v + iK') = -i dn v/(k sn v), dn(v + iK') = -i cn v/sn v.
_KP_306090 = elliptic_K(1.0 - C.M_306090)
_K_306090 = math.sqrt(C.M_306090)


def _shifted(z):
    """v = u - iK' when u is near the shared pole, else None."""
    v = C.SCALE_306090 * complex(z) - 1j * _KP_306090
    return v if abs(v) < 0.5 * _KP_306090 else None


def _theta_306090_parts(z):
    return jacobi_sn_cn_dn(C.SCALE_306090 * complex(z), C.M_306090)


def theta_306090(z):
    """Map of the 30-60-90 triangle onto C+ with (0, k, i sqrt3 k) -> (0, 1/4, inf)."""
    z = complex(z)
    _check_closure(TRIANGLE_306090, z, "theta_306090")
    v = _shifted(z)
    if v is not None:
        s, c, d = jacobi_sn_cn_dn(v, C.M_306090)
        return -3.0 * C.SQRT3 * C.M_306090 * c * c / (_K_306090 * s - 1j * d) ** 4
    sn, cn, dn = _theta_306090_parts(z)
    den = (1.0 + cn) ** 4
    if abs(den) < 1e-14:
        raise PoleError(f"theta_306090 has a pole near {z}")
    return 3.0 * C.SQRT3 * sn * sn * dn * dn / den


def theta_306090_prime(z):
    m = C.M_306090
    v = _shifted(z)
    if v is not None:
        s, c, d = jacobi_sn_cn_dn(v, m)
        g = _K_306090 * s - 1j * d
        dg = _K_306090 * c * d + 1j * m * s * c
        dv = -3.0 * C.SQRT3 * m * (-2.0 * c * s * d * g - 4.0 * c * c * dg) / g**5
        return C.SCALE_306090 * dv
    sn, cn, dn = _theta_306090_parts(z)
    one_c = 1.0 + cn
    du = 3.0 * C.SQRT3 * (
        (2.0 * sn * cn * dn**3 - 2.0 * m * sn**3 * cn * dn) / one_c**4
        + 4.0 * sn**3 * dn**3 / one_c**5
    )
    return C.SCALE_306090 * du


def f_w_306090(z, w):
    tw = theta_306090(w)
    tz = theta_306090(z)
    return (tz - tw) / (tz - tw.conjugate())


def h_306090(w):
    """Capacity kernel of the 30-60-90 triangle."""
    w = complex(w)
    _check_interior(TRIANGLE_306090, w, "h_306090")
    t = theta_306090(w)
    return abs(theta_306090_prime(w) / (t - t.conjugate()))
