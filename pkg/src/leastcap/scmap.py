"""Schwarz-Christoffel maps from the unit disk onto triangles.

For three vertices the prevertices can be fixed anywhere on the circle (the
Mobius group has exactly three real degrees of freedom), so there is no
parameter problem: prevertices are the cube roots of unity and only the
multiplicative constant and translation are solved for.

    f(zeta) = A + C * int_0^zeta prod_k (1 - s/z_k)**(alpha_k - 1) ds
"""

from dataclasses import dataclass, field
import cmath
import math

import numpy as np

from .errors import BoundaryError, ConvergenceError, DomainError
from .geometry import Triangle
from .quadrature import PowerProduct

PREVERTICES = tuple(cmath.exp(2j * math.pi * k / 3) for k in range(3))
NODES = 48
_NEAR_VERTEX = 1e-6


@dataclass(frozen=True)
class InnerRadiusEval:
    """Inner radius at ``point`` and the data of the preimage solve."""

    point: complex
    preimage: complex
    radius: float
    newton_iters: int
    residual: float


@dataclass(frozen=True)
class SCMap:
    """A disk-to-triangle Schwarz-Christoffel map; build with :func:`sc_build`."""

    triangle: Triangle
    prevertices: tuple
    C: complex
    A: complex
    integrand: PowerProduct = field(repr=False, compare=False)
    third_vertex_residual: float = 0.0
    nodes: int = NODES

    @property
    def alphas(self):
        return self.triangle.angles

    def __call__(self, zeta):
        return sc_eval(self, zeta)

    def deriv(self, zeta):
        return sc_deriv(self, zeta)

    def invert(self, w, **kw):
        return sc_invert(self, w, **kw)


def sc_build(tri, nodes=NODES):
    """Construct the SC map of ``tri`` with prevertices at the cube roots of unity."""
    if not isinstance(tri, Triangle):
        tri = Triangle.from_points(*tri)
    alphas = tri.angles
    integrand = PowerProduct(PREVERTICES, [a - 1.0 for a in alphas])
    I = [integrand.integrate(0.0, z, n=nodes, adaptive=False) for z in PREVERTICES]
    v = tri.v
    C = (v[1] - v[0]) / (I[1] - I[0])
    A = v[0] - C * I[0]
    resid = abs(A + C * I[2] - v[2])
    if resid > 1e-9 * tri.diameter:
        raise ConvergenceError(f"third vertex mismatch {resid:.3g} after construction")
    return SCMap(tri, PREVERTICES, C, A, integrand, resid, nodes)


def _check_disk(zeta):
    if abs(zeta) > 1.0 + 1e-12:
        raise DomainError(f"|zeta| = {abs(zeta)} exceeds 1")


def sc_eval(scmap, zeta):
    """f(zeta) by compound Gauss-Jacobi quadrature from 0 or the nearest prevertex."""
    zeta = complex(zeta)
    _check_disk(zeta)
    k = min(range(3), key=lambda j: abs(zeta - scmap.prevertices[j]))
    zk = scmap.prevertices[k]
    if abs(zeta - zk) < abs(zeta):
        base, start = scmap.triangle.v[k], zk
    else:
        base, start = scmap.A, 0j
    if zeta == start:
        return complex(base)
    return base + scmap.C * scmap.integrand.integrate(
        start, zeta, n=scmap.nodes, adaptive=False
    )


def sc_deriv(scmap, zeta):
    """f'(zeta) = C prod_k (1 - zeta/z_k)**(alpha_k - 1), principal branches."""
    zeta = complex(zeta)
    if abs(zeta) >= 1.0:
        raise DomainError("sc_deriv needs |zeta| < 1")
    return scmap.C * scmap.integrand(zeta)


def sc_invert(scmap, w, tol=1e-12, max_newton=50, predictor_steps=8, start=None):
    """Solve f(zeta) = w: RK4 continuation from ``start`` then Newton.

    Returns ``(zeta, newton_iterations, residual)``.
    """
    w = complex(w)
    tri = scmap.triangle
    diam = tri.diameter
    tri.require_interior(w, _NEAR_VERTEX * diam)
    zeta = 0j if start is None else complex(start)
    f0 = scmap.A if start is None else sc_eval(scmap, zeta)
    dw = w - f0
    h = 1.0 / predictor_steps
    rhs = lambda z: dw / sc_deriv(scmap, z)  # noqa: E731
    for _ in range(predictor_steps):
        k1 = rhs(zeta)
        k2 = rhs(_clip(zeta + 0.5 * h * k1))
        k3 = rhs(_clip(zeta + 0.5 * h * k2))
        k4 = rhs(_clip(zeta + h * k3))
        zeta = _clip(zeta + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0)
    target = tol * diam
    resid = abs(sc_eval(scmap, zeta) - w)
    for it in range(1, max_newton + 1):
        if resid <= target:
            return zeta, it - 1, resid
        step = (sc_eval(scmap, zeta) - w) / sc_deriv(scmap, zeta)
        lam = 1.0
        while True:
            trial = zeta - lam * step
            if abs(trial) < 1.0:
                new_resid = abs(sc_eval(scmap, trial) - w)
                if new_resid < resid or lam < 1e-3:
                    break
            lam *= 0.5
            if lam < 1e-12:
                raise ConvergenceError(f"Newton step left the disk inverting {w}")
        zeta, resid = trial, new_resid
        if abs(lam * step) < 1e-16:
            break
    if resid <= target:
        return zeta, it, resid
    raise ConvergenceError(
        f"inversion of {w} stalled at residual {resid:.3g} (target {target:.3g})"
    )


def _clip(z, rmax=1.0 - 1e-12):
    r = abs(z)
    return z if r < rmax else z * (rmax / r)


def inner_radius_sc(scmap, w, **kw):
    """Inner radius of the triangle relative to ``w``.

    With g = f o m, m(eta) = (eta + zeta_w)/(1 + conj(zeta_w) eta), the
    radius is |g'(0)| = |f'(zeta_w)| (1 - |zeta_w|^2).
    """
    zeta, iters, resid = sc_invert(scmap, w, **kw)
    radius = abs(sc_deriv(scmap, zeta)) * (1.0 - abs(zeta) ** 2)
    return InnerRadiusEval(complex(w), zeta, radius, iters, resid)


def disk_automorphism(zeta_c):
    """Mobius self-map of the disk sending 0 to ``zeta_c``."""
    zc = complex(zeta_c)

    def m(eta):
        eta = np.asarray(eta, dtype=complex)
        return (eta + zc) / (1.0 + np.conj(zc) * eta)

    return m


def disk_automorphism_inv(zeta_c):
    zc = complex(zeta_c)

    def m_inv(z):
        z = np.asarray(z, dtype=complex)
        return (z - zc) / (1.0 - np.conj(zc) * z)

    return m_inv
