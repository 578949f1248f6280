"""Inner radius and least capacity point for arbitrary triangles.

Triangles similar to the isosceles right triangle or the 30-60-90 triangle
are routed to the exact elliptic-function engines; everything else goes
through a Schwarz-Christoffel map.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
import math

import numpy as np

from . import constants as C
from . import exact
from .errors import DomainError
from .geometry import Triangle, match_shape
from .optimize import OptimizerConfig, maximize_inner_radius, maximize_on_segment
from .scmap import disk_automorphism, disk_automorphism_inv, inner_radius_sc, sc_build, sc_eval


class Backend(str, Enum):
    SIGMA = "sigma"
    JACOBI = "jacobi"
    EXACT_306090 = "306090"
    SC = "sc"


class Query(str, Enum):
    RADIUS_AT = "radius_at"
    LEAST_CAPACITY_POINT = "least_capacity_point"


@dataclass(frozen=True)
class CapacityReport:
    triangle: Triangle
    backend: Backend
    query: Query
    point: complex
    inner_radius: float
    barycentric: tuple
    distance_to_shortest_side: float
    evals: int
    tolerance_achieved: float
    converged: bool = True

    def to_dict(self):
        """JSON-ready mapping with the stable report schema."""
        return {
            "triangle": [[p.real, p.imag] for p in self.triangle.v],
            "backend": self.backend.value,
            "query": self.query.value,
            "point": [float(self.point.real), float(self.point.imag)],
            "barycentric": [float(b) for b in self.barycentric],
            "inner_radius": float(self.inner_radius),
            "distance_to_shortest_side": float(self.distance_to_shortest_side),
            "evals": int(self.evals),
            "tolerance_achieved": float(self.tolerance_achieved),
        }


@dataclass(frozen=True)
class FigureGeometry:
    """Images of concentric circles and radial rays under the centered disk map."""

    triangle: Triangle
    center: complex
    backend: Backend
    radii: tuple
    circle_images: list = field(repr=False)
    ray_images: list = field(repr=False)
    samples_per_curve: int = 512


# ---------------------------------------------------------------------------
# shape detection

def _iso_similarity(tri):
    return match_shape(tri, exact.ISO_RIGHT_UNIT)


def _306090_similarity(tri):
    return match_shape(tri, exact.TRIANGLE_306090)


def select_backend(tri, backend=None):
    """Resolve ``backend`` (None/"auto" picks the exact engine when the shape allows)."""
    if backend in (None, "auto"):
        if _iso_similarity(tri) is not None:
            return Backend.SIGMA
        if _306090_similarity(tri) is not None:
            return Backend.EXACT_306090
        return Backend.SC
    backend = Backend(backend)
    if backend in (Backend.SIGMA, Backend.JACOBI) and _iso_similarity(tri) is None:
        raise DomainError(f"backend {backend.value!r} needs an isosceles right triangle")
    if backend is Backend.EXACT_306090 and _306090_similarity(tri) is None:
        raise DomainError("backend '306090' needs a 30-60-90 triangle")
    return backend


@lru_cache(maxsize=64)
def cached_sc_map(tri):
    return sc_build(tri)


def radius_function(tri, backend):
    """Callable w -> inner radius of ``tri`` at w for the chosen engine."""
    if backend is Backend.SIGMA:
        sim = _iso_similarity(tri)
        return lambda w: sim.scale**-1 / exact.h_sigma(sim(w))
    if backend is Backend.JACOBI:
        sim = _iso_similarity(tri)
        scale = sim.scale * exact.UNIT_TO_CENTERED.scale
        return lambda w: 1.0 / (scale * exact.h_theta(exact.UNIT_TO_CENTERED(sim(w))))
    if backend is Backend.EXACT_306090:
        sim = _306090_similarity(tri)
        return lambda w: 1.0 / (sim.scale * exact.h_306090(sim(w)))
    scmap = cached_sc_map(tri)
    return lambda w: inner_radius_sc(scmap, w).radius


def _report(tri, backend, query, point, radius, evals, tol, converged=True):
    k = tri.shortest_side()
    return CapacityReport(
        triangle=tri,
        backend=backend,
        query=query,
        point=complex(point),
        inner_radius=float(radius),
        barycentric=tuple(float(b) for b in tri.barycentric(point)),
        distance_to_shortest_side=tri.side_distance(point, k),
        evals=evals,
        tolerance_achieved=float(tol),
        converged=converged,
    )


def radius_at(tri, w, backend=None):
    """Inner radius of ``tri`` relative to the interior point ``w``."""
    w = complex(w)
    if tri.boundary_distance(w) <= 0:
        raise DomainError(f"point {w} is not inside the triangle")
    backend = select_backend(tri, backend)
    if backend is Backend.SC:
        ev = inner_radius_sc(cached_sc_map(tri), w)
        return _report(tri, backend, Query.RADIUS_AT, w, ev.radius, ev.newton_iters, ev.residual)
    r = radius_function(tri, backend)(w)
    return _report(tri, backend, Query.RADIUS_AT, w, r, 1, 0.0)


def least_capacity_point(tri, backend=None, cfg=None):
    """Interior point maximizing the inner radius, with its radius."""
    backend = select_backend(tri, backend)
    cfg = cfg or OptimizerConfig()
    diam = tri.diameter
    q = Query.LEAST_CAPACITY_POINT
    if backend is Backend.SIGMA:
        sim = _iso_similarity(tri)
        point = sim.inverse((1 + 1j) * exact.t0_closed_form())
        opt = maximize_inner_radius(radius_function(tri, backend), tri, cfg)
        gap = abs(opt.point - point)
        radius = radius_function(tri, backend)(point)
        ok = opt.converged and gap <= 1e-8 * diam
        return _report(tri, backend, q, point, radius, opt.evals, gap, ok)
    if backend is Backend.JACOBI:
        sim = _iso_similarity(tri)
        centered = exact.UNIT_TO_CENTERED
        y_root = exact.axis_critical_root()
        y_search, _ = maximize_on_segment(
            lambda y: 1.0 / exact.h_theta(1j * y), 0.2 * C.KAPPA, 0.6 * C.KAPPA
        )
        point = sim.inverse(centered.inverse(1j * y_root))
        radius = radius_function(tri, backend)(point)
        gap = abs(y_search - y_root) / (sim.scale * centered.scale)
        return _report(tri, backend, q, point, radius, 1, gap, gap <= 1e-8 * diam)
    opt = maximize_inner_radius(radius_function(tri, backend), tri, cfg)
    return _report(
        tri, backend, q, opt.point, opt.value, opt.evals, opt.tolerance_achieved, opt.converged
    )


# ---------------------------------------------------------------------------
# figure geometry

def _disk_map(tri, center, backend):
    """Map eta -> triangle with 0 -> center, plus preimages of the vertices."""
    if backend in (Backend.SIGMA, Backend.JACOBI):
        sim = _iso_similarity(tri)
        centered = exact.UNIT_TO_CENTERED
        tw = exact.theta_iso(centered(sim(center)))
        apex = tri.v[[abs(centered(sim(v)) - 1j * C.KAPPA) for v in tri.v].index(
            min(abs(centered(sim(v)) - 1j * C.KAPPA) for v in tri.v)
        )]

        def g(eta):
            eta = complex(eta)
            if abs(1.0 - eta) < 1e-14:
                return apex
            zeta = (tw - eta * tw.conjugate()) / (1.0 - eta)
            zeta = complex(zeta.real, max(zeta.imag, 0.0))
            return sim.inverse(centered.inverse(exact.theta_iso_inv(zeta)))

        pre = []
        for v in tri.v:
            t = exact.theta_iso(centered(sim(v))) if abs(centered(sim(v)) - 1j * C.KAPPA) > 1e-9 else None
            pre.append(1.0 + 0j if t is None else (t - tw) / (t - tw.conjugate()))
        return g, pre
    scmap = cached_sc_map(tri)
    zc, _, _ = scmap.invert(center)
    m = disk_automorphism(zc)
    m_inv = disk_automorphism_inv(zc)

    def g(eta):
        z = complex(m(eta))
        if abs(eta) >= 1.0 - 1e-15:
            # On the unit circle f is (z - z_k)**alpha_k near a prevertex, so
            # rounding off the circle would pull samples visibly inward.
            z /= abs(z)
            k = min(range(3), key=lambda j: abs(z - scmap.prevertices[j]))
            if abs(z - scmap.prevertices[k]) < 1e-8:
                return tri.v[k]
        elif abs(z) > 1.0:
            z /= abs(z)
        return sc_eval(scmap, z)

    pre = [complex(m_inv(z)) for z in scmap.prevertices]
    return g, pre


def figure_geometry(tri, center=None, n_circles=10, n_rays=24, samples=512, backend=None):
    """Polylines of circle and ray images for plotting the centered disk map.

    Circles |eta| = k/n_circles are sampled at ``samples`` equally spaced
    angles (closed: the last point repeats the first); the unit circle also
    gets the vertex preimages so it traces the corners exactly. Rays run
    from 0 to the unit circle at angles 2 pi j / n_rays with ``samples``
    equally spaced radii.
    """
    if samples < 3:
        raise ValueError("samples must be at least 3")
    backend = select_backend(tri, backend)
    if backend is Backend.EXACT_306090:
        backend = Backend.SC  # no closed-form inverse for the 30-60-90 map
    if center is None:
        center = least_capacity_point(tri).point
    center = complex(center)
    tri.require_interior(center, 0.0, "center")
    g, vertex_pre = _disk_map(tri, center, backend)
    angles = 2.0 * np.pi * np.arange(samples) / (samples - 1)
    radii = tuple((k + 1) / n_circles for k in range(n_circles))
    circles = []
    for r in radii:
        ang = angles
        if r == 1.0:
            extra = np.mod(np.angle(vertex_pre), 2.0 * np.pi)
            ang = np.sort(np.concatenate([angles[:-1], extra]))
            ang = np.append(ang, 2.0 * np.pi)
        pts = np.array([g(r * np.exp(1j * a)) for a in ang])
        pts[-1] = pts[0]
        circles.append(pts)
    rays = []
    rs = np.linspace(0.0, 1.0, samples)
    for j in range(n_rays):
        d = np.exp(2j * np.pi * j / n_rays)
        pts = np.array([g(r * d) for r in rs])
        pts[0] = center
        rays.append(pts)
    return FigureGeometry(tri, center, backend, radii, circles, rays, samples)


def figure_rows(fig):
    """Rows ``(curve_type, curve_id, sample_index, x, y)`` for CSV export."""
    for kind, curves in (("circle", fig.circle_images), ("ray", fig.ray_images)):
        for cid, pts in enumerate(curves):
            for i, p in enumerate(pts):
                yield kind, cid, i, float(p.real), float(p.imag)


def figure_svg(fig, size=600, margin=20):
    """Minimal SVG drawing of the triangle outline, circle and ray images."""
    xs = [p.real for p in fig.triangle.v]
    ys = [p.imag for p in fig.triangle.v]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0)
    s = (size - 2 * margin) / span

    def xy(p):
        return f"{margin + (p.real - x0) * s:.3f},{size - margin - (p.imag - y0) * s:.3f}"

    def poly(pts, color, width):
        return (
            f'<polyline fill="none" stroke="{color}" stroke-width="{width}" '
            f'points="{" ".join(xy(p) for p in pts)}"/>'
        )

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    parts += [poly(c, "#1f77b4", 1) for c in fig.circle_images]
    parts += [poly(r, "#999999", 0.6) for r in fig.ray_images]
    v = list(fig.triangle.v) + [fig.triangle.v[0]]
    parts.append(poly(v, "black", 1.5))
    parts.append(f'<circle cx="{xy(fig.center).split(",")[0]}" cy="{xy(fig.center).split(",")[1]}" r="3" fill="red"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def preset_triangle(name):
    """Named triangles: ``iso-right``, ``30-60-90`` and ``6-9-13``."""
    if name == "iso-right":
        return exact.ISO_RIGHT_UNIT
    if name == "30-60-90":
        return exact.TRIANGLE_306090
    if name == "6-9-13":
        return Triangle((0j, 6 + 0j, complex(-13.0 / 3.0, 4.0 * math.sqrt(35.0) / 3.0)))
    raise DomainError(f"unknown preset {name!r}")
