import json
import math

import numpy as np
import pytest

from leastcap import constants as C
from leastcap import exact
from leastcap.capacity import (
    Backend,
    figure_geometry,
    figure_rows,
    figure_svg,
    least_capacity_point,
    preset_triangle,
    radius_at,
    select_backend,
)
from leastcap.errors import DomainError
from leastcap.geometry import Triangle
from leastcap.verify import figure_checks, points_in_polygon

SCHEMA = {
    "triangle", "backend", "query", "point", "barycentric", "inner_radius",
    "distance_to_shortest_side", "evals", "tolerance_achieved",
}


def test_backend_selection():
    assert select_backend(preset_triangle("iso-right")) is Backend.SIGMA
    assert select_backend(preset_triangle("30-60-90")) is Backend.EXACT_306090
    assert select_backend(preset_triangle("6-9-13")) is Backend.SC
    assert select_backend(Triangle((0, 2, 2j)), "jacobi") is Backend.JACOBI
    with pytest.raises(DomainError):
        select_backend(preset_triangle("6-9-13"), "sigma")


def test_radius_at_examples():
    iso = preset_triangle("iso-right")
    t0 = C.T0
    assert abs(radius_at(iso, (1 + 1j) * t0).inner_radius - 0.3346161010) < 1e-10
    tri = preset_triangle("6-9-13")
    assert abs(radius_at(tri, tri.centroid).inner_radius - 1.802305) < 1e-6
    big = Triangle((0, 2, 2j))
    assert abs(radius_at(big, 2 * (1 + 1j) * t0).inner_radius - 0.6692322019) < 1e-10
    with pytest.raises(DomainError):
        radius_at(iso, 2 + 2j)


def test_least_capacity_point_presets():
    iso = least_capacity_point(preset_triangle("iso-right"))
    assert abs(iso.point - (1 + 1j) * C.T0) < 1e-15
    assert iso.converged and iso.tolerance_achieved < 1e-9
    k = C.KAPPA_306090
    r30 = least_capacity_point(preset_triangle("30-60-90"))
    assert abs(r30.point - (0.3599371272 + 0.4062604057j) * k) < 1e-8 * k
    assert abs(r30.inner_radius - 0.2105704622 * 2 * k) < 1e-9
    r = least_capacity_point(preset_triangle("6-9-13"))
    assert abs(r.point - (0.929617 + 1.842564j)) < 1e-5
    assert abs(r.inner_radius - 1.979479) < 1e-5
    assert abs(r.distance_to_shortest_side - 1.842564) < 1e-5


def test_report_schema_round_trips():
    rep = least_capacity_point(preset_triangle("6-9-13"))
    d = json.loads(json.dumps(rep.to_dict()))
    assert set(d) == SCHEMA
    assert d["backend"] == "sc" and d["query"] == "least_capacity_point"
    assert len(d["triangle"]) == 3 and len(d["barycentric"]) == 3
    assert abs(sum(d["barycentric"]) - 1) < 1e-12


@pytest.mark.parametrize("backend", ["jacobi", "sc"])
def test_backends_agree_iso_right(backend):
    ref = least_capacity_point(preset_triangle("iso-right"))
    other = least_capacity_point(preset_triangle("iso-right"), backend=backend)
    assert abs(other.point - ref.point) < 1e-6 * math.sqrt(2)
    assert abs(other.inner_radius - ref.inner_radius) < 1e-8


def test_backends_agree_306090():
    tri = preset_triangle("30-60-90")
    a = least_capacity_point(tri)
    b = least_capacity_point(tri, backend="sc")
    assert abs(a.point - b.point) < 1e-6 * tri.diameter
    assert abs(a.inner_radius - b.inner_radius) < 1e-8


@pytest.mark.parametrize("a,b,reflect", [(2.5 - 1j, 1 + 1j, False), (-0.3j, 4, True)])
def test_barycentric_similarity_invariance(a, b, reflect):
    tri = preset_triangle("6-9-13")
    base = least_capacity_point(tri)

    def f(z):
        return a * (z.conjugate() if reflect else z) + b

    pts = [f(v) for v in tri.v]
    moved = Triangle(tuple(pts)) if not reflect else Triangle((pts[0], pts[2], pts[1]))
    rep = least_capacity_point(moved)
    got = moved.barycentric(rep.point)
    want = base.barycentric if not reflect else (base.barycentric[0], base.barycentric[2], base.barycentric[1])
    assert np.allclose(got, want, atol=1e-9)


def test_scaled_exact_shapes_use_exact_engines():
    tri = Triangle(tuple(3 * np.exp(0.4j) * v + 1 for v in preset_triangle("iso-right").v))
    rep = least_capacity_point(tri)
    assert rep.backend is Backend.SIGMA
    assert abs(rep.inner_radius - 3 * C.MAX_RADIUS_ISO) < 1e-12


def test_distance_to_shortest_side_tie():
    # legs tie: side 1 (opposite vertex 1) is chosen
    rep = radius_at(preset_triangle("iso-right"), 0.2 + 0.3j)
    assert rep.distance_to_shortest_side == pytest.approx(0.2)


# ---------------------------------------------------------------------------
# figures

@pytest.fixture(scope="module", params=["iso-right", "30-60-90", "6-9-13"])
def fig(request):
    return figure_geometry(preset_triangle(request.param), samples=481)


def test_figure_invariants(fig):
    gap, margin, nested, ortho = figure_checks(fig)
    assert gap < 1e-6
    assert margin > -1e-8
    assert nested
    assert ortho < 0.5


def test_figure_rays_start_at_center(fig):
    for ray in fig.ray_images:
        assert abs(ray[0] - fig.center) < 1e-9
        assert abs(ray[1] - fig.center) > 0


def test_figure_small_circle_diameter(fig):
    # g(eta) ~ center + g'(0) eta, |g'(0)| = inner radius
    r = least_capacity_point(fig.triangle).inner_radius
    c = fig.circle_images[0]
    assert np.all(points_in_polygon([fig.center], c))
    diam = max(abs(p - q) for p in c[::8] for q in c[::8])
    assert abs(diam - 0.2 * r) < 0.2 * 0.2 * r


def test_figure_counts():
    f = figure_geometry(preset_triangle("iso-right"), center=(1 + 1j) * 0.301, n_circles=4, n_rays=6, samples=25)
    assert len(f.circle_images) == 4 and len(f.ray_images) == 6
    assert all(len(r) == 25 for r in f.ray_images)
    rows = list(figure_rows(f))
    assert rows[0][0] == "circle" and rows[-1][0] == "ray"
    svg = figure_svg(f)
    assert svg.startswith("<svg") and svg.count("<polyline") == 4 + 6 + 1


def test_figure_rejects_exterior_center():
    with pytest.raises(DomainError):
        figure_geometry(preset_triangle("iso-right"), center=1 + 1j)


def test_figure_center_iso_right_default():
    f = figure_geometry(exact.ISO_RIGHT_UNIT, n_circles=2, n_rays=4, samples=17)
    assert abs(f.center - (1 + 1j) * C.T0) < 1e-15
