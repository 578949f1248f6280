import importlib

import numpy as np
import pytest

from leastcap import _kernels_py as py
from leastcap import kernels
from leastcap.quadrature import cut_arguments

cy = pytest.importorskip("leastcap._kernels")


def test_backend_reports_compiled_extension():
    assert kernels.BACKEND == "cython"
    assert kernels.theta1_derivs is cy.theta1_derivs


def test_fallback_selected_when_extension_missing(monkeypatch):
    import sys

    import leastcap

    monkeypatch.setitem(sys.modules, "leastcap._kernels", None)
    monkeypatch.delattr(leastcap, "_kernels")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
        assert mod.jacobi_real is py.jacobi_real
    finally:
        monkeypatch.undo()
        importlib.reload(kernels)


@pytest.mark.parametrize("v", [0.0, 0.3, 1.1 + 0.4j, -0.7 + 1.2j, 2.0 - 0.9j])
def test_theta_kernels_agree(v):
    q = np.exp(-np.pi)
    a = cy.theta1_derivs(v, q, 14)
    b = py.theta1_derivs(v, q, 14)
    for x, y in zip(a, b):
        assert abs(x - y) <= 1e-14 * max(1.0, abs(y))


@pytest.mark.parametrize("m", [0.0, 0.1, 0.5, 0.9, 0.999])
def test_jacobi_kernels_agree(m):
    for u in np.linspace(-5.0, 5.0, 23):
        a = cy.jacobi_real(u, m)
        b = py.jacobi_real(u, m)
        assert np.allclose(a, b, rtol=0, atol=1e-15)


def test_power_product_kernels_agree():
    rng = np.random.default_rng(3)
    s = rng.uniform(-1, 1, 40) + 1j * rng.uniform(0, 1, 40)
    w = rng.uniform(0, 1, 40)
    roots = np.array([0.0, 1.0, -1.0 + 0.5j])
    exps = np.array([-0.5, -0.25, 0.3])
    cuts = np.array(cut_arguments(roots, 1))
    a = cy.power_product_sum(s, w, roots, exps, cuts)
    b = py.power_product_sum(s, w, roots, exps, cuts)
    assert abs(a - b) <= 1e-14 * abs(b)


def test_power_product_uses_cut_argument_on_negative_axis():
    # (1 - s) at s = 3 is -2; upper-side limit gives arg = -pi
    s = np.array([3.0 + 0j])
    w = np.array([1.0])
    roots = np.array([1.0 + 0j])
    exps = np.array([0.5])
    for impl in (cy, py):
        up = impl.power_product_sum(s, w, roots, exps, np.array(cut_arguments(roots, 1)))
        down = impl.power_product_sum(s, w, roots, exps, np.array(cut_arguments(roots, -1)))
        assert abs(up - (-1j * np.sqrt(2.0))) < 1e-15
        assert abs(down - 1j * np.sqrt(2.0)) < 1e-15


def test_package_runs_on_python_fallback():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['leastcap._kernels'] = None\n"
        "from leastcap import KERNEL_BACKEND, exact, least_capacity_point, preset_triangle\n"
        "assert KERNEL_BACKEND == 'python'\n"
        "print(1 / exact.h_sigma((1 + 1j) * 0.3011216108413220816))\n"
        "print(least_capacity_point(preset_triangle('6-9-13')).inner_radius)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    r_iso, r_6913 = (float(x) for x in out.stdout.split())
    assert abs(r_iso - 0.3346161009568417919) < 1e-14
    assert abs(r_6913 - 1.979479) < 1e-5
