"""Derivative-free maximization of the inner radius over a triangle.

The 2-D search runs Nelder-Mead on -log(radius) in barycentric coordinates,
then polishes with a quadratic model fitted on a finite-difference stencil.
Value-only searches resolve a smooth optimum to about sqrt(eps) in
position; the polish uses a fourth-order central-difference gradient so the
location is limited by evaluation noise instead.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import LeastCapError

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_BARRIER = 1e10


@dataclass(frozen=True)
class OptimizerConfig:
    """Tolerances are relative: positions to the triangle diameter, values to |f|."""

    tol_x: float = 1e-12
    tol_f: float = 1e-14
    max_evals: int = 2000
    penalty_margin: float = 1e-7
    seed_point: tuple = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)
    initial_edge: float = 0.1
    polish_step: float = 1e-3
    polish_iters: int = 3

    def __post_init__(self):
        if min(self.tol_x, self.tol_f, self.penalty_margin, self.polish_step) <= 0:
            raise ValueError("tolerances must be positive")
        if abs(sum(self.seed_point) - 1.0) > 1e-12 or min(self.seed_point) <= 0:
            raise ValueError("seed_point must be strictly interior barycentric coordinates")


@dataclass(frozen=True)
class Optimum:
    point: complex
    value: float
    evals: int
    converged: bool
    simplex_diameter_final: float
    barycentric: tuple = ()
    tolerance_achieved: float = math.inf


class _Objective:
    """-log(radius) on barycentric parameters with a rejecting barrier."""

    def __init__(self, eval_fn, tri, margin):
        self.eval_fn = eval_fn
        self.tri = tri
        self.margin = margin * tri.diameter
        self.evals = 0

    def point(self, p):
        return self.tri.from_barycentric(p[0], p[1])

    def __call__(self, p):
        z = self.point(p)
        d = self.tri.boundary_distance(z)
        if d <= self.margin:
            return _BARRIER + (self.margin - d) / self.tri.diameter
        self.evals += 1
        try:
            r = self.eval_fn(z)
        except LeastCapError:
            return _BARRIER
        if not r > 0:
            return _BARRIER
        return -math.log(r)


def nelder_mead(f, x0, edge, tol_x, tol_f, max_evals, scale=1.0):
    """Plain Nelder-Mead with coefficients (1, 2, 1/2, 1/2).

    ``scale`` converts parameter distances into the units of ``tol_x``.
    Returns ``(best_x, best_f, evals, converged, simplex_size)``.
    """
    x0 = np.asarray(x0, dtype=float)
    n = x0.size
    simplex = [x0.copy()]
    for i in range(n):
        x = x0.copy()
        x[i] += edge
        simplex.append(x)
    fs = [f(x) for x in simplex]
    evals = n + 1
    converged = False
    size = np.inf
    while evals < max_evals:
        order = np.argsort(fs, kind="stable")
        simplex = [simplex[i] for i in order]
        fs = [fs[i] for i in order]
        size = scale * max(np.linalg.norm(x - simplex[0]) for x in simplex[1:])
        spread = fs[-1] - fs[0]
        if size < tol_x or (spread <= tol_f * (1.0 + abs(fs[0])) and size < 1e-6):
            converged = True
            break
        centroid = np.mean(simplex[:-1], axis=0)
        xr = centroid + (centroid - simplex[-1])
        fr = f(xr)
        evals += 1
        if fr < fs[0]:
            xe = centroid + 2.0 * (centroid - simplex[-1])
            fe = f(xe)
            evals += 1
            if fe < fr:
                simplex[-1], fs[-1] = xe, fe
            else:
                simplex[-1], fs[-1] = xr, fr
        elif fr < fs[-2]:
            simplex[-1], fs[-1] = xr, fr
        else:
            if fr < fs[-1]:
                xc = centroid + 0.5 * (xr - centroid)
            else:
                xc = centroid + 0.5 * (simplex[-1] - centroid)
            fc = f(xc)
            evals += 1
            if fc < min(fr, fs[-1]):
                simplex[-1], fs[-1] = xc, fc
            else:
                for i in range(1, n + 1):
                    simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0])
                    fs[i] = f(simplex[i])
                evals += n
    best = int(np.argmin(fs))
    return simplex[best], fs[best], evals, converged, size


def quadratic_polish(f, x, h, iters=3, tol=0.0):
    """Refine a 2-D minimum with Newton steps on a stencil-fitted quadratic.

    The gradient uses fourth-order central differences, the Hessian
    second-order ones. A step is kept only if it does not raise f.
    """
    x = np.asarray(x, dtype=float)
    fx = f(x)
    last = np.inf
    for _ in range(iters):
        e = np.eye(2) * h
        g = np.empty(2)
        H = np.empty((2, 2))
        for i in range(2):
            fp, fm = f(x + e[i]), f(x - e[i])
            fpp, fmm = f(x + 2 * e[i]), f(x - 2 * e[i])
            g[i] = (8.0 * (fp - fm) - (fpp - fmm)) / (12.0 * h)
            H[i, i] = (fp - 2.0 * fx + fm) / h**2
        H[0, 1] = H[1, 0] = (
            f(x + e[0] + e[1]) - f(x + e[0] - e[1]) - f(x - e[0] + e[1]) + f(x - e[0] - e[1])
        ) / (4.0 * h**2)
        try:
            step = -np.linalg.solve(H, g)
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(step)) or np.linalg.norm(step) > 10 * h:
            break
        xn = x + step
        fn = f(xn)
        if fn > fx + 1e-15 * (1.0 + abs(fx)):
            break
        x, fx = xn, fn
        last = float(np.linalg.norm(step))
        if last <= tol:
            break
    return x, fx, last


def maximize_inner_radius(eval_fn, tri, cfg=None):
    """Maximize ``eval_fn`` (an inner radius) over the open triangle ``tri``."""
    cfg = cfg or OptimizerConfig()
    obj = _Objective(eval_fn, tri, cfg.penalty_margin)
    seed = np.array(cfg.seed_point[:2], dtype=float)
    # barycentric unit displacement moves the point by at most one diameter
    x, fx, _, converged, size = nelder_mead(
        obj, seed, cfg.initial_edge, cfg.tol_x, cfg.tol_f, cfg.max_evals
    )
    achieved = size * tri.diameter
    if converged:
        x, fx, last = quadratic_polish(obj, x, cfg.polish_step, cfg.polish_iters, cfg.tol_x)
        if math.isfinite(last):
            achieved = last * tri.diameter
    point = complex(obj.point(x))
    value = math.exp(-fx) if fx < _BARRIER else 0.0
    bary = tri.barycentric(point)
    return Optimum(point, value, obj.evals, converged, size, bary, achieved)


def _parabola_vertex(f, x, h):
    fm, f0, fp = f(x - h), f(x), f(x + h)
    den = fp - 2.0 * f0 + fm
    if den == 0:
        return x
    return x - 0.5 * h * (fp - fm) / den


def maximize_on_segment(eval_fn, a, b, tol=1e-12):
    """Golden-section search for the maximum of a unimodal function on [a, b].

    The bracket is shrunk to ~1e-7 of its length (the noise floor of a
    value-only search) and then refined by three-point parabolic steps
    with Richardson extrapolation over step sizes h and 2h, which removes
    the cubic-term bias of a single parabola. Returns ``(argmax, max)``.
    Non-unimodal input yields a local maximum.
    """
    if not a < b:
        raise ValueError("need a < b")
    f = lambda t: -eval_fn(t)  # noqa: E731
    lo, hi = a, b
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    stop = max(tol, 1e-7 * (b - a))
    while hi - lo > stop:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    x = x1 if f1 <= f2 else x2
    h = 1e-3 * (b - a)
    for _ in range(2):
        if x - 2 * h <= a or x + 2 * h >= b:
            break
        v1 = _parabola_vertex(f, x, h)
        v2 = _parabola_vertex(f, x, 2 * h)
        xn = (4.0 * v1 - v2) / 3.0
        if not a < xn < b or abs(xn - x) > 2 * h:
            break
        done = abs(xn - x) <= tol
        x = xn
        if done:
            break
    return x, -f(x)
