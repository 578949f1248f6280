"""Compound Gauss-Jacobi quadrature of power products along straight paths.

Every integral in the package has the form

    integral from a to b of  prod_k (1 - s/r_k)**e_k  ds

(a zero root meaning the factor ``s**e_k``), so one integrator serves the
elliptic integral F, the incomplete beta function, the inverse sn-dn map and
the Schwarz-Christoffel map. Roots lying on the path split it; a root at a
piece endpoint is absorbed into the Jacobi weight; roots near a piece force
bisection until each lies at least half a piece length away.
"""

from functools import lru_cache
import math

import numpy as np
from scipy.special import eval_jacobi, gammaln, roots_jacobi

from .errors import ConvergenceError, DomainError
from .kernels import power_product_sum

_ON_PATH_TOL = 1e-13
_MAX_DEPTH = 60


@lru_cache(maxsize=256)
def jacobi_rule(n, alpha, beta):
    """Nodes and weights for weight ``(1-x)**alpha * (1+x)**beta`` on [-1, 1]."""
    if alpha == 0.0 and beta == 0.0:
        x, w = np.polynomial.legendre.leggauss(n)
    else:
        # Golub-Welsch nodes, Newton-polished, then closed-form weights
        # rescaled to the exact zeroth moment.
        x, _ = roots_jacobi(n, alpha, beta)
        c = 0.5 * (n + alpha + beta + 1)
        for _ in range(2):
            x = x - eval_jacobi(n, alpha, beta, x) / (c * eval_jacobi(n - 1, alpha + 1, beta + 1, x))
        dp = c * eval_jacobi(n - 1, alpha + 1, beta + 1, x)
        w = 1.0 / ((1.0 - x * x) * dp * dp)
        log_m0 = (
            (alpha + beta + 1) * math.log(2.0)
            + gammaln(alpha + 1)
            + gammaln(beta + 1)
            - gammaln(alpha + beta + 2)
        )
        w *= math.exp(log_m0) / w.sum()
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def cut_arguments(roots, side):
    """Argument to use for each factor whose base falls on its branch cut.

    ``side = +1`` takes limits from the upper half of the integration plane,
    ``-1`` from the lower half.
    """
    out = np.empty(len(roots))
    for k, r in enumerate(roots):
        if r == 0:
            sign = side
        else:
            sign = -side * np.sign(r.real)
        out[k] = -math.pi if sign < 0 else math.pi
    return out


def _constant_power(c, e, cut_arg):
    if c.real < 0 and abs(c.imag) <= 1e-15 * abs(c):
        return abs(c) ** e * complex(math.cos(e * cut_arg), math.sin(e * cut_arg))
    return c**e


def _dist_to_segment(r, p, q):
    d = q - p
    t = ((r - p) * d.conjugate()).real / abs(d) ** 2
    t = min(max(t, 0.0), 1.0)
    return abs(r - (p + t * d))


class PowerProduct:
    """Integrand ``prod_k (1 - s/r_k)**e_k`` with branch-side bookkeeping."""

    def __init__(self, roots, exps, side=1):
        self.roots = np.asarray(roots, dtype=complex)
        self.exps = np.asarray(exps, dtype=float)
        self.side = side
        self.cut_args = cut_arguments(self.roots, side)

    def __call__(self, s):
        """Evaluate the integrand at a single point."""
        return power_product_sum(
            np.array([s], dtype=complex), np.ones(1), self.roots, self.exps, self.cut_args
        )

    def _piece(self, p, q, left, right, n):
        """Gauss-Jacobi sum on [p, q]; ``left``/``right`` are root indices or None."""
        h = 0.5 * (q - p)
        alpha = self.exps[right] if right is not None else 0.0
        beta = self.exps[left] if left is not None else 0.0
        x, w = jacobi_rule(n, float(alpha), float(beta))
        keep = [k for k in range(len(self.roots)) if k != left and k != right]
        pref = h
        if left is not None:
            r = self.roots[left]
            c = h if r == 0 else -h / r
            pref *= _constant_power(complex(c), beta, self.cut_args[left])
        if right is not None:
            r = self.roots[right]
            c = -h if r == 0 else h / r
            pref *= _constant_power(complex(c), alpha, self.cut_args[right])
        s = p + h * (1.0 + x)
        total = power_product_sum(
            s, w, self.roots[keep], self.exps[keep], self.cut_args[keep]
        )
        return pref * total

    def _pieces(self, a, b):
        """Split [a, b] at on-path roots, then bisect for the half-distance rule."""
        L = abs(b - a)
        ts = [(0.0, None), (1.0, None)]
        d = b - a
        for k, r in enumerate(self.roots):
            t = ((r - a) * d.conjugate()).real / L**2
            if -_ON_PATH_TOL <= t <= 1 + _ON_PATH_TOL:
                off = abs(r - (a + t * d))
                if off <= _ON_PATH_TOL * max(L, 1.0):
                    t = min(max(t, 0.0), 1.0)
                    ts.append((t, k))
        ts.sort(key=lambda item: item[0])
        # merge coincident break points, keeping the root index
        merged = []
        for t, k in ts:
            if merged and abs(t - merged[-1][0]) <= _ON_PATH_TOL:
                if k is not None:
                    merged[-1] = (merged[-1][0], k)
                continue
            merged.append((t, k))
        if len(merged) == 1:
            merged.append((1.0, merged[0][1]))
        out = []
        for (t0, k0), (t1, k1) in zip(merged[:-1], merged[1:]):
            p = a + t0 * d if t0 > 0 else a
            q = a + t1 * d if t1 < 1 else b
            if k0 is not None:
                p = complex(self.roots[k0])
            if k1 is not None:
                q = complex(self.roots[k1])
            self._bisect(p, q, k0, k1, out, 0)
        return out

    def _bisect(self, p, q, left, right, out, depth):
        L = abs(q - p)
        ok = True
        for k, r in enumerate(self.roots):
            if k == left or k == right:
                continue
            if _dist_to_segment(r, p, q) < 0.5 * L:
                ok = False
                break
        if ok or depth >= _MAX_DEPTH:
            out.append((p, q, left, right))
            return
        m = 0.5 * (p + q)
        self._bisect(p, m, left, None, out, depth + 1)
        self._bisect(m, q, None, right, out, depth + 1)

    def integrate(self, a, b, n=64, adaptive=True, tol=1e-13, nmax=1024):
        """Integral along the straight segment from ``a`` to ``b``."""
        a = complex(a)
        b = complex(b)
        if a == b:
            return 0j
        for k, e in enumerate(self.exps):
            if e <= -1.0:
                r = self.roots[k]
                if _dist_to_segment(r, a, b) <= _ON_PATH_TOL * max(abs(b - a), 1.0):
                    raise DomainError(f"non-integrable singularity at {r} on the path")
        pieces = self._pieces(a, b)

        def total(nodes):
            return sum(self._piece(p, q, l, r, nodes) for p, q, l, r in pieces)

        value = total(n)
        if not adaptive:
            return value
        while n < nmax:
            n *= 2
            new = total(n)
            if abs(new - value) <= tol * max(1.0, abs(new)):
                return new
            value = new
        raise ConvergenceError(f"quadrature did not converge with {nmax} nodes")


def integrate_power_product(a, b, roots, exps, side=1, **kw):
    """Shorthand for ``PowerProduct(roots, exps, side).integrate(a, b, **kw)``."""
    return PowerProduct(roots, exps, side).integrate(a, b, **kw)
