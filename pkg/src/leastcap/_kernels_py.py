"""Pure-Python implementations of the hot numerical kernels.

Mirrors the compiled ``_kernels`` extension function-for-function; used when the
extension is not built.
"""

import cmath
import math

import numpy as np


def theta1_derivs(v, q, nterms):
    """Jacobi theta_1(v | q) and its first three derivatives in v."""
    v = complex(v)
    t0 = t1 = t2 = t3 = 0j
    for n in range(nterms):
        k = 2 * n + 1
        c = q ** ((n + 0.5) ** 2)
        if n % 2:
            c = -c
        s = cmath.sin(k * v)
        co = cmath.cos(k * v)
        t0 += c * s
        t1 += c * k * co
        t2 -= c * k * k * s
        t3 -= c * k * k * k * co
    return 2.0 * t0, 2.0 * t1, 2.0 * t2, 2.0 * t3


def power_product_sum(s, w, roots, exps, cut_args):
    """Sum of ``w[j] * prod_k (1 - s[j]/roots[k])**exps[k]``.

    A zero root stands for the factor ``s**exps[k]``. Where a factor's base
    lies on the negative real axis its argument is taken from ``cut_args[k]``
    instead of the principal value.
    """
    s = np.asarray(s, dtype=complex)
    logsum = np.zeros(s.shape, dtype=complex)
    for r, e, ca in zip(roots, exps, cut_args):
        base = s if r == 0 else 1.0 - s / r
        mag = np.abs(base)
        arg = np.angle(base)
        on_cut = (base.real < 0) & (np.abs(base.imag) <= 1e-15 * mag)
        arg = np.where(on_cut, ca, arg)
        logsum += e * (np.log(mag) + 1j * arg)
    return complex(np.dot(w, np.exp(logsum)))


def jacobi_real(u, m):
    """(sn, cn, dn) for real argument ``u`` and parameter ``0 <= m < 1``."""
    if m == 0.0:
        return math.sin(u), math.cos(u), 1.0
    a = [1.0]
    c = [math.sqrt(m)]
    b = math.sqrt(1.0 - m)
    while abs(c[-1]) > 1e-17 * a[-1] and len(a) < 40:
        an, bn = a[-1], b
        a.append(0.5 * (an + bn))
        c.append(0.5 * (an - bn))
        b = math.sqrt(an * bn)
    n = len(a) - 1
    phi = (2.0**n) * a[n] * u
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(c[j] / a[j] * math.sin(phi)))
    sn = math.sin(phi)
    cn = math.cos(phi)
    # both terms positive, so no cancellation for m near 1
    dn = math.sqrt((1.0 - m) + m * cn * cn)
    return sn, cn, dn
