# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_kernels_py`` for the reference."""

from libc.math cimport sin, cos, asin, sqrt, fabs, pow, log, atan2, exp, hypot
cimport numpy as cnp
import numpy as np

cdef extern from "complex.h":
    double complex csin(double complex)
    double complex ccos(double complex)
    double complex cexp(double complex)
    double creal(double complex)
    double cimag(double complex)


def theta1_derivs(v, double q, int nterms):
    cdef double complex vv = v
    cdef double complex t0 = 0, t1 = 0, t2 = 0, t3 = 0, s, co
    cdef double c
    cdef int n, k
    for n in range(nterms):
        k = 2 * n + 1
        c = pow(q, (n + 0.5) * (n + 0.5))
        if n % 2:
            c = -c
        s = csin(k * vv)
        co = ccos(k * vv)
        t0 += c * s
        t1 += c * k * co
        t2 -= c * k * k * s
        t3 -= c * k * k * k * co
    return 2.0 * t0, 2.0 * t1, 2.0 * t2, 2.0 * t3


def power_product_sum(s, w, roots, exps, cut_args):
    cdef const double complex[::1] sv = np.ascontiguousarray(s, dtype=np.complex128)
    cdef const double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef const double complex[::1] rv = np.ascontiguousarray(roots, dtype=np.complex128)
    cdef const double[::1] ev = np.ascontiguousarray(exps, dtype=np.float64)
    cdef const double[::1] cv = np.ascontiguousarray(cut_args, dtype=np.float64)
    cdef Py_ssize_t j, k, ns = sv.shape[0], nr = rv.shape[0]
    cdef double complex base, total = 0, r
    cdef double lr, li, mag, arg, br, bi
    for j in range(ns):
        lr = 0.0
        li = 0.0
        for k in range(nr):
            r = rv[k]
            if creal(r) == 0.0 and cimag(r) == 0.0:
                base = sv[j]
            else:
                base = 1.0 - sv[j] / r
            br = creal(base)
            bi = cimag(base)
            mag = hypot(br, bi)
            if br < 0 and fabs(bi) <= 1e-15 * mag:
                arg = cv[k]
            else:
                arg = atan2(bi, br)
            lr += ev[k] * log(mag)
            li += ev[k] * arg
        total += wv[j] * exp(lr) * (cos(li) + 1j * sin(li))
    return complex(total)


def jacobi_real(double u, double m):
    cdef double a[41]
    cdef double c[41]
    cdef double b, an, bn, phi, cn
    cdef int n = 0, j
    if m == 0.0:
        return sin(u), cos(u), 1.0
    a[0] = 1.0
    c[0] = sqrt(m)
    b = sqrt(1.0 - m)
    while fabs(c[n]) > 1e-17 * a[n] and n < 39:
        an = a[n]
        bn = b
        a[n + 1] = 0.5 * (an + bn)
        c[n + 1] = 0.5 * (an - bn)
        b = sqrt(an * bn)
        n += 1
    phi = pow(2.0, n) * a[n] * u
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + asin(c[j] / a[j] * sin(phi)))
    cn = cos(phi)
    return sin(phi), cn, sqrt((1.0 - m) + m * cn * cn)
