# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: scalar C loops twin of ``_core_py``.

Same algorithms, same double-double carry for the triangular recurrence;
``two_prod`` uses the fused multiply-add instead of Dekker splitting.  The
selector in ``fracpoly._kernels`` prefers this module when it imports.
"""

from libc.math cimport sqrt, fma, floor, pow as c_pow

import math

import numpy as np

BACKEND = "compiled"


cdef struct dd:
    double hi
    double lo


cdef inline dd two_sum(double a, double b) noexcept nogil:
    cdef dd r
    cdef double bb
    r.hi = a + b
    bb = r.hi - a
    r.lo = (a - (r.hi - bb)) + (b - bb)
    return r


cdef inline dd quick_two_sum(double a, double b) noexcept nogil:
    cdef dd r
    r.hi = a + b
    r.lo = b - (r.hi - a)
    return r


cdef inline dd two_prod(double a, double b) noexcept nogil:
    cdef dd r
    r.hi = a * b
    r.lo = fma(a, b, -r.hi)
    return r


cdef inline dd dd_add(dd a, dd b) noexcept nogil:
    cdef dd s = two_sum(a.hi, b.hi)
    cdef dd t = two_sum(a.lo, b.lo)
    s.lo += t.hi
    s = quick_two_sum(s.hi, s.lo)
    s.lo += t.lo
    return quick_two_sum(s.hi, s.lo)


cdef inline dd dd_neg(dd a) noexcept nogil:
    cdef dd r
    r.hi = -a.hi
    r.lo = -a.lo
    return r


cdef inline dd dd_mul(dd a, dd b) noexcept nogil:
    cdef dd p = two_prod(a.hi, b.hi)
    p.lo += a.hi * b.lo + a.lo * b.hi
    return quick_two_sum(p.hi, p.lo)


cdef inline dd dd_mul_d(dd a, double b) noexcept nogil:
    cdef dd p = two_prod(a.hi, b)
    p.lo += a.lo * b
    return quick_two_sum(p.hi, p.lo)


cdef inline dd dd_div(dd a, dd b) noexcept nogil:
    cdef double q1, q2, q3
    cdef dd t, r
    q1 = a.hi / b.hi
    t = dd_mul_d(b, q1)
    r = dd_add(a, dd_neg(t))
    q2 = r.hi / b.hi
    t = dd_mul_d(b, q2)
    r = dd_add(r, dd_neg(t))
    q3 = r.hi / b.hi
    t = quick_two_sum(q1, q2)
    cdef dd q
    q.hi = q3
    q.lo = 0.0
    return dd_add(t, q)


cdef inline dd dd_sqrt(dd a) noexcept nogil:
    cdef double y = sqrt(a.hi)
    cdef dd yd
    yd.hi = y
    yd.lo = 0.0
    cdef dd q = dd_div(a, yd)
    return dd_mul_d(dd_add(q, yd), 0.5)


cdef inline dd dd_pow(double c, double alpha) noexcept nogil:
    """c**alpha for c > 0: exact integer powers and a square-root chain."""
    cdef double frac = alpha - floor(alpha)
    cdef long n = <long>floor(alpha)
    cdef dd r, p
    r.hi = 1.0
    r.lo = 0.0
    p.hi = c
    p.lo = 0.0
    while n:
        if n & 1:
            r = dd_mul(r, p)
        n >>= 1
        if n:
            p = dd_mul(p, p)
    p.hi = c
    p.lo = 0.0
    cdef int guard = 0
    while frac != 0.0:
        p = dd_sqrt(p)
        frac *= 2.0
        if frac >= 1.0:
            frac -= 1.0
            r = dd_mul(r, p)
        guard += 1
        if guard > 1100:
            break
    return r


def power_pair(cs, alpha):
    """c**alpha as a (hi, lo) double-double pair; mirrors the python twin."""
    cdef double[::1] c = np.ascontiguousarray(cs, dtype=np.float64).ravel()
    if not alpha > 0.0:
        raise ValueError("alpha must be positive")
    cdef Py_ssize_t m = c.shape[0], i
    hi = np.empty(m)
    lo = np.empty(m)
    cdef double[::1] hv = hi, lv = lo
    cdef dd r
    for i in range(m):
        if c[i] <= 0.0:
            raise ValueError("power_pair requires positive inputs")
        r = dd_pow(c[i], alpha)
        hv[i] = r.hi
        lv[i] = r.lo
    return hi, lo


def psi_matrix(a, b, d, double alpha, cs, Py_ssize_t s):
    """Order-alpha integrals of degrees 0..s-1 at each point of ``cs``."""
    cdef double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef double[::1] dv = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] c = np.ascontiguousarray(cs, dtype=np.float64).ravel()
    cdef Py_ssize_t m = c.shape[0]
    out = np.zeros((m, s))
    cdef double[:, ::1] ov = out
    cdef double ginv = 1.0 / math.gamma(alpha)

    work = np.empty((3, s, 2))
    cdef double[:, :, ::1] wv = work
    cdef Py_ssize_t i, j, k, cur, prv, old, tmp
    cdef Py_ssize_t n
    cdef dd ca, ax, t1, t2, t3, acc, denom
    cdef double ci

    for i in range(m):
        ci = c[i]
        if ci == 0.0:
            continue
        # seeds: c**(alpha + k) / (alpha + k), k = 0..s-1
        ca = dd_pow(ci, alpha)
        for k in range(s):
            denom = two_sum(alpha, <double>k)
            t1 = dd_div(ca, denom)
            wv[0, k, 0] = t1.hi
            wv[0, k, 1] = t1.lo
            ca = dd_mul_d(ca, ci)
        cur = 0
        prv = 1
        old = 2
        ov[i, 0] = (wv[cur, 0, 0] + wv[cur, 0, 1]) * ginv
        for j in range(1, s):
            tmp = old
            old = prv
            prv = cur
            cur = tmp
            ax = two_prod(av[j], ci)
            t1.hi = -bv[j]
            t1.lo = 0.0
            ax = dd_add(ax, t1)
            n = s - j
            for k in range(n):
                t1.hi = wv[prv, k, 0]
                t1.lo = wv[prv, k, 1]
                t2.hi = wv[prv, k + 1, 0]
                t2.lo = wv[prv, k + 1, 1]
                acc = dd_add(dd_mul(ax, t1), dd_neg(dd_mul_d(t2, av[j])))
                if j >= 2 and dv[j] != 0.0:
                    t3.hi = wv[old, k, 0]
                    t3.lo = wv[old, k, 1]
                    acc = dd_add(acc, dd_neg(dd_mul_d(t3, dv[j])))
                wv[cur, k, 0] = acc.hi
                wv[cur, k, 1] = acc.lo
            ov[i, j] = (wv[cur, 0, 0] + wv[cur, 0, 1]) * ginv
    return out


def poly_table(a, b, d, cs, Py_ssize_t s):
    """Values P_j(c) for j = 0..s-1 at each point: forward recurrence."""
    cdef double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef double[::1] dv = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] c = np.ascontiguousarray(cs, dtype=np.float64).ravel()
    cdef Py_ssize_t m = c.shape[0], i, j
    out = np.empty((m, s))
    cdef double[:, ::1] ov = out
    for i in range(m):
        ov[i, 0] = 1.0
        if s >= 2:
            ov[i, 1] = av[1] * c[i] - bv[1]
        for j in range(2, s):
            ov[i, j] = (av[j] * c[i] - bv[j]) * ov[i, j - 1] - dv[j] * ov[i, j - 2]
    return out


def horner_values(coeffs, double alpha, cs):
    """Nested evaluation of sum_i p_i c**(i+alpha), plain binary64."""
    cdef double[::1] p = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef double[::1] c = np.ascontiguousarray(cs, dtype=np.float64).ravel()
    cdef Py_ssize_t m = c.shape[0], np_ = p.shape[0], i, k
    out = np.empty(m)
    cdef double[::1] ov = out
    cdef double rho
    for i in range(m):
        rho = p[np_ - 1]
        for k in range(np_ - 2, -1, -1):
            rho = rho * c[i] + p[k]
        ov[i] = rho * c_pow(c[i], alpha)
    return out
