# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled float kernels: batch distance sums and nested ternary refinement.

Mirrors _kernels_py exactly; keep the loop structure in sync so both
backends agree to rounding.
"""

import numpy as np

from libc.math cimport fabs, pow


cdef double _obj_poly(double x, double y, double[::1] sx, double[::1] sy,
                      double[::1] dx, double[::1] dy) noexcept nogil:
    cdef double tot = 0.0, best, v, rx, ry
    cdef Py_ssize_t i, j
    cdef Py_ssize_t n = sx.shape[0], m = dx.shape[0]
    for i in range(n):
        rx = x - sx[i]
        ry = y - sy[i]
        best = dx[0] * rx + dy[0] * ry
        for j in range(1, m):
            v = dx[j] * rx + dy[j] * ry
            if v > best:
                best = v
        tot += best
    return tot


cdef double _obj_lp(double x, double y, double[::1] sx, double[::1] sy,
                    double p) noexcept nogil:
    cdef double tot = 0.0, rx, ry
    cdef Py_ssize_t i, n = sx.shape[0]
    for i in range(n):
        rx = fabs(x - sx[i])
        ry = fabs(y - sy[i])
        tot += pow(pow(rx, p) + pow(ry, p), 1.0 / p)
    return tot


def objective_batch_poly(double[::1] px, double[::1] py, double[::1] sx,
                         double[::1] sy, double[::1] dx, double[::1] dy):
    """Distance sums at many points; the norm is max over dual vertices."""
    out = np.empty(px.shape[0])
    cdef double[::1] o = out
    cdef Py_ssize_t k
    with nogil:
        for k in range(px.shape[0]):
            o[k] = _obj_poly(px[k], py[k], sx, sy, dx, dy)
    return out


def objective_batch_lp(double[::1] px, double[::1] py, double[::1] sx,
                       double[::1] sy, double p):
    out = np.empty(px.shape[0])
    cdef double[::1] o = out
    cdef Py_ssize_t k
    with nogil:
        for k in range(px.shape[0]):
            o[k] = _obj_lp(px[k], py[k], sx, sy, p)
    return out


cdef double _min_over_y_poly(double x, double ylo, double yhi, int iters,
                             double[::1] sx, double[::1] sy, double[::1] dx,
                             double[::1] dy, double* ybest) noexcept nogil:
    cdef double a = ylo, b = yhi, third, m1, m2, y
    cdef int it
    for it in range(iters):
        third = (b - a) / 3.0
        m1 = a + third
        m2 = b - third
        if _obj_poly(x, m1, sx, sy, dx, dy) <= _obj_poly(x, m2, sx, sy, dx, dy):
            b = m2
        else:
            a = m1
    y = (a + b) / 2.0
    ybest[0] = y
    return _obj_poly(x, y, sx, sy, dx, dy)


cdef double _min_over_y_lp(double x, double ylo, double yhi, int iters,
                           double[::1] sx, double[::1] sy, double p,
                           double* ybest) noexcept nogil:
    cdef double a = ylo, b = yhi, third, m1, m2, y
    cdef int it
    for it in range(iters):
        third = (b - a) / 3.0
        m1 = a + third
        m2 = b - third
        if _obj_lp(x, m1, sx, sy, p) <= _obj_lp(x, m2, sx, sy, p):
            b = m2
        else:
            a = m1
    y = (a + b) / 2.0
    ybest[0] = y
    return _obj_lp(x, y, sx, sy, p)


def refine_nested_ternary_poly(double xlo, double xhi, double ylo, double yhi,
                               int iters, double[::1] sx, double[::1] sy,
                               double[::1] dx, double[::1] dy):
    """Global minimum of a convex distance sum by ternary-in-ternary search."""
    cdef double a = xlo, b = xhi, third, m1, m2, f1, f2, x, y, val, tmp
    cdef int it
    with nogil:
        for it in range(iters):
            third = (b - a) / 3.0
            m1 = a + third
            m2 = b - third
            f1 = _min_over_y_poly(m1, ylo, yhi, iters, sx, sy, dx, dy, &tmp)
            f2 = _min_over_y_poly(m2, ylo, yhi, iters, sx, sy, dx, dy, &tmp)
            if f1 <= f2:
                b = m2
            else:
                a = m1
        x = (a + b) / 2.0
        val = _min_over_y_poly(x, ylo, yhi, iters, sx, sy, dx, dy, &y)
    return x, y, val


def refine_nested_ternary_lp(double xlo, double xhi, double ylo, double yhi,
                             int iters, double[::1] sx, double[::1] sy,
                             double p):
    cdef double a = xlo, b = xhi, third, m1, m2, f1, f2, x, y, val, tmp
    cdef int it
    with nogil:
        for it in range(iters):
            third = (b - a) / 3.0
            m1 = a + third
            m2 = b - third
            f1 = _min_over_y_lp(m1, ylo, yhi, iters, sx, sy, p, &tmp)
            f2 = _min_over_y_lp(m2, ylo, yhi, iters, sx, sy, p, &tmp)
            if f1 <= f2:
                b = m2
            else:
                a = m1
        x = (a + b) / 2.0
        val = _min_over_y_lp(x, ylo, yhi, iters, sx, sy, p, &y)
    return x, y, val
