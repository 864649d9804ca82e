# cython: language_level=3
"""Compiled metric kernels; same contract as ``hairopt._pykernels``."""
from libc.math cimport sin, sqrt, fabs
from libc.stdlib cimport malloc, free


cdef inline double _ipow(double x, int n) nogil:
    cdef double out = 1.0
    cdef int i
    for i in range(n):
        out *= x
    return out


cdef inline double _sag(double u, double shift, double inv_rc, bint exact) nogil:
    cdef double s = u - shift
    cdef double q
    if s <= 0.0:
        return 0.0
    if exact:
        q = s * inv_rc
        return s * s * inv_rc / (1.0 + sqrt(1.0 - q * q))
    return 0.5 * s * s * inv_rc


def polar_moment(const double[:] nodes, const double[:] weights,
                 double r_lo, double r_hi, double phi_lo, double phi_hi,
                 int n_r, int n_phi, int r_pow, int sin_pow, int gap_pow,
                 double dprime, double alpha, double inv_rc, bint exact,
                 double shift):
    cdef Py_ssize_t p = nodes.shape[0]
    cdef Py_ssize_t m = n_phi * p
    cdef double hr = (r_hi - r_lo) / n_r
    cdef double hp = (phi_hi - phi_lo) / n_phi
    cdef double total = 0.0, abs_total = 0.0
    cdef double r, wr, base, gap, val, row, abs_row
    cdef Py_ssize_t i, a, j, b
    # angular nodes: sin(phi) and weight * sin(phi)**sin_pow
    cdef double *s = <double *> malloc(2 * m * sizeof(double))
    if s == NULL:
        raise MemoryError()
    cdef double *ws = s + m
    try:
        with nogil:
            for j in range(n_phi):
                for b in range(p):
                    s[j * p + b] = sin(phi_lo + hp * (j + 0.5 * (nodes[b] + 1.0)))
                    ws[j * p + b] = 0.5 * hp * weights[b] * _ipow(s[j * p + b], sin_pow)
            for i in range(n_r):
                for a in range(p):
                    r = r_lo + hr * (i + 0.5 * (nodes[a] + 1.0))
                    wr = 0.5 * hr * weights[a]
                    base = dprime + _sag(r, shift, inv_rc, exact)
                    row = 0.0
                    abs_row = 0.0
                    for j in range(m):
                        gap = base + alpha * r * s[j]
                        val = ws[j] / _ipow(gap, gap_pow)
                        row += val
                        abs_row += fabs(val)
                    val = wr * _ipow(r, r_pow)
                    total += val * row
                    abs_total += fabs(val) * abs_row
    finally:
        free(s)
    return total, abs_total


def line_moment(const double[:] nodes, const double[:] weights,
                double x_lo, double x_hi, int n_x, int x_pow, int gap_pow,
                double dprime, double alpha, double inv_rc, bint exact,
                double shift):
    cdef Py_ssize_t p = nodes.shape[0]
    cdef double h = (x_hi - x_lo) / n_x
    cdef double total = 0.0, abs_total = 0.0
    cdef double x, gap, val
    cdef Py_ssize_t i, a
    with nogil:
        for i in range(n_x):
            for a in range(p):
                x = x_lo + h * (i + 0.5 * (nodes[a] + 1.0))
                gap = dprime + alpha * x + _sag(x, shift, inv_rc, exact)
                val = 0.5 * h * weights[a] * _ipow(x, x_pow) / _ipow(gap, gap_pow)
                total += val
                abs_total += fabs(val)
    return total, abs_total
