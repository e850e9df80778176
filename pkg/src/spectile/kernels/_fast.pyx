# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled windowed power-spectrum field: out[g] = sum_s |sum_b prod_j F|^2."""

from libc.math cimport sin, cos, fabs, M_PI

import numpy as np


cdef inline double _sinc(double x) nogil:
    if fabs(x) < 1e-9:
        return 1.0
    return sin(M_PI * x) / (M_PI * x)


def power_sum_field(lo, hi, points, xs):
    lo_arr = np.ascontiguousarray(lo, dtype=np.float64)
    hi_arr = np.ascontiguousarray(hi, dtype=np.float64)
    pts_arr = np.ascontiguousarray(points, dtype=np.float64)
    xs_arr = np.ascontiguousarray(xs, dtype=np.float64)
    out = np.zeros(len(xs_arr), dtype=np.float64)
    cdef double[:, ::1] blo = lo_arr
    cdef double[:, ::1] bhi = hi_arr
    cdef double[:, ::1] pts = pts_arr
    cdef double[:, ::1] grid = xs_arr
    cdef double[::1] acc = out
    cdef Py_ssize_t G = grid.shape[0], S = pts.shape[0]
    cdef Py_ssize_t B = blo.shape[0], D = blo.shape[1]
    cdef Py_ssize_t g, s, b, j
    cdef double u, w, m, sc, a, th1, th2, nre, nim, fre, fim, tre, tim
    cdef double amp_re, amp_im, total
    with nogil:
        for g in range(G):
            total = 0.0
            for s in range(S):
                amp_re = 0.0
                amp_im = 0.0
                for b in range(B):
                    fre = 1.0
                    fim = 0.0
                    for j in range(D):
                        u = grid[g, j] - pts[s, j]
                        w = bhi[b, j] - blo[b, j]
                        if fabs(u * w) < 1e-6:
                            m = 0.5 * (blo[b, j] + bhi[b, j])
                            sc = w * _sinc(w * u)
                            a = 2.0 * M_PI * u * m
                            tre = sc * cos(a)
                            tim = -sc * sin(a)
                        else:
                            a = 2.0 * M_PI * u
                            th1 = a * blo[b, j]
                            th2 = a * bhi[b, j]
                            nre = cos(th1) - cos(th2)
                            nim = sin(th2) - sin(th1)
                            # divide by i*a: (nre + i*nim)/(i*a) = nim/a - i*nre/a
                            tre = nim / a
                            tim = -nre / a
                        # complex multiply accumulate into (fre, fim)
                        sc = fre * tre - fim * tim
                        fim = fre * tim + fim * tre
                        fre = sc
                    amp_re += fre
                    amp_im += fim
                total += amp_re * amp_re + amp_im * amp_im
            acc[g] = total
    return out
