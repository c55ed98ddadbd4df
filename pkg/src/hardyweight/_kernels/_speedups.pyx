# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors :mod:`hardyweight._kernels.pyfallback`.

Each routine implements the same arithmetic as its pure-Python twin in
the same evaluation order, so the two backends agree to the last few
ulps and either one can back the public API.
"""

from libc.math cimport fabs, sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from "<float.h>":
    const double DBL_MIN


def improved_weight_range(long start, long count):
    """Improved Hardy weight w(n) for n = start, ..., start + count - 1."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(count, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i
    cdef double n, x, x2, s
    for i in range(count):
        n = <double> (start + i)
        x = 1.0 / n
        x2 = x * x
        s = sqrt(1.0 + x) + sqrt(1.0 - x)
        o[i] = 2.0 * x2 / ((1.0 + sqrt(1.0 - x2)) * (2.0 + s))
    return out


def gap_components(phi_in, w_in):
    """Dirichlet energy and weighted mass of a finitely supported sequence."""
    cdef double[::1] phi = np.ascontiguousarray(phi_in, dtype=np.float64)
    cdef double[::1] w = np.ascontiguousarray(w_in, dtype=np.float64)
    cdef Py_ssize_t N = phi.shape[0]
    if w.shape[0] != N:
        raise ValueError("phi and w must have the same length")
    cdef double energy = 0.0
    cdef double mass = 0.0
    cdef double prev = 0.0
    cdef double diff
    cdef Py_ssize_t i
    for i in range(N):
        diff = phi[i] - prev
        energy += diff * diff
        mass += w[i] * phi[i] * phi[i]
        prev = phi[i]
    energy += prev * prev
    return energy, mass


def stencil_residual_max(u_in, w_in):
    """Largest relative residual of the eigenequation stencil."""
    cdef double[::1] u = np.ascontiguousarray(u_in, dtype=np.float64)
    cdef double[::1] w = np.ascontiguousarray(w_in, dtype=np.float64)
    cdef Py_ssize_t N = w.shape[0]
    if u.shape[0] != N + 2:
        raise ValueError("u must cover indices 0..N+1")
    cdef double worst = 0.0
    cdef double r
    cdef Py_ssize_t i
    for i in range(1, N + 1):
        r = fabs((2.0 * u[i] - u[i - 1] - u[i + 1]) - w[i - 1] * u[i]) / u[i]
        if r > worst:
            worst = r
    return worst


cdef Py_ssize_t _count_below(double[::1] d, double[::1] e2, double x,
                             double pivmin) nogil:
    cdef Py_ssize_t count = 0
    cdef double q = 1.0
    cdef Py_ssize_t i
    for i in range(d.shape[0]):
        if i:
            q = d[i] - x - e2[i - 1] / q
        else:
            q = d[i] - x
        if -pivmin < q < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


cdef double _pivot_guard(double[::1] e2):
    cdef double e2max = 1.0
    cdef Py_ssize_t i
    for i in range(e2.shape[0]):
        if e2[i] > e2max:
            e2max = e2[i]
    return DBL_MIN * e2max


def sturm_count_below(d_in, e2_in, double x):
    """Number of eigenvalues of a symmetric tridiagonal matrix below x."""
    cdef double[::1] d = np.ascontiguousarray(d_in, dtype=np.float64)
    cdef double[::1] e2 = np.ascontiguousarray(e2_in, dtype=np.float64)
    return _count_below(d, e2, x, _pivot_guard(e2))


def tridiag_smallest_eigenvalue(d_in, e2_in, double lo, double hi, double tol):
    """Smallest eigenvalue of a symmetric tridiagonal matrix by bisection."""
    cdef double[::1] d = np.ascontiguousarray(d_in, dtype=np.float64)
    cdef double[::1] e2 = np.ascontiguousarray(e2_in, dtype=np.float64)
    cdef double pivmin = _pivot_guard(e2)
    cdef double mid
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if _count_below(d, e2, mid, pivmin) >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
