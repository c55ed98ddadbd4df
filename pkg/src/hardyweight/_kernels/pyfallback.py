"""NumPy/pure-Python implementations of the hot kernels.

Import :mod:`hardyweight._kernels` rather than this module; the package
selects the compiled extension when it is available and falls back to
these routines otherwise.  Both backends implement the same arithmetic in
the same order, so their results agree to the last few ulps.
"""

from __future__ import annotations

import numpy as np

_SAFMIN = float(np.finfo(np.float64).tiny)


def improved_weight_range(start, count):
    """Improved Hardy weight w(n) for n = start, ..., start + count - 1.

    Evaluates 2 - sqrt(1 + 1/n) - sqrt(1 - 1/n) through the equivalent form

        2 x^2 / ((1 + sqrt(1 - x^2)) (2 + sqrt(1 + x) + sqrt(1 - x))),
        x = 1/n,

    which is free of the catastrophic cancellation the literal difference
    suffers for large n and keeps full relative accuracy over the whole
    index range.
    """
    n = np.arange(start, start + count, dtype=np.float64)
    x = 1.0 / n
    x2 = x * x
    s = np.sqrt(1.0 + x) + np.sqrt(1.0 - x)
    return 2.0 * x2 / ((1.0 + np.sqrt(1.0 - x2)) * (2.0 + s))


def gap_components(phi, w):
    """Dirichlet energy and weighted mass of a finitely supported sequence.

    ``phi`` holds phi(1..N) with the convention phi(0) = 0; ``w`` holds
    w(1..N).  The energy includes the boundary edge (0, 1) and the cutoff
    edge (N, N+1).  Returns ``(energy, mass)`` as Python floats.
    """
    phi = np.ascontiguousarray(phi, dtype=np.float64)
    w = np.ascontiguousarray(w, dtype=np.float64)
    if w.shape[0] != phi.shape[0]:
        raise ValueError("phi and w must have the same length")
    d = np.diff(phi, prepend=0.0)
    energy = float(d @ d) + float(phi[-1]) ** 2
    mass = float(w @ (phi * phi))
    return energy, mass


def stencil_residual_max(u, w):
    """Largest relative residual of the eigenequation stencil.

    ``u`` holds u(0..N+1) with u[0] = 0 and ``w`` holds w(1..N); returns
    max over n = 1..N of |(2 u(n) - u(n-1) - u(n+1)) - w(n) u(n)| / u(n).
    """
    u = np.ascontiguousarray(u, dtype=np.float64)
    w = np.ascontiguousarray(w, dtype=np.float64)
    N = w.shape[0]
    if u.shape[0] != N + 2:
        raise ValueError("u must cover indices 0..N+1")
    mid = u[1 : N + 1]
    r = (2.0 * mid - u[:N] - u[2 : N + 2]) - w * mid
    return float(np.max(np.abs(r) / mid))


def sturm_count_below(d, e2, x):
    """Number of eigenvalues of a symmetric tridiagonal matrix below x.

    ``d`` is the diagonal and ``e2`` the squared off-diagonal.  Counts the
    negative pivots of the LDL^T factorization of T - x I; pivots smaller in
    magnitude than a tiny guard are replaced by -guard so the recurrence
    never divides by zero.
    """
    d = np.ascontiguousarray(d, dtype=np.float64)
    e2 = np.ascontiguousarray(e2, dtype=np.float64)
    dl = d.tolist()
    e2l = e2.tolist()
    pivmin = _SAFMIN * max(1.0, max(e2l, default=1.0))
    count = 0
    q = 1.0
    for i in range(len(dl)):
        q = dl[i] - x - (e2l[i - 1] / q if i else 0.0)
        if -pivmin < q < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def tridiag_smallest_eigenvalue(d, e2, lo, hi, tol):
    """Smallest eigenvalue of a symmetric tridiagonal matrix by bisection.

    ``[lo, hi]`` must bracket the smallest eigenvalue; the Sturm count
    steers the bisection until the bracket width drops below ``tol`` or the
    midpoint stops moving in float64.
    """
    lo = float(lo)
    hi = float(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if sturm_count_below(d, e2, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
