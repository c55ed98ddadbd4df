"""Independent reference implementations and frozen expected values.

Nothing here reuses the package's numerical code paths: weights come from
the literal defining formulas evaluated by mpmath at high precision, series
coefficients from a direct product formula for generalized binomials, and
small-pencil eigenvalues from the characteristic polynomial (exact
three-term recurrence, then mpmath root finding) or from scipy's
tridiagonal solver.  The frozen constants below were produced by these
same routines and are pinned so a regression in either side is caught.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np

# Frozen from mp_improved_weight(n) at 60 decimal digits, rounded to float64.
W1_FLOAT = 0.5857864376269049  # equals float(2 - sqrt(2))
W2_FLOAT = 0.06814834742186343
W10_FLOAT = 0.0025078537793346532

# Frozen exact partial sum c_1/2^2 + c_2/2^4 + c_3/2^6 of the series at n = 2.
SERIES_N2_K3_EXACT = Fraction(2229, 32768)

# Frozen from eigenvalue oracles: quadratic formula (N = 2), characteristic
# polynomial at 60 digits (N <= 6), scipy.linalg.eigh_tridiagonal (larger N).
LAMBDA_MIN_IMPROVED = {
    1: 3.414213562373095,  # equals float(2 + sqrt(2))
    2: 2.481810930866778,
    6: 1.7584842365988318,
    10: 1.5822241971748883,
    100: 1.235282489998821,
    1000: 1.1267084604298927,
    10000: 1.0793354161094204,
}

# Frozen 60-digit evaluation of the gap of phi(n) = sqrt(n) (1 - n/1000),
# n <= 999, against the improved weight.
STRUCTURED_CUTOFF_GAP = 0.4999986377030055

# Frozen exact mismatch of the pair (sqrt, classical weight): the residual
# is attained at n = 1 where it equals (2 - sqrt(2)) - 1/4.
RESIDUAL_SQRT_VS_CLASSICAL = 0.33578643762690497

# Frozen exact gaps of the partial-sum formulation, cutoff edge included:
# a = delta_1 gives 2 - 1/4 = 7/4; a = ones(100) gives 10100 - 25.
CLASSICAL_GAP_DELTA1 = 1.75
CLASSICAL_GAP_ONES100 = 10075.0


def mp_improved_weight(n: int, dps: int = 50) -> mpmath.mpf:
    """Literal 2 - sqrt(1 + 1/n) - sqrt(1 - 1/n) at dps decimal digits."""
    with mpmath.workdps(dps):
        x = 1 / mpmath.mpf(n)
        return 2 - mpmath.sqrt(1 + x) - mpmath.sqrt(1 - x)


def series_coefficient_reference(k: int) -> Fraction:
    """Coefficient of x^(2k) in -(sqrt(1+x) + sqrt(1-x) - 2), exactly.

    Direct generalized-binomial product: the x^(2k) Taylor coefficient of
    sqrt(1 + x) is C(1/2, 2k), odd orders cancel in the symmetric sum, so
    the series coefficient is -2 C(1/2, 2k).
    """
    c = Fraction(1)
    for j in range(2 * k):
        c *= Fraction(1 - 2 * j, 2)
    c /= math.factorial(2 * k)
    return -2 * c


def _charpoly_coefficients(w, dps: int):
    """Characteristic polynomial of W^(-1/2) A W^(-1/2), low-to-high."""
    n = len(w)
    wm = [mpmath.mpf(float(x)) for x in w]
    d = [2 / x for x in wm]
    e2 = [1 / (wm[i] * wm[i + 1]) for i in range(n - 1)]
    # p_k(lam) = (d_k - lam) p_{k-1}(lam) - e2_{k-1} p_{k-2}(lam)
    prev = [mpmath.mpf(1)]
    cur = [d[0], mpmath.mpf(-1)]
    for k in range(1, n):
        shifted = [mpmath.mpf(0)] + cur
        scaled = [d[k] * c for c in cur] + [mpmath.mpf(0)]
        nxt = [scaled[i] - shifted[i] for i in range(len(shifted))]
        for i in range(len(prev)):
            nxt[i] -= e2[k - 1] * prev[i]
        prev, cur = cur, nxt
    return cur


def min_eigenvalue_charpoly(w, dps: int = 60) -> float:
    """Smallest pencil eigenvalue via characteristic polynomial roots."""
    with mpmath.workdps(dps):
        coeffs = _charpoly_coefficients(w, dps)
        roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=80)
        return float(min(mpmath.re(r) for r in roots))


def min_eigenvalue_scipy(w) -> float:
    """Smallest pencil eigenvalue via scipy's tridiagonal solver."""
    from scipy.linalg import eigh_tridiagonal

    w = np.asarray(w, dtype=np.float64)
    d = 2.0 / w
    if w.size == 1:
        return float(d[0])
    e = -1.0 / np.sqrt(w[:-1] * w[1:])
    vals = eigh_tridiagonal(d, e, select="i", select_range=(0, 0))[0]
    return float(vals[0])


def mp_improved_weight_vector(n_max: int, dps: int = 50):
    """Float64 roundings of the literal weight formula for n = 1..n_max."""
    return np.array([float(mp_improved_weight(n, dps)) for n in range(1, n_max + 1)])
