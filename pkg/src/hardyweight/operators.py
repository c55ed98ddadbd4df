"""Dirichlet Laplacian, ground-state transforms, and their quadratic forms.

The half-line graph has vertex 0 wired as Dirichlet boundary: sequences
carry phi(0) = 0 and weights carry u(0) = 0, so the boundary edge (0, 1)
contributes to the plain Laplacian and energy but drops out of every
u-weighted object.  All routines evaluate by explicit summation over the
finite support and preserve the scalar type of their inputs; feeding
object arrays of :class:`fractions.Fraction` checks the identities in
exact arithmetic.
"""

from __future__ import annotations

import numpy as np

from .sequences import CompactSequence
from .weights import Weight

__all__ = [
    "apply_dirichlet_laplacian",
    "apply_weighted_laplacian",
    "energy",
    "gst_defect",
    "unitarity_defect",
    "weighted_form",
    "weighted_inner",
]


def _is_exact(*seqs: CompactSequence) -> bool:
    return any(s.values.dtype == object for s in seqs)


def _weight_padded(u: Weight, upto: int, exact: bool) -> np.ndarray:
    """u(0..upto) inclusive; exact mode keeps the evaluator's scalar type."""
    if exact:
        return np.array([u(m) for m in range(upto + 1)], dtype=object)
    return np.concatenate(([0.0], u.values(upto)))


def _weight_values(u: Weight, n_max: int, exact: bool) -> np.ndarray:
    """u(1..n_max); exact mode keeps the evaluator's scalar type."""
    if exact:
        return np.array([u(m) for m in range(1, n_max + 1)], dtype=object)
    return u.values(n_max)


def apply_dirichlet_laplacian(phi: CompactSequence) -> CompactSequence:
    """(Delta phi)(n) = 2 phi(n) - phi(n-1) - phi(n+1), with phi(0) = 0.

    The result is supported in 1..N+1 when phi is supported in 1..N.
    """
    m = phi.support_bound + 1
    p = phi.padded(m + 1)
    out = 2 * p[1 : m + 1] - p[0:m] - p[2 : m + 2]
    return CompactSequence(out)


def apply_weighted_laplacian(u: Weight, phi: CompactSequence) -> CompactSequence:
    """Ground-state transformed Laplacian

        (Delta_u phi)(n) = u(n)^(-2) sum_{m ~ n} u(n) u(m) (phi(n) - phi(m)),

    evaluated as (u(n-1)(phi(n)-phi(n-1)) + u(n+1)(phi(n)-phi(n+1))) / u(n);
    u(0) = 0 removes the boundary edge.
    """
    m = phi.support_bound + 1
    exact = _is_exact(phi)
    p = phi.padded(m + 1)
    uu = _weight_padded(u, m + 1, exact)
    centre = p[1 : m + 1]
    out = (
        uu[0:m] * (centre - p[0:m]) + uu[2 : m + 2] * (centre - p[2 : m + 2])
    ) / uu[1 : m + 1]
    return CompactSequence(out)


def energy(phi: CompactSequence):
    """Dirichlet energy sum_{n>=1} (phi(n) - phi(n-1))^2, both edges included."""
    p = phi.padded(phi.support_bound + 1)
    d = p[1:] - p[:-1]
    return np.sum(d * d)


def weighted_form(u: Weight, phi: CompactSequence):
    """Quadratic form of the transformed operator,

        h_u(phi) = (1/2) sum_{n>=1} sum_{m ~ n} u(n) u(m) (phi(n) - phi(m))^2.

    Nonnegative for every phi; the boundary edge carries weight u(0) = 0.
    """
    m = phi.support_bound + 1
    exact = _is_exact(phi)
    p = phi.padded(m + 1)
    uu = _weight_padded(u, m + 1, exact)
    centre = p[1 : m + 1]
    uc = uu[1 : m + 1]
    left = uc * uu[0:m] * (centre - p[0:m]) ** 2
    right = uc * uu[2 : m + 2] * (centre - p[2 : m + 2]) ** 2
    return (np.sum(left) + np.sum(right)) / 2


def weighted_inner(f: CompactSequence, g: CompactSequence, u: Weight):
    """Weighted inner product <f, g>_u = sum_{n>=1} f(n) g(n) u(n)."""
    m = min(f.support_bound, g.support_bound)
    exact = _is_exact(f, g)
    uv = _weight_values(u, m, exact)
    return np.sum(f.values[:m] * g.values[:m] * uv)


def gst_defect(u: Weight, w: Weight, phi: CompactSequence):
    """Sup-norm defect of the ground-state-transform identity.

    Compares u^(-1) (Delta - w) (u phi) against Delta_u phi over the
    support extension 1..N+1; the two agree identically exactly when
    (Delta - w) u = 0, so the defect is a machine-level residual for a
    genuine ground-state pair (u, w) and an honest discrepancy otherwise.
    """
    n = phi.support_bound
    exact = _is_exact(phi)
    uvals = _weight_values(u, n + 1, exact)
    wvals = _weight_values(w, n + 1, exact)
    lifted = CompactSequence(phi.values * uvals[:n])
    num = apply_dirichlet_laplacian(lifted).values
    tv = lifted.padded(n + 1)[1:]
    lhs = (num - wvals * tv) / uvals
    rhs = apply_weighted_laplacian(u, phi).values
    return np.max(np.abs(lhs - rhs))


def unitarity_defect(u: Weight, phi: CompactSequence):
    """|  ||u phi||^2  -  ||phi||^2 in the u^2-weighted space  |.

    The multiplication map phi -> u phi carries the u^2-weighted norm to the
    plain one; the two sides are evaluated by independent groupings, so in
    float64 the defect reflects rounding only.
    """
    n = phi.support_bound
    exact = _is_exact(phi)
    uv = _weight_values(u, n, exact)
    lifted = uv * phi.values
    direct = np.sum(lifted * lifted)
    via_measure = weighted_inner(phi, phi, u.squared())
    return abs(direct - via_measure)
