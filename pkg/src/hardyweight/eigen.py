"""Truncated generalized eigenproblem for the Hardy energy pencil.

Restricting the energy form to sequences supported in 1..N gives the N x N
Dirichlet path Laplacian A = tridiag(-1, 2, -1); a positive weight w gives
the diagonal matrix W.  The smallest lambda with A v = lambda W v equals
the minimum of energy(phi) / sum w(n) phi(n)^2 over that subspace, so the
Hardy inequality for w is equivalent to lambda_min >= 1 for every N.  The
pencil is solved through the symmetric congruence W^(-1/2) A W^(-1/2) by
bisection on the Sturm negative-pivot count, which needs only the diagonal
and the squared off-diagonal of the transformed tridiagonal matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .weights import Weight

__all__ = ["TruncatedOperatorPair", "min_generalized_eigenvalue"]


@dataclass(frozen=True)
class TruncatedOperatorPair:
    """Dirichlet path Laplacian of order N paired with a positive diagonal."""

    weight_diagonal: np.ndarray

    def __post_init__(self) -> None:
        w = np.ascontiguousarray(self.weight_diagonal, dtype=np.float64)
        if w.ndim != 1 or w.shape[0] == 0:
            raise ValueError("weight diagonal must be a non-empty vector")
        if not np.all(w > 0):
            raise ValueError("weight diagonal must be strictly positive")
        object.__setattr__(self, "weight_diagonal", w)

    @property
    def size(self) -> int:
        return self.weight_diagonal.shape[0]

    @property
    def laplacian_diagonal(self) -> np.ndarray:
        return np.full(self.size, 2.0)

    @property
    def laplacian_offdiagonal(self) -> np.ndarray:
        return np.full(self.size - 1, -1.0)

    @classmethod
    def from_weight(cls, w: Weight, size: int) -> "TruncatedOperatorPair":
        if size < 1:
            raise ValueError("size must be >= 1")
        return cls(w.values(size))

    def symmetrized(self) -> tuple[np.ndarray, np.ndarray]:
        """Diagonal and squared off-diagonal of W^(-1/2) A W^(-1/2)."""
        w = self.weight_diagonal
        return 2.0 / w, 1.0 / (w[:-1] * w[1:])


def min_generalized_eigenvalue(pair: TruncatedOperatorPair, tol: float = 1e-10) -> float:
    """Smallest lambda with A v = lambda W v, to absolute accuracy tol.

    Bisects on [0, 2 max(1/w) + 1]: the pencil is positive definite, so
    lambda_min > 0, and testing the Rayleigh quotient at basis vectors shows
    lambda_min <= min_n 2/w(n), which the upper endpoint exceeds.

    On top of ``tol`` the result carries the usual float64 floor of order
    eps * max_n 2/w(n): for rapidly decaying weights the symmetrized
    diagonal grows like 2/w, and the Sturm pivots cannot resolve shifts
    below one ulp of those entries.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    d, e2 = pair.symmetrized()
    hi = 2.0 * float(np.max(1.0 / pair.weight_diagonal)) + 1.0
    return float(_kernels.tridiag_smallest_eigenvalue(d, e2, 0.0, hi, tol))
