"""Finitely supported test sequences on the positive integers."""

from __future__ import annotations

from typing import Callable

import numpy as np


class CompactSequence:
    """A real sequence on {1, 2, ...} vanishing beyond a known bound.

    Values are stored densely for the indices 1..support_bound; phi(0) = 0
    is the wired Dirichlet boundary and phi(n) = 0 for n > support_bound.
    Float input is stored as float64; object arrays (e.g. of
    :class:`fractions.Fraction`) are kept as-is so the operator identities
    can be checked in exact arithmetic.
    """

    __slots__ = ("values",)

    def __init__(self, values) -> None:
        arr = np.asarray(values)
        if arr.ndim != 1 or arr.shape[0] == 0:
            raise ValueError("values must be a non-empty one-dimensional array")
        if arr.dtype != object:
            arr = np.ascontiguousarray(arr, dtype=np.float64)
        self.values = arr

    @property
    def support_bound(self) -> int:
        return self.values.shape[0]

    @classmethod
    def delta(cls, n: int, bound: int | None = None) -> "CompactSequence":
        """Kronecker delta at index n >= 1, optionally padded out to bound."""
        if n < 1:
            raise ValueError("delta index must be >= 1")
        if bound is None:
            bound = n
        if bound < n:
            raise ValueError("bound must be >= n")
        values = np.zeros(bound)
        values[n - 1] = 1.0
        return cls(values)

    @classmethod
    def from_function(cls, fn: Callable[[int], float], bound: int) -> "CompactSequence":
        """Sequence with values fn(1), ..., fn(bound)."""
        if bound < 1:
            raise ValueError("bound must be >= 1")
        return cls(np.asarray([fn(n) for n in range(1, bound + 1)]))

    def __call__(self, n: int):
        if n < 0:
            raise ValueError("sequence indices start at 0")
        if n == 0 or n > self.support_bound:
            return 0
        return self.values[n - 1]

    def padded(self, upto: int) -> np.ndarray:
        """Values phi(0..upto) as one array, boundary zero included."""
        if upto < 0:
            raise ValueError("upto must be >= 0")
        m = min(self.support_bound, upto)
        if self.values.dtype == object:
            out = np.array([0] * (upto + 1), dtype=object)
        else:
            out = np.zeros(upto + 1)
        out[1 : m + 1] = self.values[:m]
        return out

    def __repr__(self) -> str:
        return f"CompactSequence(support_bound={self.support_bound})"
