"""Hardy weights on the integer half-line.

The improved weight

    w(n) = 2 - sqrt(1 + 1/n) - sqrt(1 - 1/n),    n >= 1,

strictly dominates the classical weight 1/(2n)^2 at every index while the
energy inequality  sum (phi(n) - phi(n-1))^2 >= sum w(n) phi(n)^2  still
holds for all finitely supported phi with phi(0) = 0.  It is generated by
the positive solution u(n) = sqrt(n): w = (Delta u)/u for the Dirichlet
Laplacian on {1, 2, ...}.  For n >= 2 it has the even series expansion

    w(n) = sum_{k>=1} c_k n^(-2k),
    c_k = C(4k, 2k) / ((4k - 1) 2^(4k - 1)) = 1/4, 5/64, 21/512, ...

with exact rational coefficients, handled here as
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath
import numpy as np

from . import _kernels

__all__ = [
    "Weight",
    "binomial_half",
    "classical_hardy_weight",
    "classical_weight",
    "ground_state",
    "ground_state_weight",
    "improved_weight",
    "improved_weight_closed",
    "improved_weight_series",
    "improved_weight_series_exact",
    "series_coefficient",
    "tabulated_weight",
    "unit_weight",
    "weight_from_positive_solution",
]


def _require_at_least(value: int, lo: int, name: str) -> None:
    if value < lo:
        raise ValueError(f"{name} must be >= {lo}, got {value}")


def classical_hardy_weight(n: int) -> Fraction:
    """Classical Hardy weight 1/(2n)^2 as an exact rational."""
    _require_at_least(n, 1, "n")
    return Fraction(1, 4 * n * n)


@lru_cache(maxsize=None)
def series_coefficient(k: int) -> Fraction:
    """Exact coefficient of n^(-2k) in the even series of the improved weight."""
    _require_at_least(k, 1, "k")
    return Fraction(math.comb(4 * k, 2 * k), (4 * k - 1) * (1 << (4 * k - 1)))


@lru_cache(maxsize=None)
def binomial_half(k: int) -> Fraction:
    """Generalized binomial coefficient C(1/2, k) as an exact rational."""
    _require_at_least(k, 0, "k")
    prod = Fraction(1)
    for j in range(k):
        prod *= Fraction(1 - 2 * j, 2)
    return prod / math.factorial(k)


@lru_cache(maxsize=None)
def _coefficient_float(k: int) -> float:
    return float(series_coefficient(k))


def improved_weight_closed(n: int, digits: int | None = None):
    """Improved Hardy weight w(n) = 2 - sqrt(1 + 1/n) - sqrt(1 - 1/n).

    The float64 path evaluates the algebraically identical cancellation-free
    form used by the kernels, so the result keeps full relative accuracy up
    to very large n.  With ``digits`` set, the literal difference is instead
    evaluated by mpmath at that many decimal digits and returned as an mpf;
    that path serves as an independent high-precision cross-check.
    """
    _require_at_least(n, 1, "n")
    if digits is None:
        return float(_kernels.improved_weight_range(n, 1)[0])
    _require_at_least(digits, 1, "digits")
    with mpmath.workdps(digits):
        x = 1 / mpmath.mpf(n)
        return 2 - mpmath.sqrt(1 + x) - mpmath.sqrt(1 - x)


def improved_weight_series(n: int, terms: int) -> float:
    """Truncated even series sum_{k<=terms} c_k n^(-2k); requires n >= 2.

    Partial sums are accumulated left to right over positive terms, so the
    value is nondecreasing in ``terms`` even in floating point.
    """
    _require_at_least(n, 2, "n")
    _require_at_least(terms, 1, "terms")
    x = 1.0 / (n * n)
    xk = 1.0
    total = 0.0
    for k in range(1, terms + 1):
        xk *= x
        total += _coefficient_float(k) * xk
    return total


def improved_weight_series_exact(n: int, terms: int) -> Fraction:
    """Exact rational partial sum of the even series at integer n >= 2."""
    _require_at_least(n, 2, "n")
    _require_at_least(terms, 1, "terms")
    x = Fraction(1, n * n)
    return sum((series_coefficient(k) * x**k for k in range(1, terms + 1)), Fraction(0))


def ground_state(n: int) -> float:
    """The positive solution sqrt(n) generating the improved weight."""
    _require_at_least(n, 0, "n")
    return math.sqrt(n)


class Weight:
    """Strictly positive function on {1, 2, ...}, pinned to 0 at index 0.

    One type serves both roles that appear in the half-line theory: Hardy
    weights in the energy inequality and ground-state/measure weights in the
    transformed operators.  ``fn`` is the scalar evaluator and may return
    exact types (e.g. Fraction); ``array_fn`` is an optional fast vectorized
    path returning float64; ``mp_fn`` is an optional mpmath evaluator used
    by the extended-precision mode.
    """

    __slots__ = ("name", "_fn", "_array_fn", "_mp_fn")

    def __init__(
        self,
        fn: Callable[[int], float],
        array_fn: Callable[[int], np.ndarray] | None = None,
        mp_fn: Callable[[int], "mpmath.mpf"] | None = None,
        name: str = "weight",
    ) -> None:
        self._fn = fn
        self._array_fn = array_fn
        self._mp_fn = mp_fn
        self.name = name

    def __call__(self, n: int):
        if n < 0:
            raise ValueError("weight indices start at 0")
        if n == 0:
            return 0
        return self._fn(n)

    def at(self, n: int, digits: int | None = None):
        """Value at n; with ``digits`` set, evaluated by mpmath at that precision."""
        if digits is None:
            return self(n)
        if n < 0:
            raise ValueError("weight indices start at 0")
        with mpmath.workdps(digits):
            if n == 0:
                return mpmath.mpf(0)
            if self._mp_fn is not None:
                return self._mp_fn(n)
            return mpmath.mpf(self._fn(n))

    def values(self, n_max: int) -> np.ndarray:
        """Vector (w(1), ..., w(n_max)) as float64."""
        _require_at_least(n_max, 1, "n_max")
        if self._array_fn is not None:
            return self._array_fn(n_max)
        return np.array([float(self._fn(n)) for n in range(1, n_max + 1)])

    def scaled(self, factor) -> "Weight":
        """The weight multiplied by a positive constant."""
        if factor <= 0:
            raise ValueError("factor must be positive")
        fn = self._fn
        array_fn = self._array_fn
        mp_fn = self._mp_fn
        return Weight(
            lambda n: factor * fn(n),
            None if array_fn is None else lambda m: float(factor) * array_fn(m),
            None if mp_fn is None else lambda n: mpmath.mpf(factor) * mp_fn(n),
            name=f"{self.name}*{factor}",
        )

    def squared(self) -> "Weight":
        """The pointwise square, e.g. the measure weight u^2 of a ground state."""
        fn = self._fn
        array_fn = self._array_fn
        mp_fn = self._mp_fn
        return Weight(
            lambda n: fn(n) ** 2,
            None if array_fn is None else lambda m: array_fn(m) ** 2,
            None if mp_fn is None else lambda n: mp_fn(n) ** 2,
            name=f"{self.name}^2",
        )

    def __repr__(self) -> str:
        return f"Weight({self.name!r})"


def tabulated_weight(
    values, name: str = "tabulated", require_positive: bool = True
) -> Weight:
    """Weight backed by an explicit value table for the indices 1..len(values).

    Evaluation beyond the table raises IndexError.  ``require_positive`` may
    be dropped for derived tables such as (Delta u)/u of a generic positive
    u, which are legitimate inputs to the transform identities but need not
    be positive themselves.
    """
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] == 0:
        raise ValueError("values must be a non-empty one-dimensional array")
    if require_positive and not np.all(arr > 0):
        raise ValueError("tabulated weight values must be strictly positive")
    size = arr.shape[0]

    def fn(n: int) -> float:
        if n > size:
            raise IndexError(f"tabulated weight defined only up to index {size}")
        return float(arr[n - 1])

    def array_fn(m: int) -> np.ndarray:
        if m > size:
            raise IndexError(f"tabulated weight defined only up to index {size}")
        return arr[:m].copy()

    return Weight(fn, array_fn, name=name)


def _improved_scalar(n: int) -> float:
    return float(_kernels.improved_weight_range(n, 1)[0])


def _improved_mp(n: int):
    x = 1 / mpmath.mpf(n)
    return 2 - mpmath.sqrt(1 + x) - mpmath.sqrt(1 - x)


improved_weight = Weight(
    _improved_scalar,
    lambda m: _kernels.improved_weight_range(1, m),
    _improved_mp,
    name="improved",
)

classical_weight = Weight(
    lambda n: 1.0 / (4 * n * n),
    lambda m: 0.25 / np.arange(1.0, m + 1) ** 2,
    lambda n: 1 / (4 * mpmath.mpf(n) ** 2),
    name="classical",
)

ground_state_weight = Weight(
    math.sqrt,
    lambda m: np.sqrt(np.arange(1.0, m + 1)),
    mpmath.sqrt,
    name="sqrt",
)

unit_weight = Weight(
    lambda n: 1,
    lambda m: np.ones(m),
    lambda n: mpmath.mpf(1),
    name="unit",
)


def weight_from_positive_solution(u: Weight, n: int, digits: int | None = None):
    """Rayleigh quotient (Delta u)(n) / u(n) of the Dirichlet Laplacian.

    With u(0) = 0 wired in, this is (2 u(n) - u(n-1) - u(n+1)) / u(n).  For
    u = sqrt it reproduces the improved weight; a generic positive u may
    yield negative values, which the caller must judge.  The float path
    inherits the cancellation of the stencil, so near-linear u loses
    relative accuracy as n grows; ``digits`` switches to mpmath at that
    many decimal digits for an accurate reference value.
    """
    _require_at_least(n, 1, "n")
    if digits is None:
        un = u(n)
        return (2 * un - u(n - 1) - u(n + 1)) / un
    with mpmath.workdps(digits):
        un = u.at(n, digits)
        return (2 * un - u.at(n - 1, digits) - u.at(n + 1, digits)) / un
