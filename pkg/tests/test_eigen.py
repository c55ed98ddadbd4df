import math

import numpy as np
import pytest

from hardyweight._kernels import sturm_count_below
from hardyweight.eigen import TruncatedOperatorPair, min_generalized_eigenvalue
from hardyweight.weights import classical_weight, improved_weight

import _oracles


class TestTruncatedOperatorPair:
    def test_matrices(self):
        pair = TruncatedOperatorPair([1.0, 2.0, 4.0])
        assert pair.size == 3
        assert np.array_equal(pair.laplacian_diagonal, [2.0, 2.0, 2.0])
        assert np.array_equal(pair.laplacian_offdiagonal, [-1.0, -1.0])
        d, e2 = pair.symmetrized()
        assert np.allclose(d, [2.0, 1.0, 0.5], rtol=1e-15)
        assert np.allclose(e2, [0.5, 0.125], rtol=1e-15)

    def test_from_weight(self):
        pair = TruncatedOperatorPair.from_weight(improved_weight, 4)
        assert np.array_equal(pair.weight_diagonal, improved_weight.values(4))

    def test_validation(self):
        with pytest.raises(ValueError):
            TruncatedOperatorPair([])
        with pytest.raises(ValueError):
            TruncatedOperatorPair([1.0, 0.0])
        with pytest.raises(ValueError):
            TruncatedOperatorPair.from_weight(improved_weight, 0)


class TestSturmCount:
    def test_unit_weight_path_laplacian(self):
        # Eigenvalues of the 3x3 Dirichlet path Laplacian: 2 - sqrt(2), 2,
        # 2 + sqrt(2).
        d = [2.0, 2.0, 2.0]
        e2 = [1.0, 1.0]
        assert sturm_count_below(d, e2, 0.5) == 0
        assert sturm_count_below(d, e2, 1.0) == 1
        assert sturm_count_below(d, e2, 3.0) == 2
        assert sturm_count_below(d, e2, 4.0) == 3

    def test_counts_match_scipy_spectrum(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            n = int(rng.integers(1, 8))
            w = rng.uniform(0.1, 3.0, n)
            pair = TruncatedOperatorPair(w)
            d, e2 = pair.symmetrized()
            from scipy.linalg import eigvalsh_tridiagonal

            e = -np.sqrt(e2) if n > 1 else np.zeros(0)
            spectrum = eigvalsh_tridiagonal(d, e)
            for x in rng.uniform(0.0, float(d.max()) + 1.0, 5):
                assert sturm_count_below(d, e2, float(x)) == int(np.sum(spectrum < x))


class TestMinGeneralizedEigenvalue:
    def test_size_one_improved(self):
        pair = TruncatedOperatorPair.from_weight(improved_weight, 1)
        lam = min_generalized_eigenvalue(pair, tol=1e-13)
        assert math.isclose(lam, 2 + math.sqrt(2), rel_tol=0, abs_tol=1e-12)

    def test_size_two_frozen(self):
        pair = TruncatedOperatorPair.from_weight(improved_weight, 2)
        lam = min_generalized_eigenvalue(pair, tol=1e-12)
        assert math.isclose(lam, _oracles.LAMBDA_MIN_IMPROVED[2], rel_tol=0, abs_tol=1e-11)

    @pytest.mark.parametrize("size", [1, 2, 3, 4, 5, 6])
    def test_improved_matches_charpoly_oracle(self, size):
        pair = TruncatedOperatorPair.from_weight(improved_weight, size)
        lam = min_generalized_eigenvalue(pair, tol=1e-12)
        oracle = _oracles.min_eigenvalue_charpoly(improved_weight.values(size))
        assert abs(lam - oracle) <= 1e-10

    def test_random_weights_match_both_oracles(self):
        rng = np.random.default_rng(22)
        for _ in range(20):
            n = int(rng.integers(1, 7))
            w = rng.uniform(0.1, 3.0, n)
            lam = min_generalized_eigenvalue(TruncatedOperatorPair(w), tol=1e-12)
            assert abs(lam - _oracles.min_eigenvalue_charpoly(w)) <= 1e-10
            assert abs(lam - _oracles.min_eigenvalue_scipy(w)) <= 1e-10

    def test_larger_sizes_match_scipy(self):
        for size in (10, 100, 1000):
            pair = TruncatedOperatorPair.from_weight(improved_weight, size)
            lam = min_generalized_eigenvalue(pair, tol=1e-10)
            assert abs(lam - _oracles.LAMBDA_MIN_IMPROVED[size]) <= 2e-10

    def test_floor_and_monotonicity(self):
        values = []
        for size in (1, 10, 100, 1000):
            pair = TruncatedOperatorPair.from_weight(improved_weight, size)
            values.append(min_generalized_eigenvalue(pair, tol=1e-10))
        assert all(v >= 1.0 - 1e-10 for v in values)
        assert all(b <= a + 2e-10 for a, b in zip(values, values[1:]))

    def test_rayleigh_upper_bound(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            w = rng.uniform(0.05, 5.0, int(rng.integers(1, 30)))
            lam = min_generalized_eigenvalue(TruncatedOperatorPair(w), tol=1e-10)
            assert lam <= float(np.min(2.0 / w)) + 1e-9

    def test_classical_weight_floor(self):
        # The classical weight saturates the inequality with constant 1 as
        # well, so its truncations also stay above the floor.
        for size in (1, 10, 100):
            pair = TruncatedOperatorPair.from_weight(classical_weight, size)
            assert min_generalized_eigenvalue(pair, tol=1e-10) >= 1.0 - 1e-10

    def test_tol_validation(self):
        pair = TruncatedOperatorPair([1.0])
        with pytest.raises(ValueError):
            min_generalized_eigenvalue(pair, tol=0.0)
