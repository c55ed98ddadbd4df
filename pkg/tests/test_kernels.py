"""Backend equivalence: the compiled kernels against the pure-Python twins."""

import numpy as np
import pytest

import hardyweight._kernels as kernels
from hardyweight._kernels import pyfallback

compiled = pytest.importorskip("hardyweight._kernels._speedups")


def test_backend_selected():
    assert kernels.BACKEND in {"compiled", "python"}


def test_improved_weight_range_agrees():
    a = pyfallback.improved_weight_range(1, 10_000)
    b = compiled.improved_weight_range(1, 10_000)
    assert np.allclose(a, b, rtol=5e-16, atol=0)
    c = pyfallback.improved_weight_range(999_990, 20)
    d = compiled.improved_weight_range(999_990, 20)
    assert np.allclose(c, d, rtol=5e-16, atol=0)


def test_gap_components_agree():
    rng = np.random.default_rng(41)
    for _ in range(30):
        n = int(rng.integers(1, 2_000))
        phi = rng.uniform(-1, 1, n)
        w = rng.uniform(0.01, 1.0, n)
        ea, ma = pyfallback.gap_components(phi, w)
        eb, mb = compiled.gap_components(phi, w)
        assert ea == pytest.approx(eb, rel=1e-12)
        assert ma == pytest.approx(mb, rel=1e-12)


def test_gap_components_length_mismatch():
    for impl in (pyfallback, compiled):
        with pytest.raises(ValueError):
            impl.gap_components([1.0, 2.0], [1.0])


def test_stencil_residual_max_agrees():
    rng = np.random.default_rng(42)
    for _ in range(20):
        n = int(rng.integers(1, 3_000))
        u = np.concatenate(([0.0], rng.uniform(0.5, 2.0, n + 1)))
        w = rng.uniform(-1.0, 1.0, n)
        a = pyfallback.stencil_residual_max(u, w)
        b = compiled.stencil_residual_max(u, w)
        assert a == pytest.approx(b, rel=1e-12)


def test_stencil_residual_shape_mismatch():
    for impl in (pyfallback, compiled):
        with pytest.raises(ValueError):
            impl.stencil_residual_max([0.0, 1.0], [1.0, 1.0])


def test_sturm_count_identical():
    rng = np.random.default_rng(43)
    for _ in range(30):
        n = int(rng.integers(1, 200))
        w = rng.uniform(0.05, 4.0, n)
        d = 2.0 / w
        e2 = 1.0 / (w[:-1] * w[1:])
        for x in rng.uniform(0.0, 10.0, 5):
            assert pyfallback.sturm_count_below(d, e2, float(x)) == compiled.sturm_count_below(
                d, e2, float(x)
            )


def test_tridiag_smallest_eigenvalue_identical_path():
    # Identical counts imply identical bisection iterates, so the two
    # backends return the same float, not merely close ones.
    rng = np.random.default_rng(44)
    for _ in range(20):
        n = int(rng.integers(1, 300))
        w = rng.uniform(0.05, 4.0, n)
        d = 2.0 / w
        e2 = 1.0 / (w[:-1] * w[1:])
        hi = float(2.0 * np.max(1.0 / w) + 1.0)
        a = pyfallback.tridiag_smallest_eigenvalue(d, e2, 0.0, hi, 1e-10)
        b = compiled.tridiag_smallest_eigenvalue(d, e2, 0.0, hi, 1e-10)
        assert a == b


def test_pure_python_override():
    import os
    import subprocess
    import sys

    code = "import hardyweight; print(hardyweight.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env=dict(os.environ, HARDYWEIGHT_PURE_PYTHON="1"),
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
