"""Numerical verification battery for the improved Hardy inequality.

Every check here is a deterministic function of a master seed and the
battery configuration: trial sequences derive per-trial child seeds, so a
re-run reproduces the report byte for byte.  The battery combines random
energy-gap trials, operator-identity defects on random (u, phi) pairs,
cross-checks of the two classical-inequality formulations, the ground-state
eigenequation residual, and a scan of smallest generalized eigenvalues of
the truncated energy pencil.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import mpmath
import numpy as np

from . import _kernels
from .eigen import TruncatedOperatorPair, min_generalized_eigenvalue
from .operators import (
    apply_dirichlet_laplacian,
    apply_weighted_laplacian,
    energy,
    gst_defect,
    unitarity_defect,
    weighted_form,
    weighted_inner,
)
from .sequences import CompactSequence
from .weights import (
    Weight,
    classical_weight,
    ground_state_weight,
    improved_weight,
    tabulated_weight,
    unit_weight,
)

__all__ = [
    "REPORT_SCHEMA",
    "VerificationConfig",
    "VerificationReport",
    "classical_gap_from_increments",
    "ground_state_residual",
    "hardy_gap",
    "random_test_sequence",
    "run_verification",
]

REPORT_SCHEMA = "hardyweight.verification/1"

_SEED_MASK = (1 << 64) - 1
_STREAM_GAP = 1
_STREAM_IDENTITY = 2
_STREAM_SOLUTION = 3
_STREAM_EQUIVALENCE = 4


def hardy_gap(phi: CompactSequence, w: Weight) -> float:
    """Energy of phi minus its w-weighted mass, sum w(n) phi(n)^2.

    Nonnegative for every finitely supported phi whenever w satisfies the
    Hardy inequality; in float64 tiny negative rounding noise is possible.
    """
    values = np.ascontiguousarray(phi.values, dtype=np.float64)
    en, mass = _kernels.gap_components(values, w.values(phi.support_bound))
    return en - mass


def classical_gap_from_increments(a) -> float:
    """Hardy gap of the partial sums of a non-negative increment sequence.

    Builds phi(n) = a(1) + ... + a(n), truncated at the support bound of
    ``a`` (so the cutoff edge is part of the energy), and returns
    hardy_gap(phi, classical_weight).
    """
    if isinstance(a, CompactSequence):
        a = a.values
    arr = np.ascontiguousarray(a, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] == 0:
        raise ValueError("increments must be a non-empty one-dimensional array")
    if np.any(arr < 0):
        raise ValueError("increments must be non-negative")
    return hardy_gap(CompactSequence(np.cumsum(arr)), classical_weight)


def ground_state_residual(
    u: Weight, w: Weight, n_max: int, digits: int | None = None
) -> float:
    """max over 1..n_max of |(Delta u)(n) - w(n) u(n)| / u(n).

    Zero up to rounding exactly when u solves the eigenequation
    (Delta - w) u = 0.  The default path runs in float64; ``digits``
    re-evaluates the stencil by mpmath at that many decimal digits, which
    separates genuine defects from float64 cancellation in the stencil.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if digits is None:
        uv = np.concatenate(([0.0], u.values(n_max + 1)))
        return float(_kernels.stencil_residual_max(uv, w.values(n_max)))
    with mpmath.workdps(digits):
        worst = mpmath.mpf(0)
        above = u.at(1, digits)
        below = mpmath.mpf(0)
        for n in range(1, n_max + 1):
            here = above
            above = u.at(n + 1, digits)
            r = abs((2 * here - below - above) - w.at(n, digits) * here) / here
            if r > worst:
                worst = r
            below = here
        return float(worst)


def _child_seed(master: int, stream: int, index: int) -> int:
    ss = np.random.SeedSequence([int(master) & _SEED_MASK, stream, index])
    return int(ss.generate_state(1, np.uint64)[0])


def _generator(master: int, stream: int, index: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence([int(master) & _SEED_MASK, stream, index]))
    )


def random_test_sequence(
    seed: int, max_support: int, amplitude: float = 1.0
) -> CompactSequence:
    """Deterministic random test sequence: same arguments, same sequence.

    The support bound is drawn uniformly from 1..max_support and the values
    i.i.d. uniformly from [-amplitude, amplitude].
    """
    if max_support < 1:
        raise ValueError("max_support must be >= 1")
    if amplitude <= 0:
        raise ValueError("amplitude must be positive")
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence([int(seed) & _SEED_MASK, max_support]))
    )
    bound = int(rng.integers(1, max_support + 1))
    return CompactSequence(rng.uniform(-amplitude, amplitude, bound))


@dataclass(frozen=True)
class VerificationConfig:
    """Battery configuration; the report is a pure function of it."""

    seed: int = 42
    gap_trials: int = 10_000
    identity_trials: int = 1_000
    equivalence_trials: int = 1_000
    max_support: int = 1_000
    identity_max_support: int = 256
    amplitude: float = 1.0
    gap_tol: float = 1e-12
    identity_tol: float = 1e-12
    equivalence_tol: float = 1e-12
    residual_n_max: int = 100_000
    residual_tol: float = 1e-12
    eigen_sizes: tuple[int, ...] = (1, 10, 100, 1_000)
    eigen_tol: float = 1e-10
    eigen_floor_slack: float = 1e-10
    inflation: float = 0.05

    def __post_init__(self) -> None:
        for name in ("gap_trials", "identity_trials", "equivalence_trials"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        for name in ("max_support", "identity_max_support", "residual_n_max"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        for name in (
            "amplitude",
            "gap_tol",
            "identity_tol",
            "equivalence_tol",
            "residual_tol",
            "eigen_tol",
            "eigen_floor_slack",
            "inflation",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        sizes = tuple(int(s) for s in self.eigen_sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError("eigen_sizes must be a non-empty tuple of sizes >= 1")
        object.__setattr__(self, "eigen_sizes", sizes)

    def to_dict(self) -> dict:
        return {
            "seed": int(self.seed),
            "gap_trials": int(self.gap_trials),
            "identity_trials": int(self.identity_trials),
            "equivalence_trials": int(self.equivalence_trials),
            "max_support": int(self.max_support),
            "identity_max_support": int(self.identity_max_support),
            "amplitude": float(self.amplitude),
            "gap_tol": float(self.gap_tol),
            "identity_tol": float(self.identity_tol),
            "equivalence_tol": float(self.equivalence_tol),
            "residual_n_max": int(self.residual_n_max),
            "residual_tol": float(self.residual_tol),
            "eigen_sizes": [int(s) for s in self.eigen_sizes],
            "eigen_tol": float(self.eigen_tol),
            "eigen_floor_slack": float(self.eigen_floor_slack),
            "inflation": float(self.inflation),
        }


@dataclass
class VerificationReport:
    """Outcome of one battery run; serializes deterministically."""

    config: dict
    backend: str
    gap: dict
    identities: dict
    equivalence: dict
    residual: dict
    eigen: dict
    verdicts: dict
    passed: bool

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "backend": self.backend,
            "config": self.config,
            "gap": self.gap,
            "identities": self.identities,
            "equivalence": self.equivalence,
            "residual": self.residual,
            "eigen": self.eigen,
            "verdicts": self.verdicts,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _support_histogram(counts: dict[int, int], max_support: int) -> dict[str, int]:
    bins: dict[str, int] = {}
    lo = 1
    hi = 10
    while lo <= max_support:
        label = f"{lo}-{min(hi, max_support)}"
        bins[label] = 0
        lo = hi + 1
        hi *= 10
    for bound, c in counts.items():
        width = 10
        lo = 1
        while bound > min(width, max_support):
            lo = width + 1
            width *= 10
        bins[f"{lo}-{min(width, max_support)}"] += c
    return bins


def _gap_battery(config: VerificationConfig) -> tuple[dict, bool]:
    wtab = improved_weight.values(config.max_support)
    min_rel = np.inf
    worst_index = 0
    failures = 0
    counts: dict[int, int] = {}
    for i in range(config.gap_trials):
        phi = random_test_sequence(
            _child_seed(config.seed, _STREAM_GAP, i),
            config.max_support,
            config.amplitude,
        )
        bound = phi.support_bound
        counts[bound] = counts.get(bound, 0) + 1
        en, mass = _kernels.gap_components(phi.values, wtab[:bound])
        rel = (en - mass) / max(1.0, en)
        if rel < min_rel:
            min_rel = rel
            worst_index = i
        if rel < -config.gap_tol:
            failures += 1
    section = {
        "trials": config.gap_trials,
        "failures": failures,
        "min_relative_gap": float(min_rel),
        "worst_trial": worst_index,
        "support_histogram": _support_histogram(counts, config.max_support),
    }
    return section, failures == 0


def _random_solution_pair(
    config: VerificationConfig, index: int, bound: int
) -> tuple[Weight, Weight]:
    rng = _generator(config.seed, _STREAM_SOLUTION, index)
    uvals = rng.uniform(0.5, 2.0, bound + 2)
    uu = np.concatenate(([0.0], uvals))
    m = bound + 1
    wtab = (2.0 * uu[1 : m + 1] - uu[0:m] - uu[2 : m + 2]) / uu[1 : m + 1]
    u = tabulated_weight(uvals, name=f"random-{index}")
    w = tabulated_weight(wtab, name=f"generated-{index}", require_positive=False)
    return u, w


def _identity_battery(config: VerificationConfig) -> tuple[dict, dict]:
    tol = config.identity_tol
    maxima = {"green": 0.0, "gst": 0.0, "unitarity": 0.0, "energy_operator": 0.0}
    failures = {k: 0 for k in maxima}
    for i in range(config.identity_trials):
        phi = random_test_sequence(
            _child_seed(config.seed, _STREAM_IDENTITY, i),
            config.identity_max_support,
            config.amplitude,
        )
        if i % 2 == 0:
            u: Weight = ground_state_weight
            w: Weight = improved_weight
        else:
            u, w = _random_solution_pair(config, i, phi.support_bound)

        transformed = apply_weighted_laplacian(u, phi)
        form = float(weighted_form(u, phi))
        green = abs(float(weighted_inner(transformed, phi, u.squared())) - form)
        rel = green / max(1.0, abs(form))
        maxima["green"] = max(maxima["green"], rel)
        failures["green"] += int(rel > tol or form < 0.0)

        scale = max(1.0, float(np.max(np.abs(transformed.values))))
        rel = float(gst_defect(u, w, phi)) / scale
        maxima["gst"] = max(maxima["gst"], rel)
        failures["gst"] += int(rel > tol)

        norm2 = float(weighted_inner(phi, phi, u.squared()))
        rel = float(unitarity_defect(u, phi)) / max(1.0, norm2)
        maxima["unitarity"] = max(maxima["unitarity"], rel)
        failures["unitarity"] += int(rel > tol)

        en = float(energy(phi))
        inner = float(weighted_inner(apply_dirichlet_laplacian(phi), phi, unit_weight))
        rel = abs(en - inner) / max(1.0, en)
        maxima["energy_operator"] = max(maxima["energy_operator"], rel)
        failures["energy_operator"] += int(rel > tol)
    section = {
        "trials": config.identity_trials,
        "max_green_rel": maxima["green"],
        "max_gst_rel": maxima["gst"],
        "max_unitarity_rel": maxima["unitarity"],
        "max_energy_operator_rel": maxima["energy_operator"],
        "failures": {k: int(v) for k, v in failures.items()},
    }
    verdicts = {
        "green_formula": failures["green"] == 0,
        "gst_identity": failures["gst"] == 0,
        "unitarity": failures["unitarity"] == 0,
        "energy_operator": failures["energy_operator"] == 0,
    }
    return section, verdicts


def _equivalence_battery(config: VerificationConfig) -> tuple[dict, bool]:
    max_rel = 0.0
    min_gap = np.inf
    failures = 0
    for i in range(config.equivalence_trials):
        seq = random_test_sequence(
            _child_seed(config.seed, _STREAM_EQUIVALENCE, i),
            config.max_support,
            config.amplitude,
        )
        incr = np.abs(seq.values)
        gap_op = classical_gap_from_increments(incr)
        phi = np.cumsum(incr)
        n = np.arange(1.0, phi.shape[0] + 1)
        independent = (
            phi[0] ** 2
            + float(np.sum((phi[1:] - phi[:-1]) ** 2))
            + phi[-1] ** 2
            - float(np.sum(phi * phi * (0.25 / (n * n))))
        )
        rel = abs(gap_op - independent) / max(1.0, abs(independent))
        max_rel = max(max_rel, rel)
        min_gap = min(min_gap, gap_op)
        if rel > config.equivalence_tol or gap_op < 0:
            failures += 1
    section = {
        "trials": config.equivalence_trials,
        "failures": failures,
        "max_mismatch_rel": float(max_rel),
        "min_gap": float(min_gap),
    }
    return section, failures == 0


def _eigen_battery(config: VerificationConfig) -> tuple[dict, bool, bool]:
    lam = [
        min_generalized_eigenvalue(
            TruncatedOperatorPair.from_weight(improved_weight, size), config.eigen_tol
        )
        for size in config.eigen_sizes
    ]
    inflated_weight = improved_weight.scaled(1.0 + config.inflation)
    lam_inflated = [
        min_generalized_eigenvalue(
            TruncatedOperatorPair.from_weight(inflated_weight, size), config.eigen_tol
        )
        for size in config.eigen_sizes
    ]
    floor_ok = all(v >= 1.0 - config.eigen_floor_slack for v in lam)
    monotone_ok = all(
        lam[i + 1] <= lam[i] + 2.0 * config.eigen_tol for i in range(len(lam) - 1)
    )
    first_below_one = None
    for size, v in zip(config.eigen_sizes, lam_inflated):
        if v < 1.0:
            first_below_one = int(size)
            break
    section = {
        "sizes": [int(s) for s in config.eigen_sizes],
        "tol": float(config.eigen_tol),
        "lambda_min": [float(v) for v in lam],
        "inflated": {
            "epsilon": float(config.inflation),
            "lambda_min": [float(v) for v in lam_inflated],
            "first_below_one": first_below_one,
            "note": "informational; the floor verdict applies to the unscaled weight only",
        },
    }
    return section, floor_ok, monotone_ok


def run_verification(config: VerificationConfig | None = None) -> VerificationReport:
    """Run the configured battery and collect a deterministic report."""
    if config is None:
        config = VerificationConfig()

    gap_section, gap_ok = _gap_battery(config)
    identity_section, identity_verdicts = _identity_battery(config)
    equivalence_section, equivalence_ok = _equivalence_battery(config)

    residual = ground_state_residual(
        ground_state_weight, improved_weight, config.residual_n_max
    )
    residual_section = {
        "n_max": int(config.residual_n_max),
        "max_relative_residual": float(residual),
    }

    eigen_section, floor_ok, monotone_ok = _eigen_battery(config)

    verdicts = {
        "hardy_gap_nonnegative": gap_ok,
        "green_formula": identity_verdicts["green_formula"],
        "gst_identity": identity_verdicts["gst_identity"],
        "unitarity": identity_verdicts["unitarity"],
        "energy_operator": identity_verdicts["energy_operator"],
        "formulation_equivalence": equivalence_ok,
        "ground_state_residual": residual <= config.residual_tol,
        "eigenvalue_floor": floor_ok,
        "eigenvalue_monotone": monotone_ok,
    }
    return VerificationReport(
        config=config.to_dict(),
        backend=_kernels.BACKEND,
        gap=gap_section,
        identities=identity_section,
        equivalence=equivalence_section,
        residual=residual_section,
        eigen=eigen_section,
        verdicts=verdicts,
        passed=all(verdicts.values()),
    )
