"""Seeded verification harness: spectrum-vs-diagonalization comparisons,
closed-form partition cross-checks, two-level efficiency-ceiling
equivalence, and the sign-lemma sweep.  Designed so identical seeds give
byte-identical reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import coc, exact, regime
from .ensemble import closed_form_partition_function, log_partition_function
from .otto import CycleParams
from .spectrum import SpinPair, build_spectrum

__all__ = [
    "VerificationConfig",
    "VerificationReport",
    "oracle_pairs",
    "run_verification",
    "ACCEPTANCE_PAIRS",
]

SPECTRUM_TOL = 1e-9
PARTITION_TOL = 1e-9
ETA_MAX_TOL = 1e-12

# Pairs exercised by the ceiling-equivalence check: (1/2,1), (1/2,3/2),
# (1/2,2), (1,5/2), (3/2,2) in doubled-integer form.
ACCEPTANCE_PAIRS = (SpinPair(1, 2), SpinPair(1, 3), SpinPair(1, 4),
                    SpinPair(2, 5), SpinPair(3, 4))


def oracle_pairs(max_levels: int = 54) -> tuple[SpinPair, ...]:
    """Every canonical pair whose level count stays within max_levels."""
    pairs = []
    a = 1
    while (a + 1) * (a + 1) <= max_levels:
        b = a
        while (a + 1) * (b + 1) <= max_levels:
            pairs.append(SpinPair(a, b))
            b += 1
        a += 1
    return tuple(pairs)


@dataclass(frozen=True)
class VerificationConfig:
    seed: int = 20260
    lemma_points: int = 10000
    oracle_points: int = 20          # random (B, T, J) draws per pair
    oracle_max_levels: int = 54
    ceiling_params: CycleParams = CycleParams(4.0, 3.0, 4.0, 2.0)
    ceiling_j_fractions: tuple[float, ...] = (0.15, 0.35, 0.55, 0.75, 0.95)


@dataclass
class VerificationReport:
    config: VerificationConfig
    spectrum_points: int = 0
    spectrum_violations: int = 0
    spectrum_worst: float = 0.0
    partition_points: int = 0
    partition_violations: int = 0
    partition_worst: float = 0.0
    ceiling_points: int = 0
    ceiling_violations: int = 0
    ceiling_worst: float = 0.0
    witness_violations: int = 0
    lemma: regime.LemmaReport | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        lemma_ok = self.lemma is not None and self.lemma.ok
        return (lemma_ok and not self.failures
                and self.spectrum_violations == 0
                and self.partition_violations == 0
                and self.ceiling_violations == 0
                and self.witness_violations == 0)

    def summary_rows(self) -> list[tuple[str, int, int]]:
        rows = [
            ("spectrum_vs_diagonalization", self.spectrum_points, self.spectrum_violations),
            ("partition_closed_form", self.partition_points, self.partition_violations),
            ("two_level_ceiling_equivalence", self.ceiling_points, self.ceiling_violations),
            ("two_level_ceiling_witness", self.ceiling_points, self.witness_violations),
        ]
        if self.lemma is not None:
            rows.extend(self.lemma.summary_rows())
        return rows


def _check_oracle(report: VerificationReport, rng: np.random.Generator) -> None:
    cfg = report.config
    for pair in oracle_pairs(cfg.oracle_max_levels):
        spec = build_spectrum(pair)
        for _ in range(cfg.oracle_points):
            B = rng.uniform(0.05, 6.0)
            J = rng.uniform(0.0, 0.6)
            T = rng.uniform(0.5, 5.0)
            dev = exact.compare_with_analytic(pair, B, J)
            report.spectrum_points += 1
            report.spectrum_worst = max(report.spectrum_worst, dev)
            if dev > SPECTRUM_TOL:
                report.spectrum_violations += 1
                report.failures.append(
                    f"spectrum deviation {dev:.3e} at pair={pair} B={B!r} J={J!r}")
            # dual route for Z: stabilised level sum vs band closed form
            lz = log_partition_function(spec, B, T, J)
            rel = abs(math.log(closed_form_partition_function(pair, B, T, J)) - lz)
            report.partition_points += 1
            report.partition_worst = max(report.partition_worst, rel)
            if rel > PARTITION_TOL:
                report.partition_violations += 1
                report.failures.append(
                    f"partition mismatch {rel:.3e} at pair={pair} B={B!r} T={T!r} J={J!r}")


def _check_ceiling(report: VerificationReport) -> None:
    cfg = report.config
    base = cfg.ceiling_params
    for pair in ACCEPTANCE_PAIRS:
        spec = build_spectrum(pair)
        jx = regime.coupling_bounds(pair, base).jx
        two_y_deep = pair.two_s1 * (pair.two_s2 + 1)
        for frac in cfg.ceiling_j_fractions:
            params = base.with_coupling(frac * jx)
            observed, witness = coc.max_engine_coc_efficiency(spec, params)
            closed = regime.efficiency_bounds(pair, params).eta_max
            report.ceiling_points += 1
            diff = abs(observed - closed)
            report.ceiling_worst = max(report.ceiling_worst, diff)
            if closed is None or diff > ETA_MAX_TOL:
                report.ceiling_violations += 1
                report.failures.append(
                    f"ceiling mismatch {diff:.3e} at pair={pair} J={params.J!r}")
            if not (witness.x == 2 and witness.two_y == -two_y_deep):
                report.witness_violations += 1
                report.failures.append(
                    f"unexpected ceiling witness x={witness.x} 2y={witness.two_y}"
                    f" at pair={pair} J={params.J!r}")


def run_verification(config: VerificationConfig | None = None) -> VerificationReport:
    """Run every check; the report is deterministic for a fixed config."""
    cfg = config if config is not None else VerificationConfig()
    report = VerificationReport(cfg)
    rng = np.random.default_rng(cfg.seed)
    _check_oracle(report, rng)
    _check_ceiling(report)
    report.lemma = regime.lemma_suite(
        regime.SweepConfig(points=cfg.lemma_points, seed=cfg.seed))
    return report
