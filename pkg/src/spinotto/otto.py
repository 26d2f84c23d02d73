"""Average energetics of the four-stroke quasi-static Otto cycle.

The hot and cold isochores thermalise the medium at (B1, T1) and (B2, T2)
with the coupling J held fixed; the adiabatic strokes only rescale the field.
All averaged quantities reduce to the two spin-dependent factors

    X = (1/2) sum_k m1_k (P_k - P'_k),    Y = sum_k m2_k (P'_k - P_k),

with P the hot-bath and P' the cold-bath occupation probabilities (the Y sum
effectively runs over the J-dependent levels only, since m2 = 0 elsewhere).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ensemble import ThermalState, thermal_state
from .exact import build_hamiltonian, thermal_density_matrix, total_sz_matrix
from .spectrum import SpinPair, Spectrum, build_spectrum

__all__ = [
    "CycleParams",
    "CycleReport",
    "xy_factors",
    "average_cycle_report",
    "classify_regime",
    "trace_consistency_check",
]


@dataclass(frozen=True)
class CycleParams:
    """Control-parameter point of one Otto cycle: fields B1 > B2 > 0,
    bath temperatures T1 >= T2 > 0 and coupling J >= 0."""

    B1: float
    B2: float
    T1: float
    T2: float
    J: float = 0.0

    def __post_init__(self):
        for name in ("B1", "B2", "T1", "T2", "J"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.B1 > self.B2 > 0:
            raise ValueError(f"need B1 > B2 > 0, got B1={self.B1}, B2={self.B2}")
        if not self.T1 >= self.T2 > 0:
            raise ValueError(f"need T1 >= T2 > 0, got T1={self.T1}, T2={self.T2}")
        if self.J < 0:
            raise ValueError(f"coupling must be non-negative, got J={self.J}")

    @property
    def theta(self) -> float:
        return self.T2 / self.T1

    def with_coupling(self, J: float) -> "CycleParams":
        return CycleParams(self.B1, self.B2, self.T1, self.T2, J)


@dataclass(frozen=True)
class CycleReport:
    """Averaged cycle energetics plus the uncoupled (J = 0) baseline evaluated
    at the same fields and temperatures.  Sign conventions: Q1 is absorbed
    from the hot bath, Q2 rejected to the cold bath, W extracted."""

    params: CycleParams
    X: float
    Y: float
    Q1: float
    Q2: float
    W: float
    eta: float | None
    dS: float
    regime: str
    v: float
    q1: float
    q2: float
    w: float
    eta0: float
    dS0: float


def xy_factors(stage1: ThermalState, stage3: ThermalState) -> tuple[float, float]:
    """Spin-dependent factors (X, Y) from the two equilibrium distributions."""
    if not stage1.same_spectrum(stage3) or stage1.J != stage3.J:
        raise ValueError("stage states must share one spectrum and one coupling")
    spec = stage1.spectrum
    dp = stage1.probabilities - stage3.probabilities
    x = 0.5 * float((spec.m1 * dp).sum())
    coupled = spec.two_m2 > 0
    y = -0.5 * float((spec.two_m2[coupled] * dp[coupled]).sum())
    return x, y


def classify_regime(Q1: float, Q2: float, W: float) -> str:
    """Sign-based operating mode of one cycle."""
    if W > 0 and Q1 > 0:
        return "engine"
    if W < 0 and Q1 < 0 and Q2 < 0:
        return "refrigerator"
    if W < 0 and Q1 > 0 and Q2 > 0:
        return "accelerator"
    if W < 0 and Q1 < 0 and Q2 > 0:
        return "heater"
    return "idle" if W == 0 else "mixed"


def _entropy_production(X: float, Y: float, p: CycleParams) -> float:
    return 2.0 * X * (p.B2 / p.T2 - p.B1 / p.T1) + 8.0 * p.J * Y * (1.0 / p.T2 - 1.0 / p.T1)


def average_cycle_report(pair: SpinPair, params: CycleParams,
                         spectrum: Spectrum | None = None) -> CycleReport:
    """Full energetics of the average cycle.

    Q1 = 2 B1 X + 8 J Y and W = 2 (B1 - B2) X; Q2 is taken as Q1 - W so the
    first law holds bit-for-bit.  The efficiency is the raw ratio 1 - Q2/Q1
    whenever Q1 != 0 (None otherwise); the regime tag records whether the
    point actually operates as an engine.
    """
    spec = spectrum if spectrum is not None else build_spectrum(pair)
    if spec.pair != pair:
        raise ValueError("spectrum does not belong to the given pair")
    stage1 = thermal_state(spec, params.B1, params.T1, params.J)
    stage3 = thermal_state(spec, params.B2, params.T2, params.J)
    X, Y = xy_factors(stage1, stage3)
    Q1 = 2.0 * params.B1 * X + 8.0 * params.J * Y
    W = 2.0 * (params.B1 - params.B2) * X
    Q2 = Q1 - W
    eta = None if Q1 == 0 else 1.0 - Q2 / Q1
    dS = _entropy_production(X, Y, params)

    # uncoupled baseline at the same fields and temperatures
    v, _ = xy_factors(thermal_state(spec, params.B1, params.T1, 0.0),
                      thermal_state(spec, params.B2, params.T2, 0.0))
    q1 = 2.0 * params.B1 * v
    w = 2.0 * (params.B1 - params.B2) * v
    q2 = q1 - w
    dS0 = 2.0 * v * (params.B2 / params.T2 - params.B1 / params.T1)
    eta0 = 1.0 - params.B2 / params.B1

    return CycleReport(params, X, Y, Q1, Q2, W, eta, dS,
                       classify_regime(Q1, Q2, W), v, q1, q2, w, eta0, dS0)


def trace_consistency_check(pair: SpinPair, params: CycleParams, tol: float = 1e-9) -> bool:
    """Cross-check W = 2(B1-B2) Tr[h0 (rho1 - rho2)] against the m1-weighted
    probability sum, using the dense-matrix route throughout."""
    spec = build_spectrum(pair)
    stage1 = thermal_state(spec, params.B1, params.T1, params.J)
    stage3 = thermal_state(spec, params.B2, params.T2, params.J)
    X, _ = xy_factors(stage1, stage3)
    lhs = 2.0 * (params.B1 - params.B2) * X

    h0 = total_sz_matrix(pair)
    rho1 = thermal_density_matrix(build_hamiltonian(pair, params.B1, params.J), params.T1)
    rho2 = thermal_density_matrix(build_hamiltonian(pair, params.B2, params.J), params.T2)
    rhs = 2.0 * (params.B1 - params.B2) * float(np.trace(h0 @ (rho1 - rho2)))
    return abs(lhs - rhs) <= tol * max(1.0, abs(lhs))
