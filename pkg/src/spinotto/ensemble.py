"""Canonical thermal states of the working medium at given (B, T, J).

All probability work is done in log space with a single max-energy shift so
that exponents of order 2sB/T cannot overflow.  Temperatures are strictly
positive and k_B = 1 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectrum import SpinPair, Spectrum, build_spectrum

__all__ = [
    "ThermalState",
    "log_partition_function",
    "closed_form_partition_function",
    "thermal_state",
    "shannon_entropy",
]


def _check_temperature(T: float) -> None:
    if not (T > 0 and math.isfinite(T)):
        raise ValueError(f"temperature must be positive and finite, got T={T}")


def _log_weights(spectrum: Spectrum, B: float, T: float, J: float) -> np.ndarray:
    _check_temperature(T)
    return -spectrum.energies(B, J) / T


def log_partition_function(spectrum: Spectrum, B: float, T: float, J: float) -> float:
    """log Z = log sum_k exp(-E_k / T), max-shift stabilised."""
    lw = _log_weights(spectrum, B, T, J)
    shift = lw.max()
    return float(shift + np.log(np.exp(lw - shift).sum()))


def closed_form_partition_function(pair: SpinPair, B: float, T: float, J: float) -> float:
    """Band-resolved partition function: every +/-|m| band pair contributes
    2*cosh(2|m|B/T) times the sum of exp(8*m2*J/T) over the band's exchange
    coefficients m2 = s, s+(s-1), ... (the m = 0 band, when present, enters
    once).  Evaluated in linear space; intended as an independent cross-check
    of log_partition_function at moderate arguments.
    """
    _check_temperature(T)
    if B < 0 or J < 0:
        raise ValueError("B and J must be non-negative")
    two_s = pair.two_s
    z = 0.0
    for two_m in range(two_s % 2, two_s + 1, 2):
        q = (two_s - two_m) // 2
        band = 0.0
        for j in range(min(q, pair.two_s1) + 1):
            two_m2 = j * (two_s - j + 1)
            band += math.exp(4.0 * two_m2 * J / T)
        factor = 2.0 * math.cosh(two_m * B / T) if two_m > 0 else 1.0
        z += factor * band
    return z


@dataclass(frozen=True, eq=False)
class ThermalState:
    """Equilibrium occupation probabilities at one (B, T, J) point."""

    spectrum: Spectrum
    B: float
    T: float
    J: float
    probabilities: np.ndarray
    log_z: float

    @property
    def n(self) -> int:
        return self.spectrum.n

    def same_spectrum(self, other: "ThermalState") -> bool:
        return self.spectrum.pair == other.spectrum.pair


def thermal_state(spectrum: Spectrum, B: float, T: float, J: float) -> ThermalState:
    """Occupation probabilities P_k = exp(-E_k/T) / Z in canonical order."""
    lw = _log_weights(spectrum, B, T, J)
    shift = lw.max()
    w = np.exp(lw - shift)
    total = w.sum()
    p = w / total
    p.flags.writeable = False
    return ThermalState(spectrum, B, T, J, p, float(shift + math.log(total)))


def shannon_entropy(state: ThermalState | np.ndarray) -> float:
    """-sum p_k ln p_k; zero-weight entries contribute nothing."""
    p = state.probabilities if isinstance(state, ThermalState) else np.asarray(state)
    mask = p > 0
    return float(-(p[mask] * np.log(p[mask])).sum())


def stage_states(pair_or_spectrum, B1: float, T1: float, B2: float, T2: float,
                 J: float) -> tuple[ThermalState, ThermalState]:
    """Hot-bath and cold-bath equilibrium states sharing one spectrum."""
    spec = pair_or_spectrum
    if isinstance(spec, SpinPair):
        spec = build_spectrum(spec)
    return thermal_state(spec, B1, T1, J), thermal_state(spec, B2, T2, J)
