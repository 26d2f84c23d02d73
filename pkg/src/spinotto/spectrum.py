"""Exact energy spectrum of two Heisenberg-coupled spins in a z-field.

Every eigenvalue is written as E = m1*B - 8*m2*J, where m1 = 2m runs over
the doubled magnetic numbers and m2 >= 0 carries the exchange shift of the
multiplet.  Spins, magnetic numbers and exchange coefficients are stored as
doubled integers so the combinatorial layer is exact; floating point enters
only when an energy is evaluated at concrete (B, J).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "SpinPair",
    "EnergyLevel",
    "Spectrum",
    "DegeneracyProfile",
    "parse_spin",
    "spin_label",
    "build_spectrum",
    "energy_of_level",
    "degeneracy_profile",
    "energy_order",
    "check_no_level_crossing",
]

# Relative tolerance used to call two level energies degenerate when sorting.
ENERGY_TIE_EPS = 1e-12


def parse_spin(text: str | float) -> int:
    """Parse a spin magnitude ("1/2", "1.5", "2") into its doubled integer."""
    try:
        doubled = 2 * Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a spin magnitude: {text!r}") from exc
    if doubled.denominator != 1:
        raise ValueError(f"spin must be a half-integer: {text!r}")
    two_s = int(doubled)
    if two_s < 1:
        raise ValueError(f"spin must be at least 1/2: {text!r}")
    return two_s


def spin_label(two_s: int) -> str:
    """Exact text form of a doubled spin, e.g. 3 -> "3/2", 4 -> "2"."""
    return str(two_s // 2) if two_s % 2 == 0 else f"{two_s}/2"


@dataclass(frozen=True)
class SpinPair:
    """Two spin magnitudes (s1, s2) stored as doubled integers, s1 <= s2."""

    two_s1: int
    two_s2: int

    def __post_init__(self):
        if self.two_s1 < 1 or self.two_s2 < 1:
            raise ValueError("each spin magnitude must be at least 1/2")
        if self.two_s1 > self.two_s2:
            a, b = self.two_s2, self.two_s1
            object.__setattr__(self, "two_s1", a)
            object.__setattr__(self, "two_s2", b)

    @classmethod
    def from_labels(cls, s1: str | float, s2: str | float) -> "SpinPair":
        return cls(parse_spin(s1), parse_spin(s2))

    @property
    def s1(self) -> float:
        return self.two_s1 / 2

    @property
    def s2(self) -> float:
        return self.two_s2 / 2

    @property
    def two_s(self) -> int:
        """Doubled total spin 2s = 2(s1+s2)."""
        return self.two_s1 + self.two_s2

    @property
    def s(self) -> float:
        return self.two_s / 2

    @property
    def n_levels(self) -> int:
        return (self.two_s1 + 1) * (self.two_s2 + 1)

    @property
    def same_parity(self) -> bool:
        """True when 2s is even, i.e. a zero-field-energy band m = 0 exists."""
        return self.two_s % 2 == 0

    def labels(self) -> tuple[str, str]:
        return spin_label(self.two_s1), spin_label(self.two_s2)

    def __str__(self) -> str:
        return "({}, {})".format(*self.labels())


@dataclass(frozen=True)
class EnergyLevel:
    """One eigenstate: multiplet spin S, magnetic number m, and the exact
    coefficients of E = m1*B - 8*m2*J in doubled-integer form."""

    two_total_spin: int  # 2S
    two_m: int           # 2m; equals the field coefficient m1
    two_m2: int          # 2*m2, non-negative; zero exactly on the S = s multiplet
    index: int           # canonical 1-based position in the spectrum

    @property
    def m1(self) -> int:
        return self.two_m

    @property
    def m2(self) -> float:
        return self.two_m2 / 2

    @property
    def total_spin(self) -> float:
        return self.two_total_spin / 2

    @property
    def m(self) -> float:
        return self.two_m / 2


def _check_fields(B: float, J: float) -> None:
    if B < 0:
        raise ValueError(f"field magnitude must be non-negative, got B={B}")
    if J < 0:
        raise ValueError(f"coupling must be non-negative, got J={J}")


def energy_of_level(level: EnergyLevel, B: float, J: float) -> float:
    """Eigenvalue m1*B - 8*m2*J (the constant 8*s1*s2*J offset is dropped)."""
    _check_fields(B, J)
    return level.two_m * B - 4.0 * level.two_m2 * J


@dataclass(frozen=True, eq=False)
class Spectrum:
    """All n = (2s1+1)(2s2+1) levels of one pair in canonical order:
    ascending m1, and descending m2 inside each equal-m1 band."""

    pair: SpinPair
    levels: tuple[EnergyLevel, ...]
    m1: np.ndarray       # int64, shape (n,)
    two_m2: np.ndarray   # int64, shape (n,)

    @property
    def n(self) -> int:
        return len(self.levels)

    @property
    def m2(self) -> np.ndarray:
        return self.two_m2 / 2.0

    def energies(self, B: float, J: float) -> np.ndarray:
        """Vector of eigenvalues at (B, J) in canonical order."""
        _check_fields(B, J)
        return self.m1 * B - 4.0 * self.two_m2 * J


def build_spectrum(pair: SpinPair) -> Spectrum:
    """Construct the canonical spectrum via total-spin decomposition.

    Multiplets carry S = s2-s1, ..., s1+s2; a level with magnetic number m
    belongs to every multiplet with S >= max(|m|, s2-s1).  The exchange
    coefficient of a multiplet is 2*m2 = ((2s-2S)/2) * ((2s+2S)/2 + 1),
    i.e. m2 = (s(s+1) - S(S+1))/2.
    """
    two_s = pair.two_s
    two_s_min = pair.two_s2 - pair.two_s1
    levels: list[EnergyLevel] = []
    for two_m in range(-two_s, two_s + 1, 2):
        lowest = max(abs(two_m), two_s_min)
        # ascending S <=> descending m2 within the band
        for two_S in range(lowest, two_s + 1, 2):
            q = (two_s - two_S) // 2
            two_m2 = q * ((two_s + two_S) // 2 + 1)
            levels.append(EnergyLevel(two_S, two_m, two_m2, len(levels) + 1))
    if len(levels) != pair.n_levels:
        raise AssertionError("multiplet bookkeeping lost levels")
    m1 = np.array([lv.two_m for lv in levels], dtype=np.int64)
    two_m2 = np.array([lv.two_m2 for lv in levels], dtype=np.int64)
    m1.flags.writeable = False
    two_m2.flags.writeable = False
    return Spectrum(pair, tuple(levels), m1, two_m2)


@dataclass(frozen=True)
class DegeneracyProfile:
    """Zero-coupling degeneracies g for the bands |m| = s, s-1, ... (positive
    |m| only) plus the multiplicity of the zero-energy band when it exists."""

    g: tuple[int, ...]
    zero_multiplicity: int | None

    def level_count(self) -> int:
        extra = 0 if self.zero_multiplicity is None else self.zero_multiplicity
        return 2 * sum(self.g) + extra


def degeneracy_profile(pair: SpinPair) -> DegeneracyProfile:
    """Degeneracy ladder g = 1, 2, ..., capped at 2*s1+1, from |m| = s inward."""
    two_s = pair.two_s
    g = []
    for two_m in range(two_s, 0, -2):
        q = (two_s - two_m) // 2
        g.append(min(q, pair.two_s1) + 1)
    zero = pair.two_s1 + 1 if pair.same_parity else None
    return DegeneracyProfile(tuple(g), zero)


def energy_order(spectrum: Spectrum, B: float, J: float) -> tuple[int, ...]:
    """Canonical indices sorted by energy at (B, J).

    Levels whose energies agree within ENERGY_TIE_EPS * max(1, |E|) are
    treated as degenerate and kept in canonical-index order, so the J = 0
    band degeneracies produce a deterministic permutation.
    """
    e = spectrum.energies(B, J)
    order = list(np.argsort(e, kind="stable"))
    groups: list[list[int]] = [[order[0]]]
    for i in order[1:]:
        prev = groups[-1][-1]
        tol = ENERGY_TIE_EPS * max(1.0, abs(e[i]), abs(e[prev]))
        if e[i] - e[prev] <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    out: list[int] = []
    for grp in groups:
        out.extend(sorted(grp))
    return tuple(i + 1 for i in out)


def check_no_level_crossing(spectrum: Spectrum, B1: float, B2: float, J: float) -> bool:
    """True iff the energy ordering of the levels is the same at (B1, J)
    and (B2, J), i.e. the adiabatic strokes permute no levels."""
    if not B1 > B2 > 0:
        raise ValueError("need B1 > B2 > 0")
    return energy_order(spectrum, B1, J) == energy_order(spectrum, B2, J)
