"""Operating-regime predicates and bounds for the coupled Otto engine.

Covers the positive-work condition B2/T2 > B1/T1, the coupling windows

    J_c = (B2 - B1*theta) / (4 s (1 - theta))          (average engine window)
    J_x = (B2 - B1*theta) / (4 s1 (2 s2 + 1)(1-theta)) (two-level second-law window)

the efficiency ceilings eta_ub = eta0/(1 - 4sJ/B1) and
eta_max = eta0/(1 - 4 s1 (2 s2 + 1) J / B1), worst/best-case probability
orderings, majorization between the two bath distributions, and a seeded
numerical falsification suite for the supporting sign lemmas.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ensemble import ThermalState, shannon_entropy, thermal_state
from .otto import CycleParams, xy_factors, _entropy_production
from .spectrum import SpinPair, Spectrum, build_spectrum

__all__ = [
    "PROBABILITY_EPS",
    "RegimeVerdict",
    "CouplingBounds",
    "EfficiencyBounds",
    "pwc_holds",
    "coupling_bounds",
    "j_a_bound",
    "efficiency_bounds",
    "wcs_predicate",
    "majorization_views",
    "majorization_check",
    "regime_verdict",
    "SweepConfig",
    "LemmaReport",
    "lemma_suite",
    "default_sweep_pairs",
]

# Probability comparisons treat |a - b| <= PROBABILITY_EPS as equality.
PROBABILITY_EPS = 1e-15
# Partial sums of up to ~100 probabilities; slack for accumulated rounding.
_SUM_EPS = 1e-12
# Conclusions of the numerical lemmas are asserted up to this slack.
_LEMMA_TOL = 1e-13
# Points whose bath-bias B2/T2 - B1/T1 is smaller than this are skipped as
# numerically indeterminate for the sign lemmas.
_BIAS_MARGIN = 1e-6


def pwc_holds(params: CycleParams) -> bool:
    """Positive-work condition B2/T2 > B1/T1 (strict)."""
    return params.B2 / params.T2 > params.B1 / params.T1


@dataclass(frozen=True)
class CouplingBounds:
    jc: float
    jx: float
    engine_regime: bool  # False flags "no engine regime": bounds non-positive


def coupling_bounds(pair: SpinPair, params: CycleParams) -> CouplingBounds:
    """(J_c, J_x) for the pair at these fields/temperatures."""
    theta = params.theta
    bias = params.B2 - params.B1 * theta
    if theta >= 1.0:
        return CouplingBounds(float("-inf"), float("-inf"), False)
    s = pair.two_s / 2.0
    sx = pair.two_s1 * (pair.two_s2 + 1) / 2.0  # s1(2*s2+1)
    jc = bias / (4.0 * s * (1.0 - theta))
    jx = bias / (4.0 * sx * (1.0 - theta))
    return CouplingBounds(jc, jx, pwc_holds(params))


def j_a_bound(x: int, y: float, params: CycleParams) -> float:
    """Second-law coupling ceiling x(B2 - B1*theta) / (8|y|(1-theta)) for a
    two-level cycle carrying field step x > 0 and exchange step y < 0."""
    if x <= 0:
        raise ValueError("x must be a positive (engine-sense) field step")
    if y >= 0:
        raise ValueError("bound applies to opposite-sign steps only (y < 0)")
    theta = params.theta
    if theta >= 1.0:
        return float("-inf")
    return x * (params.B2 - params.B1 * theta) / (8.0 * abs(y) * (1.0 - theta))


@dataclass(frozen=True)
class EfficiencyBounds:
    eta_ub: float | None     # None when 4sJ >= B1 (level ordering lost)
    eta_max: float | None    # None when 4 s1 (2 s2 + 1) J >= B1
    eta_carnot: float


def efficiency_bounds(pair: SpinPair, params: CycleParams) -> EfficiencyBounds:
    """Average-cycle ceiling, two-level ceiling and the Carnot efficiency."""
    eta0 = 1.0 - params.B2 / params.B1
    s = pair.two_s / 2.0
    sx = pair.two_s1 * (pair.two_s2 + 1) / 2.0
    d_ub = 1.0 - 4.0 * s * params.J / params.B1
    d_max = 1.0 - 4.0 * sx * params.J / params.B1
    return EfficiencyBounds(
        eta0 / d_ub if d_ub > 0 else None,
        eta0 / d_max if d_max > 0 else None,
        1.0 - params.theta,
    )


def wcs_predicate(stage1: ThermalState, stage3: ThermalState,
                  eps: float = PROBABILITY_EPS) -> tuple[bool, bool]:
    """(worst-case, best-case) probability-ordering flags.

    Worst case: P'_k <= P_k for every k >= 2 and P'_1 >= P_1.
    Best case:  P'_k > P_k for k = 2 .. n//2.
    """
    if not stage1.same_spectrum(stage3):
        raise ValueError("states must share one spectrum")
    p = stage1.probabilities
    pp = stage3.probabilities
    n = p.size
    wcs = bool(np.all(pp[1:] <= p[1:] + eps) and pp[0] >= p[0] - eps)
    half = n // 2
    bcs = bool(np.all(pp[1:half] > p[1:half] + eps)) if half > 1 else False
    return wcs, bcs


def _majorizes(winner: np.ndarray, loser: np.ndarray, presorted: bool) -> bool:
    a = winner if presorted else np.sort(winner)[::-1]
    b = loser if presorted else np.sort(loser)[::-1]
    return bool(np.all(np.cumsum(a) >= np.cumsum(b) - _SUM_EPS))


def majorization_views(stage1: ThermalState, stage3: ThermalState) -> tuple[bool, bool]:
    """Majorization of the hot distribution by the cold one, computed on
    sorted vectors (the standard definition) and in canonical index order
    (top partial sums).  The two coincide whenever populations decrease
    with the canonical index."""
    if not stage1.same_spectrum(stage3):
        raise ValueError("states must share one spectrum")
    p = stage1.probabilities
    pp = stage3.probabilities
    return _majorizes(pp, p, presorted=False), _majorizes(pp, p, presorted=True)


def majorization_check(stage1: ThermalState, stage3: ThermalState) -> bool:
    """True iff the cold-bath distribution majorizes the hot-bath one
    ({p} < {p'} in the partial-sum sense, on sorted vectors)."""
    return majorization_views(stage1, stage3)[0]


@dataclass(frozen=True)
class RegimeVerdict:
    """One-point summary of every regime predicate and bound."""

    pwc: bool
    wcs: bool
    bcs: bool
    majorizes: bool
    jc: float
    jx: float
    eta_ub: float | None
    eta_max: float | None
    eta_carnot: float
    L: float    # (p'_1 - p_1) + (p_n - p'_n) at J = 0
    LX: float   # same combination with the coupled probabilities
    second_law_ok: bool


def _edge_term(stage1: ThermalState, stage3: ThermalState) -> float:
    p = stage1.probabilities
    pp = stage3.probabilities
    return float((pp[0] - p[0]) + (p[-1] - pp[-1]))


def regime_verdict(pair: SpinPair, params: CycleParams,
                   spectrum: Spectrum | None = None) -> RegimeVerdict:
    spec = spectrum if spectrum is not None else build_spectrum(pair)
    stage1 = thermal_state(spec, params.B1, params.T1, params.J)
    stage3 = thermal_state(spec, params.B2, params.T2, params.J)
    wcs, bcs = wcs_predicate(stage1, stage3)
    bounds = coupling_bounds(pair, params)
    eff = efficiency_bounds(pair, params)
    X, Y = xy_factors(stage1, stage3)
    lx = _edge_term(stage1, stage3)
    l0 = _edge_term(thermal_state(spec, params.B1, params.T1, 0.0),
                    thermal_state(spec, params.B2, params.T2, 0.0))
    ds = _entropy_production(X, Y, params)
    return RegimeVerdict(pwc_holds(params), wcs, bcs,
                         majorization_check(stage1, stage3),
                         bounds.jc, bounds.jx, eff.eta_ub, eff.eta_max,
                         eff.eta_carnot, l0, lx, ds >= -_SUM_EPS)


# --------------------------------------------------------------------------
# numerical falsification suite for the sign lemmas
# --------------------------------------------------------------------------

def default_sweep_pairs(two_s_max: int = 9) -> tuple[SpinPair, ...]:
    """Every canonical pair with total spin up to two_s_max/2."""
    pairs = []
    for a in range(1, two_s_max + 1):
        for b in range(a, two_s_max - a + 1):
            pairs.append(SpinPair(a, b))
    return tuple(pairs)


@dataclass(frozen=True)
class SweepConfig:
    """Seeded random sweep over (B1, B2, T1, T2, J) for the lemma suite."""

    points: int = 10000
    seed: int = 20260
    pairs: tuple[SpinPair, ...] = field(default_factory=default_sweep_pairs)

    def __post_init__(self):
        if self.points <= 0:
            raise ValueError("sweep must contain at least one point")
        if not self.pairs:
            raise ValueError("sweep needs at least one spin pair")


@dataclass
class LemmaCheck:
    name: str
    tested: int = 0
    violations: int = 0
    counterexamples: list[tuple] = field(default_factory=list)

    def record(self, ok: bool, witness: tuple, keep: int = 10) -> None:
        self.tested += 1
        if not ok:
            self.violations += 1
            if len(self.counterexamples) < keep:
                self.counterexamples.append(witness)


@dataclass
class LemmaReport:
    config: SweepConfig
    checks: dict[str, LemmaCheck]
    case_c_points: int = 0
    case_c_engine: int = 0

    @property
    def ok(self) -> bool:
        return all(c.violations == 0 for c in self.checks.values())

    @property
    def total_violations(self) -> int:
        return sum(c.violations for c in self.checks.values())

    def summary_rows(self) -> list[tuple[str, int, int]]:
        return [(c.name, c.tested, c.violations) for c in self.checks.values()]


LEMMA_NAMES = (
    "uncoupled_edge_term_sign",       # sign(L) tracks sign(B2/T2 - B1/T1) at J = 0
    "uncoupled_pwc_gives_work",       # bath bias > 0  =>  v > 0
    "reversed_bias_blocks_engine",    # bath bias < 0  =>  X < 0 at any J
    "wcs_engine_entropy",             # wcs and 0 < J < Jc  =>  X > -Y/s and dS > 0
    "m5_below_total_spin",            # every positive-half exchange ladder index < 2s
)


def _sample_point(rng: np.random.Generator) -> tuple[float, float, float, float]:
    B1 = rng.uniform(0.5, 5.0)
    B2 = B1 * rng.uniform(0.10, 0.98)
    T1 = rng.uniform(0.4, 6.0)
    T2 = T1 * rng.uniform(0.15, 1.0)
    return B1, B2, T1, T2


def lemma_suite(config: SweepConfig | None = None) -> LemmaReport:
    """Numerically falsify the sign lemmas behind the engine conditions.

    For every sampled point the applicable implications are asserted with a
    small slack (_LEMMA_TOL); points whose bath bias is within _BIAS_MARGIN
    of zero are skipped as indeterminate.  The structural ladder-coefficient
    bound is checked once per pair.  Counterexamples carry the full
    parameter tuple (pair, B1, B2, T1, T2, J, observed values).
    """
    cfg = config if config is not None else SweepConfig()
    rng = np.random.default_rng(cfg.seed)
    checks = {name: LemmaCheck(name) for name in LEMMA_NAMES}
    report = LemmaReport(cfg, checks)

    spectra = {pair: build_spectrum(pair) for pair in cfg.pairs}
    for pair, spec in spectra.items():
        two_s = pair.two_s
        for level in spec.levels:
            if level.two_m <= 0:
                continue
            # ladder index j reconstructed from 2*m2 = j(2s - j + 1)
            j = next(k for k in range(pair.two_s1 + 1)
                     if k * (two_s - k + 1) == level.two_m2)
            checks["m5_below_total_spin"].record(
                2 * j < two_s, (str(pair), level.index, j))

    for i in range(cfg.points):
        pair = cfg.pairs[i % len(cfg.pairs)]
        spec = spectra[pair]
        B1, B2, T1, T2 = _sample_point(rng)
        s = pair.two_s / 2.0
        J = rng.uniform(0.0, 1.1 * B2 / (4.0 * s))
        params = CycleParams(B1, B2, T1, T2, J)
        bias = B2 / T2 - B1 / T1

        hot0 = thermal_state(spec, B1, T1, 0.0)
        cold0 = thermal_state(spec, B2, T2, 0.0)
        v, _ = xy_factors(hot0, cold0)
        L = _edge_term(hot0, cold0)
        witness = (str(pair), B1, B2, T1, T2, J)

        if abs(bias) > _BIAS_MARGIN:
            sign_ok = (L >= -_LEMMA_TOL) if bias > 0 else (L <= _LEMMA_TOL)
            checks["uncoupled_edge_term_sign"].record(sign_ok, witness + (L,))
            if bias > 0:
                checks["uncoupled_pwc_gives_work"].record(v > -_LEMMA_TOL, witness + (v,))

        stage1 = thermal_state(spec, B1, T1, J)
        stage3 = thermal_state(spec, B2, T2, J)
        X, Y = xy_factors(stage1, stage3)

        if bias < -_BIAS_MARGIN:
            checks["reversed_bias_blocks_engine"].record(X < _LEMMA_TOL, witness + (X,))

        if bias > _BIAS_MARGIN:
            bounds = coupling_bounds(pair, params)
            wcs, _ = wcs_predicate(stage1, stage3)
            if wcs and 0.0 < J < bounds.jc:
                y1 = -Y / s
                ds = _entropy_production(X, Y, params)
                ok = (X - y1 > -_LEMMA_TOL) and (ds > -_LEMMA_TOL)
                checks["wcs_engine_entropy"].record(ok, witness + (X, y1, ds))
            if stage3.probabilities[0] <= stage1.probabilities[0]:
                # edge-term sign indeterminate: record engine frequency only
                report.case_c_points += 1
                report.case_c_engine += int(X > 0)

    return report
