"""Complete Otto cycles: deterministic two-level trajectories through the
four strokes, classified and audited against the second law.

A cycle between canonical levels i -> f carries the field step
x = m1_f - m1_i (always even, in -4s .. 4s) and the exchange step
y = m2_f - m2_i, with energetics

    Q1 = x B1 + 8 J y,   Q2 = x B2 + 8 J y,   W = x (B1 - B2),
    dS = x (B2/T2 - B1/T1) + 8 J y (1/T2 - 1/T1).

Forward (x > 0) cycles run in the engine sense; x < 0 runs as a
refrigerator and carries no efficiency.
"""

from __future__ import annotations

from dataclasses import dataclass

from .otto import CycleParams
from .regime import coupling_bounds
from .spectrum import Spectrum

__all__ = [
    "CocRecord",
    "CocAudit",
    "classify_coc",
    "enumerate_cocs",
    "coc_efficiency",
    "max_engine_coc_efficiency",
    "second_law_audit",
]

FIELD_ONLY = "FIELD_ONLY"
COUPLING_ONLY = "COUPLING_ONLY"
ALIGNED = "ALIGNED"
OPPOSED = "OPPOSED"
NULL = "NULL"


def classify_coc(x: int, two_y: int) -> str:
    if x == 0 and two_y == 0:
        return NULL
    if two_y == 0:
        return FIELD_ONLY
    if x == 0:
        return COUPLING_ONLY
    return ALIGNED if (x > 0) == (two_y > 0) else OPPOSED


@dataclass(frozen=True)
class CocRecord:
    """One complete Otto cycle between canonical levels initial_k -> final_k."""

    initial_k: int
    final_k: int
    x: int
    two_y: int
    q1: float
    q2: float
    w: float
    dS: float
    case: str
    eta: float | None

    @property
    def y(self) -> float:
        return self.two_y / 2


def _efficiency(x: int, two_y: int, params: CycleParams) -> float | None:
    """eta0 / (1 + 8 y J / (x B1)) for engine-sense cycles; zero-work
    exchange-only cycles with positive heat have efficiency zero."""
    eta0 = 1.0 - params.B2 / params.B1
    if x > 0:
        denom = 1.0 + 4.0 * two_y * params.J / (x * params.B1)
        return eta0 / denom if denom > 0 else None
    if x == 0 and two_y > 0 and params.J > 0:
        return 0.0
    return None


def coc_efficiency(record: CocRecord, params: CycleParams) -> float | None:
    return _efficiency(record.x, record.two_y, params)


def enumerate_cocs(spectrum: Spectrum, params: CycleParams) -> list[CocRecord]:
    """One record per ordered level pair (i, f), i != f: n(n-1) records."""
    records = []
    for lv_i in spectrum.levels:
        for lv_f in spectrum.levels:
            if lv_i.index == lv_f.index:
                continue
            x = lv_f.two_m - lv_i.two_m
            two_y = lv_f.two_m2 - lv_i.two_m2
            q1 = x * params.B1 + 4.0 * two_y * params.J
            w = x * (params.B1 - params.B2)
            ds = (x * (params.B2 / params.T2 - params.B1 / params.T1)
                  + 4.0 * two_y * params.J * (1.0 / params.T2 - 1.0 / params.T1))
            records.append(CocRecord(lv_i.index, lv_f.index, x, two_y,
                                     q1, q1 - w, w, ds,
                                     classify_coc(x, two_y),
                                     _efficiency(x, two_y, params)))
    return records


def max_engine_coc_efficiency(spectrum: Spectrum,
                              params: CycleParams) -> tuple[float, CocRecord]:
    """Largest efficiency over engine-sense (x > 0) cycles and its witness.

    For J below the second-law window J_x the maximum is attained at the
    smallest field step x = 2 against the deepest exchange drop
    y = -s1(2*s2+1), reproducing eta0 / (1 - 4 s1 (2 s2 + 1) J / B1).
    """
    best: CocRecord | None = None
    for rec in enumerate_cocs(spectrum, params):
        if rec.x <= 0 or rec.eta is None:
            continue
        if best is None or rec.eta > best.eta:
            best = rec
    if best is None:
        raise ArithmeticError("no engine-sense cycle with defined efficiency")
    return best.eta, best


@dataclass(frozen=True)
class CocAudit:
    """Second-law audit of every two-level cycle at one parameter point."""

    params: CycleParams
    jc: float
    jx: float
    n_records: int
    engine_records: int
    engine_violations: tuple[CocRecord, ...]   # x > 0 with dS < 0
    negative_ds_by_case: dict[str, int]        # all records with dS < 0
    eta_max_observed: float
    eta_max_witness: CocRecord

    @property
    def engine_second_law_ok(self) -> bool:
        return not self.engine_violations


def second_law_audit(spectrum: Spectrum, params: CycleParams,
                     tol: float = 1e-12) -> CocAudit:
    """Collect dS < 0 cycles; engine-sense violations are impossible for
    B2 > B1*theta and 0 < J < J_x, and are reported whenever they occur."""
    records = enumerate_cocs(spectrum, params)
    bounds = coupling_bounds(spectrum.pair, params)
    engine = [r for r in records if r.x > 0]
    violations = tuple(r for r in engine if r.dS < -tol)
    negative: dict[str, int] = {}
    for rec in records:
        if rec.dS < -tol:
            negative[rec.case] = negative.get(rec.case, 0) + 1
    eta_best, witness = max_engine_coc_efficiency(spectrum, params)
    return CocAudit(params, bounds.jc, bounds.jx, len(records), len(engine),
                    violations, negative, eta_best, witness)
