"""Built-in report presets: the standard datasets of the toolkit (probability
differences, majorization partial sums, efficiency/work versus coupling, and
the fixed-total-spin family) written as delimited files with matching plots.

Each preset is a function returning one or more Dataset objects; rendering
uses matplotlib's Agg backend and writes a PNG next to every table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensemble import thermal_state
from .otto import CycleParams, average_cycle_report
from .regime import coupling_bounds, efficiency_bounds
from .spectrum import SpinPair, build_spectrum, spin_label

__all__ = ["Dataset", "PRESETS", "build_preset", "render_dataset"]

_PDIFF_PAIR = SpinPair(1, 2)
_FIELDS = (4.0, 3.0)
# low-T and high-T bath variants share theta = 1/2
_BATHS = {"lowT": (4.0, 2.0), "highT": (6.0, 3.0)}
_SWEEP_PAIRS = (SpinPair(1, 2), SpinPair(1, 3), SpinPair(1, 4),
                SpinPair(2, 5), SpinPair(3, 4))
_HALF_FAMILY = (SpinPair(1, 2), SpinPair(1, 3), SpinPair(1, 4))
_FIXED_S_FAMILY = (SpinPair(1, 6), SpinPair(2, 5), SpinPair(3, 4))
_WORK_BATHS = {"coldbaths": (1.0, 0.5), "warmbaths": (6.0, 3.0)}


@dataclass(frozen=True)
class Dataset:
    name: str
    metadata: tuple[str, ...]
    header: tuple[str, ...]
    rows: tuple[tuple, ...]
    kind: str  # plotting hint: "series" (one column per curve) or "long"


def _j_grid(jc: float, points: int, stop_factor: float = 1.0) -> np.ndarray:
    """Open-ended coupling grid (0, stop_factor*jc]; excludes J = 0 so every
    point is strictly coupled."""
    return np.linspace(0.0, stop_factor * jc, points + 1)[1:]


def _pair_meta(pair: SpinPair) -> str:
    s1, s2 = pair.labels()
    return f"pair s1={s1} s2={s2}"


def probability_differences(points: int) -> list[Dataset]:
    """P_k - P'_k for k = 2..n against J, for both bath variants."""
    spec = build_spectrum(_PDIFF_PAIR)
    out = []
    for tag, (t1, t2) in _BATHS.items():
        base = CycleParams(*_FIELDS, t1, t2)
        jc = coupling_bounds(_PDIFF_PAIR, base).jc
        rows = []
        for j in _j_grid(jc, points):
            hot = thermal_state(spec, base.B1, base.T1, j)
            cold = thermal_state(spec, base.B2, base.T2, j)
            dp = hot.probabilities - cold.probabilities
            rows.append((j, *dp[1:]))
        header = ("J",) + tuple(f"dP{k}" for k in range(2, spec.n + 1))
        meta = (_pair_meta(_PDIFF_PAIR),
                f"B1={base.B1} B2={base.B2} T1={t1} T2={t2}",
                f"Jc={jc!r}")
        out.append(Dataset(f"pdiff_{tag}", meta, header, tuple(rows), "series"))
    return out


def majorization_sums(points: int) -> list[Dataset]:
    """Tail partial sums sum_{k=j..n} (P_k - P'_k) against J; positivity of
    every column is the majorization of the hot state by the cold one."""
    spec = build_spectrum(_PDIFF_PAIR)
    n = spec.n
    out = []
    for tag, (t1, t2) in _BATHS.items():
        base = CycleParams(*_FIELDS, t1, t2)
        jc = coupling_bounds(_PDIFF_PAIR, base).jc
        rows = []
        for j in _j_grid(jc, points):
            hot = thermal_state(spec, base.B1, base.T1, j)
            cold = thermal_state(spec, base.B2, base.T2, j)
            dp = hot.probabilities - cold.probabilities
            tails = np.cumsum(dp[::-1])[::-1]
            rows.append((j, *(tails[k - 1] for k in range(n, 1, -1))))
        header = ("J",) + tuple(f"tail{k}" for k in range(n, 1, -1))
        meta = (_pair_meta(_PDIFF_PAIR),
                f"B1={base.B1} B2={base.B2} T1={t1} T2={t2}",
                f"Jc={jc!r}")
        out.append(Dataset(f"majorization_{tag}", meta, header, tuple(rows), "series"))
    return out


def efficiency_family(points: int) -> list[Dataset]:
    """Efficiency and its ceiling against J for the s1 = 1/2 family."""
    rows = []
    for pair in _HALF_FAMILY:
        spec = build_spectrum(pair)
        base = CycleParams(*_FIELDS, 1.0, 0.5)
        jc = coupling_bounds(pair, base).jc
        s1, s2 = pair.labels()
        for j in _j_grid(jc, points):
            params = base.with_coupling(j)
            rep = average_cycle_report(pair, params, spec)
            bounds = efficiency_bounds(pair, params)
            rows.append((s1, s2, j, rep.eta, bounds.eta_ub, rep.eta0,
                         bounds.eta_carnot))
    meta = ("family s1=1/2, s2 in {1, 3/2, 2}",
            "B1=4 B2=3 T1=1 T2=0.5")
    header = ("s1", "s2", "J", "eta", "eta_ub", "eta0", "eta_carnot")
    return [Dataset("efficiency_bounds", meta, header, tuple(rows), "long")]


def work_family(points: int) -> list[Dataset]:
    """Extracted work against J for several pairs at two bath settings."""
    out = []
    for tag, (t1, t2) in _WORK_BATHS.items():
        rows = []
        for pair in _SWEEP_PAIRS:
            spec = build_spectrum(pair)
            base = CycleParams(*_FIELDS, t1, t2)
            jc = coupling_bounds(pair, base).jc
            s1, s2 = pair.labels()
            for j in _j_grid(jc, points, stop_factor=2.0):
                rep = average_cycle_report(pair, base.with_coupling(j), spec)
                rows.append((s1, s2, j, rep.W, rep.dS, rep.regime))
        meta = (f"B1={_FIELDS[0]} B2={_FIELDS[1]} T1={t1} T2={t2}",
                "coupling grid extends to 2*Jc per pair")
        header = ("s1", "s2", "J", "W", "dS", "regime")
        out.append(Dataset(f"work_{tag}", meta, header, tuple(rows), "long"))
    return out


def fixed_total_spin(points: int) -> list[Dataset]:
    """Efficiency, ceiling and work for the three pairs with s = 7/2; the
    ceiling and Jc depend on s only and are shared across the family."""
    rows = []
    base = CycleParams(*_FIELDS, 4.0, 2.0)
    jc = coupling_bounds(_FIXED_S_FAMILY[0], base).jc
    for pair in _FIXED_S_FAMILY:
        spec = build_spectrum(pair)
        s1, s2 = pair.labels()
        for j in _j_grid(jc, points):
            params = base.with_coupling(j)
            rep = average_cycle_report(pair, params, spec)
            bounds = efficiency_bounds(pair, params)
            rows.append((s1, s2, j, rep.eta, bounds.eta_ub, rep.W,
                         rep.eta0, bounds.eta_carnot))
    meta = ("family with total spin s=7/2: (1/2,3), (1,5/2), (3/2,2)",
            f"B1={base.B1} B2={base.B2} T1={base.T1} T2={base.T2}",
            f"Jc={jc!r}")
    header = ("s1", "s2", "J", "eta", "eta_ub", "W", "eta0", "eta_carnot")
    return [Dataset("fixed_total_spin", meta, header, tuple(rows), "long")]


PRESETS = {
    "pdiff": probability_differences,
    "majorization": majorization_sums,
    "efficiency": efficiency_family,
    "work": work_family,
    "fixed-s": fixed_total_spin,
}


def build_preset(name: str, points: int = 120) -> list[Dataset]:
    try:
        builder = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    return builder(points)


def render_dataset(ds: Dataset, png_path) -> None:
    """Line plot of the dataset; series datasets plot every column against J,
    long datasets group rows into one curve per (s1, s2) pair."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    if ds.kind == "series":
        j = np.array([float(r[0]) for r in ds.rows])
        for col in range(1, len(ds.header)):
            ax.plot(j, [float(r[col]) for r in ds.rows], label=ds.header[col])
        ax.set_xlabel(ds.header[0])
    else:
        pairs = []
        for row in ds.rows:
            key = (row[0], row[1])
            if key not in pairs:
                pairs.append(key)
        value_cols = [i for i, name in enumerate(ds.header)
                      if name not in ("s1", "s2", "J", "regime")]
        styles = ["-", "--", ":", "-."]
        for key in pairs:
            sub = [r for r in ds.rows if (r[0], r[1]) == key]
            j = [float(r[2]) for r in sub]
            for si, col in enumerate(value_cols):
                vals = [r[col] for r in sub]
                if any(v is None for v in vals):
                    continue
                ax.plot(j, [float(v) for v in vals],
                        styles[si % len(styles)],
                        label=f"({key[0]},{key[1]}) {ds.header[col]}")
        ax.set_xlabel("J")
    ax.set_title(ds.name)
    ax.legend(fontsize=7, ncol=2)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(png_path, dpi=140)
    plt.close(fig)
