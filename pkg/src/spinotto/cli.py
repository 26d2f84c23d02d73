"""Command-line front end.

Subcommands: spectrum (level table), cycle (single-point report), sweep
(coupling sweeps to CSV), coc (two-level cycle audit), verify (seeded
verification suite) and figures (built-in datasets with plots).  Every CSV
starts with '#' metadata lines echoing the tool version and parameters, so
identical invocations produce byte-identical files.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain warning
(level crossing detected).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__, coc, figures, regime, verify
from .ensemble import thermal_state
from .otto import CycleParams, average_cycle_report
from .spectrum import SpinPair, build_spectrum, energy_order, spin_label
from .tables import format_value, read_table, write_table, write_table_file

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN_WARNING = 3


def _tool_line(command: str) -> str:
    return f"spinotto {__version__} {command}"


def _emit(output: str | None, metadata, header, rows) -> None:
    if output in (None, "-"):
        write_table(sys.stdout, metadata, header, rows)
    else:
        write_table_file(output, metadata, header, rows)


def _pair_from_args(args) -> SpinPair:
    return SpinPair.from_labels(args.s1, args.s2)


def _params_from_args(args, J: float | None = None) -> CycleParams:
    j = args.J if J is None else J
    return CycleParams(args.B1, args.B2, args.T1, args.T2, j)


# ---------------------------------------------------------------- spectrum

def cmd_spectrum(args) -> int:
    pair = _pair_from_args(args)
    spec = build_spectrum(pair)
    energies = spec.energies(args.B, args.J)
    order = range(spec.n)
    if args.sorted:
        order = [k - 1 for k in energy_order(spec, args.B, args.J)] if args.B > 0 \
            else order
    rows = []
    for i in order:
        lv = spec.levels[i]
        rows.append((lv.index, lv.two_total_spin, lv.two_m, lv.m1, lv.two_m2,
                     energies[i]))
    s1, s2 = pair.labels()
    meta = [_tool_line("spectrum"),
            f"s1={s1} s2={s2} B={format_value(args.B)} J={format_value(args.J)}"
            f" sorted={format_value(bool(args.sorted))}"]
    header = ("k", "2S", "2m", "m1", "2m2", "E")

    if args.check_crossing is not None:
        ok = True
        from .spectrum import check_no_level_crossing
        ok = check_no_level_crossing(spec, args.B, args.check_crossing, args.J)
        if args.output not in (None, "-"):
            _emit(args.output, meta, header, rows)
        print("NO_CROSSING" if ok else "CROSSING")
        return EXIT_OK if ok else EXIT_DOMAIN_WARNING

    _emit(args.output, meta, header, rows)
    return EXIT_OK


# ------------------------------------------------------------------- cycle

_CYCLE_FIELDS = ("X", "Y", "Q1", "Q2", "W", "eta", "dS", "regime",
                 "v", "q1", "q2", "w", "eta0", "dS0")
_VERDICT_FIELDS = ("pwc", "wcs", "bcs", "majorizes", "jc", "jx",
                   "eta_ub", "eta_max", "eta_carnot", "L", "LX",
                   "second_law_ok")


def cmd_cycle(args) -> int:
    pair = _pair_from_args(args)
    params = _params_from_args(args)
    spec = build_spectrum(pair)
    rep = average_cycle_report(pair, params, spec)
    verdict = regime.regime_verdict(pair, params, spec)
    rows = [(name, getattr(rep, name)) for name in _CYCLE_FIELDS]
    rows += [(name, getattr(verdict, name)) for name in _VERDICT_FIELDS]
    s1, s2 = pair.labels()
    meta = [_tool_line("cycle"),
            f"s1={s1} s2={s2} B1={format_value(params.B1)} B2={format_value(params.B2)}"
            f" T1={format_value(params.T1)} T2={format_value(params.T2)}"
            f" J={format_value(params.J)}"]
    _emit(args.output, meta, ("quantity", "value"), rows)
    return EXIT_OK


# ------------------------------------------------------------------- sweep

SWEEP_HEADER = ("s1", "s2", "J", "X", "Y", "Q1", "Q2", "W", "eta", "eta0",
                "eta_ub", "eta_carnot", "dS", "regime", "wcs", "majorizes")


def _sweep_pairs(args) -> list[SpinPair]:
    pairs = []
    for text in args.pair or []:
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"--pair expects 's1,s2', got {text!r}")
        pairs.append(SpinPair.from_labels(parts[0], parts[1]))
    if not pairs:
        if args.s1 is None or args.s2 is None:
            raise ValueError("give --pair s1,s2 (repeatable) or --s1/--s2")
        pairs.append(SpinPair.from_labels(args.s1, args.s2))
    return pairs


def cmd_sweep(args) -> int:
    pairs = _sweep_pairs(args)
    if args.j_steps < 1:
        raise ValueError("coupling grid must contain at least one point")
    if args.j_start < 0 or args.j_stop < args.j_start:
        raise ValueError("need 0 <= j-start <= j-stop")
    grid = np.linspace(args.j_start, args.j_stop, args.j_steps)
    base = _params_from_args(args, J=0.0)
    rows = []
    for pair in pairs:
        spec = build_spectrum(pair)
        s1, s2 = pair.labels()
        for j in grid:
            params = base.with_coupling(float(j))
            rep = average_cycle_report(pair, params, spec)
            verdict = regime.regime_verdict(pair, params, spec)
            rows.append((s1, s2, params.J, rep.X, rep.Y, rep.Q1, rep.Q2,
                         rep.W, rep.eta, rep.eta0, verdict.eta_ub,
                         verdict.eta_carnot, rep.dS, rep.regime,
                         verdict.wcs, verdict.majorizes))
    meta = [_tool_line("sweep"),
            f"B1={format_value(args.B1)} B2={format_value(args.B2)}"
            f" T1={format_value(args.T1)} T2={format_value(args.T2)}"
            f" J_grid=[{format_value(args.j_start)},{format_value(args.j_stop)}]"
            f" steps={args.j_steps}",
            f"pairs={';'.join('%s,%s' % p.labels() for p in pairs)}",
            f"seed={args.seed}"]
    _emit(args.output, meta, SWEEP_HEADER, rows)
    return EXIT_OK


# --------------------------------------------------------------------- coc

COC_HEADER = ("i", "f", "x", "y", "case", "q1", "q2", "w", "dS", "eta")


def cmd_coc(args) -> int:
    pair = _pair_from_args(args)
    params = _params_from_args(args)
    spec = build_spectrum(pair)
    audit = coc.second_law_audit(spec, params)
    closed = regime.efficiency_bounds(pair, params).eta_max
    s1, s2 = pair.labels()
    meta = [_tool_line("coc"),
            f"s1={s1} s2={s2} B1={format_value(params.B1)} B2={format_value(params.B2)}"
            f" T1={format_value(params.T1)} T2={format_value(params.T2)}"
            f" J={format_value(params.J)}",
            f"jc={format_value(audit.jc)} jx={format_value(audit.jx)}",
            f"eta_max_observed={format_value(audit.eta_max_observed)}"
            f" eta_max_closed_form={format_value(closed)}",
            f"engine_records={audit.engine_records}"
            f" engine_second_law_violations={len(audit.engine_violations)}"]
    rows = [(r.initial_k, r.final_k, r.x, r.y, r.case, r.q1, r.q2, r.w,
             r.dS, r.eta) for r in coc.enumerate_cocs(spec, params)]
    _emit(args.output, meta, COC_HEADER, rows)
    return EXIT_OK


# ------------------------------------------------------------------ verify

def cmd_verify(args) -> int:
    cfg = verify.VerificationConfig(seed=args.seed, lemma_points=args.points,
                                    oracle_points=args.oracle_points)
    report = verify.run_verification(cfg)
    meta = [_tool_line("verify"),
            f"seed={cfg.seed} points={cfg.lemma_points}"
            f" oracle_points={cfg.oracle_points}",
            f"spectrum_worst={format_value(report.spectrum_worst)}"
            f" partition_worst={format_value(report.partition_worst)}"
            f" ceiling_worst={format_value(report.ceiling_worst)}",
            f"case_c_points={report.lemma.case_c_points}"
            f" case_c_engine={report.lemma.case_c_engine}",
            f"status={'ok' if report.ok else 'FAILED'}"]
    rows = [(name, tested, violations)
            for name, tested, violations in report.summary_rows()]
    _emit(args.output, meta, ("check", "tested", "violations"), rows)
    if not report.ok:
        for line in report.failures:
            print(f"counterexample: {line}", file=sys.stderr)
        if report.lemma is not None:
            for check in report.lemma.checks.values():
                for witness in check.counterexamples:
                    print(f"counterexample: {check.name} {witness}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# ----------------------------------------------------------------- figures

def cmd_figures(args) -> int:
    names = sorted(figures.PRESETS) if args.which == "all" else [args.which]
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name in names:
        for ds in figures.build_preset(name, points=args.points):
            csv_path = outdir / f"{ds.name}.csv"
            meta = [_tool_line("figures"), f"preset={name}", *ds.metadata]
            write_table_file(csv_path, meta, ds.header, ds.rows)
            print(csv_path)
            if not args.no_plots:
                png_path = outdir / f"{ds.name}.png"
                figures.render_dataset(ds, png_path)
                print(png_path)
    return EXIT_OK


# ------------------------------------------------------------------ parser

def _add_pair_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s1", required=True, help="first spin, e.g. 1/2 or 0.5")
    p.add_argument("--s2", required=True, help="second spin, e.g. 1")


def _add_cycle_flags(p: argparse.ArgumentParser, with_j: bool = True) -> None:
    p.add_argument("--B1", type=float, required=True, help="hot-stage field")
    p.add_argument("--B2", type=float, required=True, help="cold-stage field")
    p.add_argument("--T1", type=float, required=True, help="hot bath temperature")
    p.add_argument("--T2", type=float, required=True, help="cold bath temperature")
    if with_j:
        p.add_argument("--J", type=float, default=0.0, help="exchange coupling")


def _add_output_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", default="-", help="output file ('-' = stdout)")
    p.add_argument("--config", default=None,
                   help="key=value file supplying defaults; flags override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinotto",
        description="Quasi-static quantum Otto engine with two exchange-coupled spins")
    parser.add_argument("--version", action="version",
                        version=f"spinotto {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="level table at one (B, J)")
    _add_pair_flags(p)
    p.add_argument("--B", type=float, required=True, help="field magnitude")
    p.add_argument("--J", type=float, default=0.0, help="exchange coupling")
    p.add_argument("--sorted", action="store_true", help="order rows by energy")
    p.add_argument("--check-crossing", type=float, default=None, metavar="B2",
                   help="report whether lowering the field to B2 permutes levels")
    _add_output_flag(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("cycle", help="single-point cycle report")
    _add_pair_flags(p)
    _add_cycle_flags(p)
    _add_output_flag(p)
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("sweep", help="coupling sweep over one or more pairs")
    p.add_argument("--pair", action="append", metavar="S1,S2",
                   help="spin pair, repeatable (e.g. --pair 1/2,1)")
    p.add_argument("--s1", default=None)
    p.add_argument("--s2", default=None)
    _add_cycle_flags(p, with_j=False)
    p.add_argument("--j-start", type=float, default=0.0)
    p.add_argument("--j-stop", type=float, required=True)
    p.add_argument("--j-steps", type=int, required=True,
                   help="number of grid points (inclusive endpoints)")
    p.add_argument("--seed", type=int, default=0, help="echoed in metadata")
    _add_output_flag(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("coc", help="complete two-level cycle audit")
    _add_pair_flags(p)
    _add_cycle_flags(p)
    _add_output_flag(p)
    p.set_defaults(func=cmd_coc)

    p = sub.add_parser("verify", help="seeded verification suite")
    p.add_argument("--seed", type=int, default=20260)
    p.add_argument("--points", type=int, default=10000,
                   help="lemma-sweep sample count")
    p.add_argument("--oracle-points", type=int, default=20,
                   help="random (B, T, J) draws per pair for diagonalization checks")
    _add_output_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figures", help="built-in datasets with plots")
    p.add_argument("--which", default="all",
                   choices=["all", *sorted(figures.PRESETS)])
    p.add_argument("--outdir", default="figures")
    p.add_argument("--points", type=int, default=120, help="grid density")
    p.add_argument("--no-plots", action="store_true",
                   help="write delimited files only")
    p.add_argument("--config", default=None,
                   help="key=value file supplying defaults; flags override")
    p.set_defaults(func=cmd_figures)

    return parser


# ----------------------------------------------------------- config files

_TRUE_WORDS = {"1", "true", "yes", "on"}
_FALSE_WORDS = {"0", "false", "no", "off"}


def _load_config(path: str) -> list[str]:
    """Translate key=value lines into flag tokens inserted before the
    user-provided flags, so explicit flags take precedence."""
    tokens: list[str] = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line is not key=value: {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        flag = "--" + key.replace("_", "-")
        low = value.lower()
        if low in _TRUE_WORDS:
            tokens.append(flag)
        elif low in _FALSE_WORDS:
            continue
        else:
            tokens.extend([flag, value])
    return tokens


def _apply_config(argv: list[str]) -> list[str]:
    out = list(argv)
    path = None
    for i, token in enumerate(out):
        if token == "--config" and i + 1 < len(out):
            path = out[i + 1]
            del out[i:i + 2]
            break
        if token.startswith("--config="):
            path = token.split("=", 1)[1]
            del out[i]
            break
    if path is None:
        return out
    tokens = _load_config(path)
    # insert right after the subcommand token (first non-flag argument)
    for i, token in enumerate(out):
        if not token.startswith("-"):
            return out[:i + 1] + tokens + out[i + 1:]
    return out + tokens


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        argv = _apply_config(argv)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
