"""Batch command-line front end.

Subcommands:

* ``evolve``   -- time series of the pairwise measures over a time grid
* ``validate`` -- run the oracle cross-check suites, exit 0 only if green
* ``special``  -- equal-entanglement times, revival search, lab conversion
* ``rydberg``  -- dimensionless-to-microseconds conversion only

Options may come from a flat ``key = value`` config file (``--config``);
explicit command-line flags win over file entries.  Exit status is 0 on
success, 1 on usage or configuration errors, 2 on validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields

import numpy as np

from . import analysis, dynamics, measures, validation
from .bethe import CouplingConfig
from .core import reduce_pair

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2

CSV_COLUMNS = ("t", "S_ab", "S_ac", "S_bc", "C_ab", "C_ac", "C_bc", "P_a", "P_b", "P_c")
MEASURE_GROUPS = ("mi", "concurrence", "prob")


class UsageError(Exception):
    """Bad flags or config values; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt12(value: float) -> str:
    """Fixed formatting contract: 12 significant digits."""
    return f"{value:.12g}"


@dataclass
class ScenarioConfig:
    """One evolve/special scenario; defaults reproduce the published setups."""

    mode: str = "inhomogeneous"
    aa: float = 0.5
    ab: float = 0.8
    j: float = 1.0
    t_start: float = 0.0
    t_end: float = 20.0
    points: int = 2001
    measures: str = "all"
    format: str = "csv"
    out: str | None = None
    seed: int = 1
    cases: int = 200
    window: str = "8:11"
    n_max: int = 2
    c3: float = 7950.0
    r: float = 30.0
    tau: float = analysis.EQUAL_TIME_PHASE

    def selected_measures(self) -> set[str]:
        if self.measures.strip() == "all":
            return set(MEASURE_GROUPS)
        chosen = {part.strip() for part in self.measures.split(",") if part.strip()}
        bad = chosen - set(MEASURE_GROUPS)
        if bad:
            raise UsageError(f"measures: unknown selection {sorted(bad)}; "
                             f"choose from {MEASURE_GROUPS} or 'all'")
        return chosen

    def parsed_window(self) -> tuple[float, float]:
        try:
            lo, hi = (float(part) for part in self.window.split(":"))
        except ValueError:
            raise UsageError(f"window: expected LO:HI, got {self.window!r}") from None
        if not lo < hi:
            raise UsageError(f"window: needs LO < HI, got {self.window!r}")
        return lo, hi

    def validate_grid(self) -> None:
        if self.points < 2:
            raise UsageError(f"points: must be >= 2, got {self.points}")
        if not self.t_start < self.t_end:
            raise UsageError(f"t_start: must be below t_end, got "
                             f"[{self.t_start}, {self.t_end}]")

    def validate_engine(self) -> None:
        if self.mode not in ("inhomogeneous", "homogeneous"):
            raise UsageError(f"mode: must be 'inhomogeneous' or 'homogeneous', "
                             f"got {self.mode!r}")
        if self.mode == "inhomogeneous":
            if self.aa <= 0:
                raise UsageError(f"aa: must be positive, got {self.aa}")
            if self.ab <= 0:
                raise UsageError(f"ab: must be positive, got {self.ab}")
            if self.aa == self.ab:
                raise UsageError("aa: equals ab; the inhomogeneous engine needs "
                                 "unequal couplings (use --mode homogeneous)")
        elif self.j == 0:
            raise UsageError("j: must be nonzero for the homogeneous engine")

    def density_at(self, t: float):
        if self.mode == "inhomogeneous":
            return dynamics.density_inhomogeneous(CouplingConfig(self.aa, self.ab), t)
        return dynamics.density_homogeneous(self.j, t)


_FIELD_TYPES = {f.name: f.type for f in fields(ScenarioConfig)}
_INT_FIELDS = {"points", "seed", "cases", "n_max"}
_FLOAT_FIELDS = {"aa", "ab", "j", "t_start", "t_end", "c3", "r", "tau"}


def load_config_file(path: str) -> dict[str, str]:
    """Flat 'key = value' lines; '#' starts a comment; keys match the flags."""
    entries: dict[str, str] = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"config: cannot read {path}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config: {path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        entries[key.replace("-", "_")] = value
    return entries


def merge_config(args: argparse.Namespace) -> ScenarioConfig:
    """Defaults, overridden by the config file, overridden by explicit flags."""
    cfg = ScenarioConfig()
    file_entries = load_config_file(args.config) if getattr(args, "config", None) else {}
    for key, value in file_entries.items():
        if key not in _FIELD_TYPES:
            raise UsageError(f"config: unknown key {key!r}")
        _assign(cfg, key, value)
    for key in _FIELD_TYPES:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            setattr(cfg, key, flag_value)
    return cfg


def _assign(cfg: ScenarioConfig, key: str, value: str) -> None:
    try:
        if key in _INT_FIELDS:
            setattr(cfg, key, int(value))
        elif key in _FLOAT_FIELDS:
            setattr(cfg, key, float(value))
        else:
            setattr(cfg, key, value)
    except ValueError:
        raise UsageError(f"{key}: cannot parse {value!r}") from None


def scenario_rows(cfg: ScenarioConfig) -> list[dict[str, float]]:
    """One row of measure values per grid time."""
    cfg.validate_grid()
    cfg.validate_engine()
    selected = cfg.selected_measures()
    grid = np.linspace(cfg.t_start, cfg.t_end, cfg.points)
    rows = []
    for t in grid:
        rho = cfg.density_at(float(t))
        row = {"t": float(t)}
        for pair in ("ab", "ac", "bc"):
            row[f"S_{pair}"] = (measures.mutual_information(rho, pair)
                                if "mi" in selected else float("nan"))
            row[f"C_{pair}"] = (measures.concurrence(reduce_pair(rho, pair))
                                if "concurrence" in selected else float("nan"))
        probs = measures.probabilities(rho)
        for q, value in zip("abc", probs):
            row[f"P_{q}"] = value if "prob" in selected else float("nan")
        rows.append(row)
    return rows


def render_csv(rows: list[dict[str, float]]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(fmt12(row[col]) for col in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def render_json_rows(rows: list[dict[str, float]]) -> str:
    rounded = [{col: float(fmt12(row[col])) for col in CSV_COLUMNS} for row in rows]
    return json.dumps(rounded, indent=2) + "\n"


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise UsageError(f"out: cannot write {out}: {exc}") from None


def run_evolve(cfg: ScenarioConfig) -> int:
    rows = scenario_rows(cfg)
    if cfg.format not in ("csv", "json"):
        raise UsageError(f"format: must be 'csv' or 'json', got {cfg.format!r}")
    text = render_csv(rows) if cfg.format == "csv" else render_json_rows(rows)
    _write_output(text, cfg.out)
    return EXIT_OK


def run_validate(cfg: ScenarioConfig) -> int:
    if cfg.cases < 1:
        raise UsageError(f"cases: must be >= 1, got {cfg.cases}")
    run = validation.run_all(cfg.seed, cfg.cases)
    _write_output(json.dumps(run.to_dict(), indent=2) + "\n", cfg.out)
    if run.passed:
        print(f"validate: all {len(run.checks)} checks passed "
              f"(seed={cfg.seed}, cases={cfg.cases})", file=sys.stderr)
        return EXIT_OK
    worst = run.failures()[0]
    print(f"validate: FAILED {worst.name}: max deviation {worst.max_deviation:.3e} "
          f"> {worst.tolerance:.1e} (worst case: {worst.worst_case})", file=sys.stderr)
    return EXIT_VALIDATION


def special_report(cfg: ScenarioConfig) -> dict:
    cfg.validate_engine()
    window = cfg.parsed_window()
    if cfg.n_max < 0:
        raise UsageError(f"n_max: must be >= 0, got {cfg.n_max}")

    entries = []
    for t in analysis.equal_entanglement_times(cfg.j, cfg.n_max):
        rho = dynamics.density_homogeneous(cfg.j, t)
        entries.append({
            "t": t,
            "concurrences": {p: measures.concurrence(reduce_pair(rho, p))
                             for p in ("ab", "ac", "bc")},
            "mutual_informations": {p: measures.mutual_information(rho, p)
                                    for p in ("ab", "ac", "bc")},
        })

    revival_cfg = CouplingConfig(cfg.aa, cfg.ab)
    revival = analysis.find_revival(revival_cfg, window, max(cfg.points, 100))
    params = analysis.RydbergParams(cfg.c3, cfg.r)
    return {
        "inputs": {"j": cfg.j, "n_max": cfg.n_max, "aa": cfg.aa, "ab": cfg.ab,
                   "window": list(window), "grid_points": max(cfg.points, 100),
                   "c3_mhz_um3": cfg.c3, "r_um": cfg.r, "tau": cfg.tau},
        "equal_entanglement_times": entries,
        "revival": {"t_star": revival.t_star, "prob_c": revival.prob_c,
                    "prob_gap_ab": revival.prob_gap_ab, "fidelity": revival.fidelity},
        "rydberg": {"exchange_mhz": params.exchange_mhz,
                    "time_us": analysis.rydberg_time(params, cfg.tau)},
        "tolerances": {"revival_refine": analysis.REFINE_TOL},
    }


def run_special(cfg: ScenarioConfig) -> int:
    report = special_report(cfg)
    _write_output(json.dumps(report, indent=2) + "\n", cfg.out)
    return EXIT_OK


def run_rydberg(cfg: ScenarioConfig) -> int:
    params = analysis.RydbergParams(cfg.c3, cfg.r)
    report = {"c3_mhz_um3": cfg.c3, "r_um": cfg.r, "tau": cfg.tau,
              "exchange_mhz": params.exchange_mhz,
              "time_us": analysis.rydberg_time(params, cfg.tau)}
    _write_output(json.dumps(report, indent=2) + "\n", cfg.out)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="triqubit",
                     description="Exact entanglement dynamics of three interacting qubits")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--out", help="output path ('-' or omitted: stdout)")

    p_evolve = sub.add_parser("evolve", help="emit a measure time series over a grid")
    add_common(p_evolve)
    p_evolve.add_argument("--mode", choices=("inhomogeneous", "homogeneous"))
    p_evolve.add_argument("--aa", type=float, help="coupling of the a-c bond")
    p_evolve.add_argument("--ab", type=float, help="coupling of the b-c bond")
    p_evolve.add_argument("--j", type=float, help="homogeneous coupling")
    p_evolve.add_argument("--t-start", dest="t_start", type=float)
    p_evolve.add_argument("--t-end", dest="t_end", type=float)
    p_evolve.add_argument("--points", type=int)
    p_evolve.add_argument("--measures", help="'all' or comma list of mi,concurrence,prob")
    p_evolve.add_argument("--format", choices=("csv", "json"))

    p_validate = sub.add_parser("validate", help="run the oracle cross-check suites")
    add_common(p_validate)
    p_validate.add_argument("--seed", type=int)
    p_validate.add_argument("--cases", type=int)

    p_special = sub.add_parser("special", help="equal-entanglement times, revival, lab units")
    add_common(p_special)
    p_special.add_argument("--mode", choices=("inhomogeneous", "homogeneous"))
    p_special.add_argument("--aa", type=float)
    p_special.add_argument("--ab", type=float)
    p_special.add_argument("--j", type=float)
    p_special.add_argument("--n-max", dest="n_max", type=int)
    p_special.add_argument("--points", type=int, help="revival scan grid size")
    p_special.add_argument("--window", help="revival search window LO:HI")
    p_special.add_argument("--c3", type=float, help="C3 in MHz*um^3")
    p_special.add_argument("--r", type=float, help="atom spacing in um")
    p_special.add_argument("--tau", type=float, help="dimensionless time to convert")

    p_rydberg = sub.add_parser("rydberg", help="convert dimensionless time to microseconds")
    add_common(p_rydberg)
    p_rydberg.add_argument("--c3", type=float)
    p_rydberg.add_argument("--r", type=float)
    p_rydberg.add_argument("--tau", type=float)
    return parser


_COMMANDS = {"evolve": run_evolve, "validate": run_validate,
             "special": run_special, "rydberg": run_rydberg}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = merge_config(args)
        return _COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"triqubit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"triqubit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
