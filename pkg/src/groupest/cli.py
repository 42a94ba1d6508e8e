"""Command-line front end: kappa curves, finite-cut tables, optimal input
states, and Monte-Carlo protocol reports, serialized as CSV or JSON.

Every command produces an OutputRecord carrying a schema version, the
resolved parameters, named columns, and numeric rows.  Rows that cannot be
computed (e.g. an infeasible energy) become error entries: they are
reported as machine-readable JSON on stderr and make the exit code
nonzero; the remaining rows are still emitted.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import GroupestError
from .groups import (
    MinErrorReport,
    WaveFunction,
    heisenberg_kappa,
    normalized,
    real_line_kappa,
    real_line_positive_kappa,
    so3_finite_cut_min,
    so3_kappa,
    so3_kappa_large_E,
    so3_kappa_small_expansions,
    so3_tensor_qubit_asymptote,
    su2_finite_cut_min,
    su2_kappa,
    su2_kappa_large_E,
    su2_kappa_small_E,
    u1_finite_cut_min,
    u1_kappa,
    u1_kappa_large_E,
    u1_kappa_small_E,
)
from .simulate import (
    ProtocolConfig,
    predicted_e_phi,
    predicted_e_phi_group,
    run_group_protocol,
    run_u1_protocol,
    schur_walk,
)

SCHEMA_VERSION = "1"


# ------------------------------------------------------------------ records

@dataclass
class OutputRecord:
    command: str
    parameters: dict
    columns: list
    rows: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def add_row(self, *values):
        if len(values) != len(self.columns):
            raise GroupestError("row length does not match the columns")
        clean = []
        for v in values:
            if isinstance(v, (np.floating, float)):
                v = float(v)
                if not math.isfinite(v):
                    raise GroupestError("non-finite value in output row")
            elif isinstance(v, (np.integer, int)):
                v = int(v)
            clean.append(v)
        self.rows.append(clean)

    def add_error(self, where: str, message: str):
        self.errors.append({"where": where, "message": message})


def _fmt_csv(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render_csv(rec: OutputRecord) -> str:
    lines = [",".join(rec.columns)]
    for row in rec.rows:
        lines.append(",".join(_fmt_csv(v) for v in row))
    return "\n".join(lines) + "\n"


def render_json(rec: OutputRecord) -> str:
    payload = {
        "schema_version": rec.schema_version,
        "command": rec.command,
        "parameters": rec.parameters,
        "columns": rec.columns,
        "rows": rec.rows,
    }
    return json.dumps(payload, allow_nan=False, indent=2, sort_keys=False) + "\n"


def emit(rec: OutputRecord, fmt: str, out: str | None) -> int:
    text = render_csv(rec) if fmt == "csv" else render_json(rec)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if rec.errors:
        sys.stderr.write(
            json.dumps({"command": rec.command, "errors": rec.errors}) + "\n"
        )
        return 1
    return 0


def gm_threads() -> int:
    raw = os.environ.get("GM_THREADS", "")
    if raw.strip():
        return max(1, int(raw))
    return min(8, os.cpu_count() or 1)


def _parallel(worker, items):
    """Map over a grid with at most GM_THREADS workers; order preserved."""
    with ThreadPoolExecutor(max_workers=gm_threads()) as pool:
        return list(pool.map(worker, items))


# ------------------------------------------------------------- grid parsing

def parse_energy_grid(args) -> list[float]:
    if args.energy_grid:
        spec = args.energy_grid
        if ":" in spec:
            lo, hi, count = spec.split(":")
            return [float(x) for x in np.linspace(float(lo), float(hi), int(count))]
        return [float(x) for x in spec.split(",")]
    if args.energy is not None:
        return [args.energy]
    raise GroupestError("need --energy or --energy-grid")


def parse_cut_grid(spec: str) -> list[int]:
    return [int(x) for x in spec.split(",")]


# ------------------------------------------------------------------- kappa

KAPPA_COLUMNS = ["E", "kappa", "s_E", "approx_large", "approx_small",
                 "rel_err_large", "rel_err_small"]


def _kappa_exact(group: str, factor: str, E: float) -> MinErrorReport:
    if group == "u1":
        return u1_kappa(E)
    if group == "su2":
        return su2_kappa(E)
    if group == "so3":
        return so3_kappa(E, factor)
    if group == "real":
        return real_line_kappa(E)
    if group == "real_positive":
        return real_line_positive_kappa(E)
    if group == "heisenberg":
        return heisenberg_kappa(E)
    raise GroupestError(f"unknown kappa group {group!r}")


def _kappa_approx(group: str, factor: str, E: float, exact: float):
    if group == "u1":
        return u1_kappa_large_E(E), u1_kappa_small_E(E)
    if group == "su2":
        return su2_kappa_large_E(E), su2_kappa_small_E(E)
    if group == "so3":
        return so3_kappa_large_E(E), so3_kappa_small_expansions(E, factor)
    # closed-form groups: the exact value doubles as both expansions
    return exact, exact


def cmd_kappa(args) -> int:
    grid = parse_energy_grid(args)
    if sorted(grid) != grid or not grid:
        raise GroupestError("energy grid must be nonempty and ascending")
    rec = OutputRecord(
        command="kappa",
        parameters={"group": args.group, "factor": args.factor,
                    "grid": grid, "threads": gm_threads()},
        columns=KAPPA_COLUMNS,
    )

    def worker(E: float):
        try:
            res = _kappa_exact(args.group, args.factor, E)
            large, small = _kappa_approx(args.group, args.factor, E, res.kappa)
            denom = abs(res.kappa) if res.kappa != 0 else 1.0
            return (E, res.kappa, res.s_E if res.s_E is not None else 0.0,
                    large, small,
                    abs(large - res.kappa) / denom,
                    abs(small - res.kappa) / denom)
        except GroupestError as exc:
            return (E, exc)

    for item in _parallel(worker, grid):
        if len(item) == 2 and isinstance(item[1], Exception):
            rec.add_error(f"E={item[0]}", str(item[1]))
        else:
            rec.add_row(*item)
    return emit(rec, args.format, args.out)


# --------------------------------------------------------------------- cut

CUT_COLUMNS = ["n", "kappa", "n2_kappa"]


def _cut_value(group: str, sector: str, n: int) -> float:
    if group == "u1":
        return u1_finite_cut_min(n).kappa
    if group == "su2":
        return su2_finite_cut_min(n).kappa
    if group == "so3":
        return so3_finite_cut_min(n, sector).kappa
    if group == "qubits":
        return so3_tensor_qubit_asymptote(n) / n ** 2
    raise GroupestError(f"unknown cut group {group!r}")


def cmd_cut(args) -> int:
    grid = parse_cut_grid(args.cut)
    rec = OutputRecord(
        command="cut",
        parameters={"group": args.group, "sector": args.sector,
                    "grid": grid, "threads": gm_threads()},
        columns=CUT_COLUMNS,
    )

    def worker(n: int):
        try:
            kappa = _cut_value(args.group, args.sector, n)
            return (n, kappa, n ** 2 * kappa)
        except GroupestError as exc:
            return (n, exc)

    for item in _parallel(worker, grid):
        if len(item) == 2 and isinstance(item[1], Exception):
            rec.add_error(f"n={item[0]}", str(item[1]))
        else:
            rec.add_row(*item)
    return emit(rec, args.format, args.out)


# ------------------------------------------------------------------- state

STATE_COLUMNS = ["label", "amplitude", "weight"]


def _state_report(args) -> MinErrorReport:
    group, factor = args.group, args.factor
    if args.cut is not None:
        n = int(args.cut)
        if group == "u1":
            return u1_finite_cut_min(n)
        if group == "su2":
            return su2_finite_cut_min(n)
        if group == "so3":
            return so3_finite_cut_min(n, args.sector)
        raise GroupestError(f"group {group!r} has no finite-cut state")
    E = args.energy
    if E is None:
        raise GroupestError("need --energy or --cut")
    return _kappa_exact(group, factor, E)


def cmd_state(args) -> int:
    rec = OutputRecord(
        command="state",
        parameters={"group": args.group, "factor": args.factor,
                    "sector": args.sector, "energy": args.energy,
                    "cut": args.cut},
        columns=STATE_COLUMNS,
    )
    try:
        report = _state_report(args)
        state = report.optimal_state
        if state is None:
            raise GroupestError(
                f"no optimal input state is defined for group {args.group!r}"
            )
        norm = float(np.sum(state.measure_weights * state.amplitudes ** 2))
        rec.parameters.update({"kappa": report.kappa, "method": report.method,
                               "norm": norm})
        for lab, amp, w in zip(state.labels, state.amplitudes,
                               state.measure_weights):
            rec.add_row(float(lab), float(amp), float(w))
    except GroupestError as exc:
        rec.add_error("state", str(exc))
    return emit(rec, args.format, args.out)


# ---------------------------------------------------------------- simulate

def binomial_phase_state(l: int) -> WaveFunction:
    """Centred binomial phase state with E_phi = l/2."""
    k = np.arange(-l, l + 1, dtype=float)
    p = np.array([math.comb(2 * l, int(i) + l) for i in k]) / 4.0 ** l
    return normalized(k, np.sqrt(p), np.ones_like(p))


def binomial_rotation_state(l: int, parity: str) -> WaveFunction:
    """Binomial mixture over angular-momentum blocks.

    parity 'both' spreads over j = 0..l in half-integer steps (needed for
    full SU(2) identifiability); 'integer'/'half_integer' restrict to one
    parity as the SO(3) factors require.
    """
    if parity == "both":
        j = np.arange(0, 2 * l + 1, dtype=float) / 2.0
        p = np.array([math.comb(2 * l, i) for i in range(2 * l + 1)]) / 4.0 ** l
    elif parity == "integer":
        j = np.arange(0, l + 1, dtype=float)
        p = np.array([math.comb(l, i) for i in range(l + 1)]) / 2.0 ** l
    elif parity == "half_integer":
        j = np.arange(0, l + 1, dtype=float) + 0.5
        p = np.array([math.comb(l, i) for i in range(l + 1)]) / 2.0 ** l
    else:
        raise GroupestError(f"unknown parity {parity!r}")
    dims = 2.0 * j + 1.0
    return normalized(j, np.sqrt(p / dims), dims)


def _simulate_state(group: str, energy: float) -> WaveFunction:
    if group == "u1":
        return binomial_phase_state(max(1, round(2 * energy)))
    l = max(1, round(energy))
    if group == "su2":
        return binomial_rotation_state(l, "both")
    if group == "so3_plus":
        return binomial_rotation_state(l, "integer")
    if group == "so3_minus":
        return binomial_rotation_state(l, "half_integer")
    raise GroupestError(f"unknown protocol group {group!r}")


SCALED_TARGET = {
    "u1": lambda e: 1.0 / (8.0 * e),
    "su2": lambda e: 9.0 / (32.0 * e),
    "so3_plus": lambda e: 9.0 / (8.0 * e),
    "so3_minus": lambda e: 9.0 / (8.0 * e),
}

SIM_COLUMNS = ["samples", "trials", "risk", "std_error", "scaled_risk",
               "scaled_target", "fisher_numeric", "fisher_predicted",
               "excluded_flat"]

SCHUR_COLUMNS = ["qubits", "ks_distance", "mean_energy", "scaled_energy"]


def cmd_simulate(args) -> int:
    if args.group == "schur":
        rec = OutputRecord(
            command="simulate",
            parameters={"group": "schur", "qubits": args.samples},
            columns=SCHUR_COLUMNS,
        )
        try:
            walk = schur_walk(args.samples)
            rec.add_row(walk.qubits, walk.ks_distance, walk.mean_energy,
                        walk.mean_energy / walk.qubits)
        except GroupestError as exc:
            rec.add_error("schur", str(exc))
        return emit(rec, args.format, args.out)

    rec = OutputRecord(
        command="simulate",
        parameters={"group": args.group, "energy": args.energy,
                    "samples": args.samples, "trials": args.trials,
                    "seed": args.seed},
        columns=SIM_COLUMNS,
    )
    try:
        state = _simulate_state(args.group, args.energy if args.energy is not None else 2.0)
        config = ProtocolConfig(
            group=args.group, state=state,
            true_parameter=[0.4] if args.group == "u1" else [0.3, -0.2, 0.5],
            samples_per_trial=args.samples, trials=args.trials, seed=args.seed,
        )
        if args.group == "u1":
            report = run_u1_protocol(config)
            e_phi = predicted_e_phi(state)
            fisher_numeric = float(report.fisher_numeric)
            fisher_predicted = float(report.fisher_predicted)
        else:
            report = run_group_protocol(config)
            e_phi = predicted_e_phi_group(state)
            # per-axis values; both matrices are multiples of the identity
            fisher_numeric = float(np.trace(report.fisher_numeric) / 3.0)
            fisher_predicted = float(np.trace(report.fisher_predicted) / 3.0)
        rec.parameters["e_phi"] = e_phi
        rec.add_row(report.samples_per_trial, report.trials,
                    report.risk_estimate, report.std_error,
                    report.samples_per_trial * report.risk_estimate,
                    SCALED_TARGET[args.group](e_phi),
                    fisher_numeric, fisher_predicted, report.excluded_flat)
    except GroupestError as exc:
        rec.add_error("simulate", str(exc))
    return emit(rec, args.format, args.out)


# -------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupest",
        description="Minimum estimation error for group transformations "
                    "under an energy constraint.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None)

    p = sub.add_parser("kappa", help="exact and asymptotic kappa(E) curves")
    p.add_argument("--group", required=True,
                   choices=("u1", "su2", "so3", "real", "real_positive",
                            "heisenberg"))
    p.add_argument("--energy", type=float, default=None)
    p.add_argument("--energy-grid", default=None,
                   help="lo:hi:count or comma-separated values")
    p.add_argument("--factor", choices=("plus", "minus"), default="plus")
    common(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("cut", help="minimum error under a representation cut")
    p.add_argument("--group", required=True,
                   choices=("u1", "su2", "so3", "qubits"))
    p.add_argument("--cut", required=True,
                   help="comma-separated ladder sizes (or qubit counts)")
    p.add_argument("--sector", choices=("integer", "half_integer"),
                   default="integer")
    common(p)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("state", help="optimal input state")
    p.add_argument("--group", required=True,
                   choices=("u1", "su2", "so3", "real", "real_positive",
                            "heisenberg"))
    p.add_argument("--energy", type=float, default=None)
    p.add_argument("--cut", type=int, default=None)
    p.add_argument("--sector", choices=("integer", "half_integer"),
                   default="integer")
    p.add_argument("--factor", choices=("plus", "minus"), default="plus")
    common(p)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("simulate", help="Monte-Carlo protocol validation")
    p.add_argument("--group", required=True,
                   choices=("u1", "su2", "so3_plus", "so3_minus", "schur"))
    p.add_argument("--energy", type=float, default=None,
                   help="selects the binomial input-state family")
    p.add_argument("--samples", type=int, default=400,
                   help="per-trial sample count (schur: qubit count)")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GroupestError as exc:
        sys.stderr.write(json.dumps({"command": args.subcommand,
                                     "errors": [{"where": "cli",
                                                 "message": str(exc)}]}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
