"""Command-line front end: ``steermub {analyze,sweep,verify,oracle}``.

Exit codes: 0 success, 1 parse/validation error, 2 verification failure,
3 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import verify as verify_mod
from .errors import ConvergenceFailure, ParseError, SteerMubError
from .qstate import (
    CorrelationVector,
    bell_diagonal_from_c,
    bloch_decompose,
    canonical_form,
    is_bell_diagonal,
    sample_tetrahedron,
    validate_density_matrix,
)
from .scmub import c2_closed, c2_numeric, c3_closed, c3_numeric
from .steering import cjwr_maximize, f2_closed, f3_closed, steering_measure

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_CONVERGENCE = 0, 1, 2, 3

DEFAULTS = {
    "seed": 0,
    "samples": None,
    "grid": None,
    "format": "csv",
    "out": None,
    "input": None,
    "c": None,
    "family": "random",
    "axis": None,
    "p_start": 0.0,
    "p_end": 1.0,
    "p_step": 0.01,
    "numeric": False,
}
COMMAND_DEFAULTS = {
    "sweep": {"samples": 100, "grid": 11},
    "verify": {"samples": 1000, "grid": 1000},
    "oracle": {"samples": 50},
}

F_TOL = 1e-6
C_TOL = 1e-4


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return "%.12g" % (float(x) + 0.0)  # no "-0"


def _jsonable(x):
    if isinstance(x, (float, np.floating)):
        return float(fmt(x))
    return x


# ---- state input -----------------------------------------------------------

def parse_state(obj):
    """Decode ``{"matrix": [[[re, im], ...]]}`` or ``{"c": [c1, c2, c3]}``."""
    if not isinstance(obj, dict):
        raise ParseError("state must be a JSON object")
    if "c" in obj:
        try:
            return CorrelationVector.from_any([float(v) for v in obj["c"]])
        except (TypeError, ValueError) as exc:
            if isinstance(exc, SteerMubError):
                raise
            raise ParseError(f"bad correlation vector: {exc}") from None
    if "matrix" in obj:
        try:
            rows = obj["matrix"]
            M = np.array([[complex(float(e[0]), float(e[1])) for e in row] for row in rows])
        except (TypeError, ValueError, IndexError) as exc:
            raise ParseError(f"bad matrix entry: {exc}") from None
        if M.shape != (4, 4):
            raise ParseError(f"matrix must be 4x4, got {M.shape}")
        return validate_density_matrix(M)
    raise ParseError('state object needs a "matrix" or "c" key')


def parse_c_flag(text):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise ParseError(f"--c expects three comma-separated numbers, got {text!r}") from None
    if len(vals) != 3:
        raise ParseError(f"--c expects three numbers, got {len(vals)}")
    return CorrelationVector(*vals)


def load_state(cfg):
    if cfg["c"] is not None:
        return parse_c_flag(cfg["c"])
    if cfg["input"] is None:
        raise ParseError("analyze needs --input or --c")
    try:
        with open(cfg["input"]) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{cfg['input']}: {exc}") from None
    except OSError as exc:
        raise ParseError(str(exc)) from None
    return parse_state(obj)


# ---- output ----------------------------------------------------------------

def render(rows, fields, fmt_name):
    if fmt_name == "json":
        return json.dumps([{k: _jsonable(r.get(k)) for k in fields} for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([fmt(r.get(k)) for k in fields])
    return buf.getvalue()


def emit(text, path):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---- commands --------------------------------------------------------------

def analyze_state(state, seed=0):
    """Steering and SCMUB values for a correlation vector or density matrix."""
    if isinstance(state, CorrelationVector):
        cv, rho, closed = state, None, True
        bell_diagonal_from_c(cv)  # rejects vectors outside the tetrahedron
    else:
        rho = state
        _, _, cv = canonical_form(rho)
        closed = is_bell_diagonal(rho)
        if closed:
            # keep the signed diagonal rather than the SVD-sorted one
            cv = CorrelationVector(*np.clip(np.diag(bloch_decompose(rho).T), -1, 1))
    out = {"c1": cv.c1, "c2": cv.c2, "c3": cv.c3}
    if closed:
        F2, F3 = f2_closed(cv), f3_closed(cv)
        C2, C3 = c2_closed(cv), c3_closed(cv)
        out["method"] = "closed"
    else:
        F2 = cjwr_maximize(rho, 2, seed=seed).F_value
        F3 = cjwr_maximize(rho, 3, seed=seed).F_value
        C2 = c2_numeric(rho, seed=seed).value
        C3 = c3_numeric(rho, seed=seed).value
        out["method"] = "numeric"
    out.update(F2=F2, F3=F3, S2=steering_measure(F2, 2), S3=steering_measure(F3, 3), C2=C2, C3=C3)
    return out


ANALYZE_FIELDS = ("c1", "c2", "c3", "method", "F2", "F3", "S2", "S3", "C2", "C3")


def cmd_analyze(cfg):
    rec = analyze_state(load_state(cfg), seed=cfg["seed"])
    emit(render([rec], ANALYZE_FIELDS, cfg["format"]), cfg["out"])
    return EXIT_OK


def sweep_points(cfg):
    fam = cfg["family"]
    if fam == "werner":
        start, end, step = cfg["p_start"], cfg["p_end"], cfg["p_step"]
        if step <= 0 or end < start:
            raise ParseError("Werner sweep needs p_step > 0 and p_end >= p_start")
        count = int(np.floor((end - start) / step + 1e-9)) + 1
        ps = [start + i * step for i in range(count)]
        return np.array([[-p, -p, -p] for p in ps])
    if fam == "grid":
        n = cfg["grid"]
        if n < 2:
            raise ParseError("grid sweep needs --grid >= 2")
        line = np.linspace(-1.0, 1.0, n)
        if cfg["axis"]:
            k = {"c1": 0, "c2": 1, "c3": 2}[cfg["axis"]]
            pts = np.zeros((n, 3))
            pts[:, k] = line
            return pts
        g = np.array(np.meshgrid(line, line, line, indexing="ij")).reshape(3, -1).T
        ok = [CorrelationVector(*c).tetrahedron_eigenvalues().min() >= -1e-12 for c in g]
        return g[np.array(ok)]
    if fam == "random":
        return sample_tetrahedron(np.random.default_rng(cfg["seed"]), cfg["samples"])
    raise ParseError(f"unknown family {fam!r}")


def cmd_sweep(cfg):
    rows = []
    for c in sweep_points(cfg):
        rec = verify_mod.relation_residuals(c).as_dict()
        if cfg["numeric"]:
            rho = bell_diagonal_from_c(c)
            rec["C2_numeric"] = c2_numeric(rho, seed=cfg["seed"]).value
            rec["C3_numeric"] = c3_numeric(rho, seed=cfg["seed"]).value
        rows.append(rec)
    fields = verify_mod.SweepRecord.CSV_FIELDS
    if cfg["format"] == "json":
        fields = fields + ("C2_numeric", "C3_numeric")
    emit(render(rows, fields, cfg["format"]), cfg["out"])
    return EXIT_OK


def cmd_verify(cfg):
    summary = verify_mod.run_verification(cfg["samples"], cfg["grid"], cfg["seed"])
    mono = summary.monotonicity
    lines = [
        f"samples            {summary.samples}",
        f"max residual14     {fmt(summary.max_residual14)}",
        f"max residual17     {fmt(summary.max_residual17)}",
        f"min fwd diff C2(F2) {fmt(mono.min_forward_diff_2)}",
        f"min fwd diff C3(F3) {fmt(mono.min_forward_diff_3)}",
        f"steerable pairs    {mono.steerable_pairs_2} (n=2), {mono.steerable_pairs_3} (n=3)",
        f"order violations   {mono.order_violations_2} (n=2), {mono.order_violations_3} (n=3)",
        f"S normalization    {'ok' if summary.s_normalized else 'VIOLATED'}",
    ]
    if summary.error:
        lines.append(f"error              {summary.error}")
    lines.append("PASS" if summary.passed else "FAIL")
    emit("\n".join(lines) + "\n", cfg["out"])
    return EXIT_OK if summary.passed else EXIT_VERIFY


ORACLE_FIELDS = ("c1", "c2", "c3", "dF2", "dF3", "dC2", "dC3", "flag")


def oracle_row(c, seed=0):
    rho = bell_diagonal_from_c(c)
    row = {"c1": c[0], "c2": c[1], "c3": c[2], "flag": ""}
    try:
        row["dF2"] = abs(cjwr_maximize(rho, 2, seed=seed).F_value - f2_closed(c))
        row["dF3"] = abs(cjwr_maximize(rho, 3, seed=seed).F_value - f3_closed(c))
        row["dC2"] = abs(c2_numeric(rho, seed=seed).value - c2_closed(c))
        row["dC3"] = abs(c3_numeric(rho, seed=seed).value - c3_closed(c))
    except ConvergenceFailure as exc:
        row["flag"] = f"convergence: {exc}"
    return row


def cmd_oracle(cfg):
    if cfg["c"] is not None:
        pts = np.array([parse_c_flag(cfg["c"]).as_array()])
    else:
        if cfg["samples"] < 1:
            raise ParseError("--samples must be >= 1")
        pts = sample_tetrahedron(np.random.default_rng(cfg["seed"]), cfg["samples"])
    rows = [oracle_row(c, cfg["seed"]) for c in pts]
    emit(render(rows, ORACLE_FIELDS, cfg["format"]), cfg["out"])
    good = [r for r in rows if not r["flag"]]
    dF = max((max(r["dF2"], r["dF3"]) for r in good), default=0.0)
    dC = max((max(r["dC2"], r["dC3"]) for r in good), default=0.0)
    print(f"max F-deviation {fmt(dF)} (tol {F_TOL:g}); max C-deviation {fmt(dC)} (tol {C_TOL:g})",
          file=sys.stderr)
    if len(good) < len(rows):
        return EXIT_CONVERGENCE
    return EXIT_OK if dF <= F_TOL and dC <= C_TOL else EXIT_VERIFY


COMMANDS = {"analyze": cmd_analyze, "sweep": cmd_sweep, "verify": cmd_verify, "oracle": cmd_oracle}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of option defaults (flags win)")
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--grid", type=int)
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--out")
    common.add_argument("--input")
    common.add_argument("--c", help='inline correlation vector "c1,c2,c3"')

    p = argparse.ArgumentParser(prog="steermub", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="measures for one state")
    sw = sub.add_parser("sweep", parents=[common], help="table over a family of states")
    sw.add_argument("--family", choices=("werner", "grid", "random"))
    sw.add_argument("--axis", choices=("c1", "c2", "c3"), help="grid along one axis only")
    sw.add_argument("--p-start", dest="p_start", type=float)
    sw.add_argument("--p-end", dest="p_end", type=float)
    sw.add_argument("--p-step", dest="p_step", type=float)
    sw.add_argument("--numeric", action="store_const", const=True,
                    help="also optimise C2/C3 numerically (JSON output only)")
    sub.add_parser("verify", parents=[common], help="check the relations and monotonicity")
    sub.add_parser("oracle", parents=[common], help="numeric optimisers vs closed forms")
    return p


def resolve_config(args):
    cfg = dict(DEFAULTS)
    cfg.update({k: v for k, v in COMMAND_DEFAULTS.get(args.command, {}).items()})
    if args.config:
        try:
            with open(args.config) as fh:
                file_cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"config {args.config}: {exc}") from None
        unknown = set(file_cfg) - set(DEFAULTS)
        if unknown:
            raise ParseError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(file_cfg)
    for k, v in vars(args).items():
        if k in cfg and v is not None:
            cfg[k] = v
    if cfg["samples"] is not None and cfg["samples"] < 1:
        raise ParseError("--samples must be >= 1")
    return cfg


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](cfg)
    except ConvergenceFailure as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (SteerMubError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
