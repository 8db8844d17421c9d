"""Command-line front end.

Subcommands: factor, verify, hessenberg, srcheck, moments-echo.  Rationals on
the command line and in every output use the "p/q" token form; decimal
columns are display-only.  Exit codes: 0 success, 1 configuration or input
errors, 2 no bidiagonal factorisation (the diagnostic names the vanishing
coefficient), 3 singular leading minor (the diagnostic names the shifted
system and block size), 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .alphas import AlphaSequence
from .closedforms import closed_form_alphas
from .errors import (
    DegenerateParameters,
    MomentTableExhausted,
    MopfactError,
    NoBidiagonalFactorisation,
    SingularLeadingMinor,
)
from .eulergauss import euler_gauss
from .gaussborel import MomentMatrixSet, alphas_from_lu, alphas_from_minors, hessenberg_from_lu
from .hessenberg import bands_matrix, gamma_coverage, gamma_expand
from .lattice import PathWeightOracle, modified_sr, production_check
from .parallel import parallel_map
from .rationals import decimal_str, format_rational, parse_rational
from .systems import JacobiPineiro, LaguerreFirstKind, SystemSpec, load_custom_system, moment

METHODS = ("gauss-borel", "minors", "bcf", "closed-form")


class _Parser(argparse.ArgumentParser):
    # The spec'd exit-code contract reserves 1 for configuration errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    system: SystemSpec
    builtin: bool
    count: int = 10
    methods: tuple[str, ...] = ()
    fmt: str = "pretty"
    out: str | None = None
    size: int = 5
    n_max: int = 3
    k_max: int = 3


def _parse_rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(tok) for tok in text.split(","))


def _build_system(args) -> tuple[SystemSpec, bool]:
    if args.moments:
        spec = load_custom_system(args.moments)
        if args.r is not None and args.r != spec.r:
            raise ValueError(f"--r {args.r} contradicts moment file with r={spec.r}")
        return spec, False
    if not args.system:
        raise ValueError("either --system or --moments is required")
    if args.a is None:
        raise ValueError("--a is required for built-in systems")
    a = _parse_rational_list(args.a)
    if args.r is not None and args.r != len(a):
        raise ValueError(f"--r {args.r} contradicts --a with {len(a)} entries")
    if args.system == "jacobi-pineiro":
        if args.b is None:
            raise ValueError("--b is required for the jacobi-pineiro system")
        return JacobiPineiro(a=a, b=parse_rational(args.b)), True
    if args.b is not None:
        raise ValueError("--b applies only to the jacobi-pineiro system")
    return LaguerreFirstKind(a=a), True


def _select_methods(raw: str | None, builtin: bool) -> tuple[str, ...]:
    if raw is None or raw == "all":
        return METHODS if builtin else METHODS[:3]
    chosen = []
    for tok in raw.split(","):
        if tok not in METHODS:
            raise ValueError(f"unknown method {tok!r}; choose from {', '.join(METHODS)} or all")
        if tok == "closed-form" and not builtin:
            raise ValueError("closed-form applies only to built-in systems")
        if tok not in chosen:
            chosen.append(tok)
    return tuple(chosen)


def _config(args) -> RunConfig:
    system, builtin = _build_system(args)
    cfg = RunConfig(system=system, builtin=builtin)
    cfg.count = args.count
    cfg.fmt = args.format
    cfg.out = args.out
    cfg.methods = _select_methods(getattr(args, "method", None), builtin)
    for name in ("size", "nmax", "kmax"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, {"size": "size", "nmax": "n_max", "kmax": "k_max"}[name], getattr(args, name))
    return cfg


def _run_methods(cfg: RunConfig) -> list[AlphaSequence]:
    mset = None
    if "gauss-borel" in cfg.methods or "minors" in cfg.methods:
        mset = MomentMatrixSet.for_count(cfg.system, cfg.count)

    def run(name: str) -> AlphaSequence:
        if name == "gauss-borel":
            return alphas_from_lu(mset, cfg.count)
        if name == "minors":
            return alphas_from_minors(mset, cfg.count)
        if name == "bcf":
            return euler_gauss(cfg.system, cfg.count)
        return closed_form_alphas(cfg.system, cfg.count)

    return parallel_map(run, cfg.methods)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _alpha_payload(cfg: RunConfig, seq: AlphaSequence) -> dict:
    return {
        "r": cfg.system.r,
        "method": seq.method,
        "valid_through": seq.valid_through,
        "alphas": [
            {"n": n, "value": format_rational(v)} for n, v in enumerate(seq.values)
        ],
        "decimal": [float(v) for v in seq.values],
    }


def cmd_factor(cfg: RunConfig) -> int:
    results = _run_methods(cfg)
    if cfg.fmt == "json":
        _emit(cfg, json.dumps([_alpha_payload(cfg, s) for s in results], indent=2) + "\n")
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "method", "value", "decimal"])
        for n in range(cfg.count + 1):
            for seq in results:
                writer.writerow([n, seq.method, format_rational(seq[n]), decimal_str(seq[n])])
        _emit(cfg, buf.getvalue())
    else:
        lines = [f"alpha coefficients, r={cfg.system.r}, n = 0..{cfg.count}"]
        for seq in results:
            lines.append(f"  [{seq.method}]")
            for n, v in enumerate(seq.values):
                lines.append(f"    alpha_{n} = {format_rational(v)} ({decimal_str(v, 12)})")
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if len(cfg.methods) < 2:
        raise ValueError("verify needs at least two methods")
    results = _run_methods(cfg)
    per_index = []
    all_agree = True
    for n in range(cfg.count + 1):
        values = {seq.method: seq[n] for seq in results}
        agree = len(set(values.values())) == 1
        all_agree = all_agree and agree
        per_index.append((n, values, agree))
    if cfg.fmt == "json":
        payload = {
            "r": cfg.system.r,
            "count": cfg.count,
            "methods": list(cfg.methods),
            "agree": all_agree,
            "per_index": [
                {
                    "n": n,
                    "agree": agree,
                    "values": {m: format_rational(v) for m, v in values.items()},
                }
                for n, values, agree in per_index
            ],
        }
        _emit(cfg, json.dumps(payload, indent=2) + "\n")
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "method", "value", "decimal"])
        for n, values, _ in per_index:
            for m in cfg.methods:
                writer.writerow([n, m, format_rational(values[m]), decimal_str(values[m])])
        _emit(cfg, buf.getvalue())
    else:
        lines = [f"cross-method verification, methods: {', '.join(cfg.methods)}"]
        for n, values, agree in per_index:
            mark = "ok" if agree else "MISMATCH"
            shown = values[cfg.methods[0]]
            lines.append(f"  alpha_{n}: {format_rational(shown)} [{mark}]")
        lines.append("agreement: " + ("exact" if all_agree else "FAILED"))
        _emit(cfg, "\n".join(lines) + "\n")
    return 0 if all_agree else 4


def cmd_hessenberg(cfg: RunConfig) -> int:
    r = cfg.system.r
    size = cfg.size
    count = gamma_coverage(size - 1, r)
    method = cfg.methods[0]
    matrix = None
    if method == "gauss-borel":
        mset = MomentMatrixSet.for_count(cfg.system, count)
        matrix = hessenberg_from_lu(mset.lus[0], r)
        alphas = alphas_from_lu(mset, count)
    elif method == "minors":
        mset = MomentMatrixSet.for_count(cfg.system, count)
        alphas = alphas_from_minors(mset, count)
    elif method == "bcf":
        alphas = euler_gauss(cfg.system, count)
    else:
        alphas = closed_form_alphas(cfg.system, count)
    bands = gamma_expand(alphas, r, size - 1)
    dense = bands_matrix(bands, size)
    if matrix is not None and dense != tuple(tuple(row[:size]) for row in matrix[:size]):
        return _fail("gamma expansion disagrees with the LU recurrence matrix")
    gamma_rows = [
        {"n": n, "k": k, "value": format_rational(bands.gamma(n, k))}
        for k in range(r + 1)
        for n in range(size)
    ]
    if cfg.fmt == "json":
        payload = {
            "r": r,
            "size": size,
            "method": method,
            "gammas": gamma_rows,
            "matrix": [[format_rational(v) for v in row] for row in dense],
        }
        _emit(cfg, json.dumps(payload, indent=2) + "\n")
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "value", "decimal"])
        for row in gamma_rows:
            val = parse_rational(row["value"])
            writer.writerow([row["n"], row["k"], row["value"], decimal_str(val)])
        _emit(cfg, buf.getvalue())
    else:
        lines = [f"recurrence bands gamma_n^[k], r={r}, truncation {size}x{size} [{method}]"]
        for k in range(r + 1):
            vals = ", ".join(format_rational(bands.gamma(n, k)) for n in range(size))
            lines.append(f"  k={k}: {vals}")
        lines.append("dense matrix:")
        for row in dense:
            lines.append("  [" + ", ".join(format_rational(v) for v in row) + "]")
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


def cmd_srcheck(cfg: RunConfig) -> int:
    r = cfg.system.r
    size = max((r + 1) * cfg.n_max + 1, cfg.k_max + 1)
    count = (r + 1) * (size - 1) + r
    method = cfg.methods[0]
    if method == "gauss-borel":
        alphas = alphas_from_lu(MomentMatrixSet.for_count(cfg.system, count), count)
    elif method == "minors":
        alphas = alphas_from_minors(MomentMatrixSet.for_count(cfg.system, count), count)
    elif method == "bcf":
        alphas = euler_gauss(cfg.system, count)
    else:
        alphas = closed_form_alphas(cfg.system, count)
    report = production_check(alphas, r, cfg.n_max, cfg.k_max)
    oracle = PathWeightOracle(r=r, alphas=alphas)
    moment_rows = []
    moments_ok = True
    for j in range(1, r + 1):
        for n in range(cfg.n_max + 1):
            lhs = moment(cfg.system, j, n)
            rhs = modified_sr(oracle, n, j - 1)
            ok = lhs == rhs
            moments_ok = moments_ok and ok
            moment_rows.append((j, n, lhs, rhs, ok))
    overall = report.ok and moments_ok
    if cfg.fmt == "json":
        payload = {
            "r": r,
            "method": method,
            "n_max": cfg.n_max,
            "k_max": cfg.k_max,
            "production_ok": report.ok,
            "moments_ok": moments_ok,
            "cells": [
                {
                    "n": c.n,
                    "k": c.k,
                    "matrix_power": format_rational(c.matrix_power),
                    "path_sum": format_rational(c.path_sum),
                    "ok": c.ok,
                }
                for c in report.cells
            ],
            "moments": [
                {"j": j, "n": n, "moment": format_rational(lhs), "path_sum": format_rational(rhs), "ok": ok}
                for j, n, lhs, rhs, ok in moment_rows
            ],
        }
        _emit(cfg, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"production-matrix check, r={r}, n<={cfg.n_max}, k<={cfg.k_max} [{method}]"]
        for c in report.cells:
            mark = "ok" if c.ok else "FAIL"
            lines.append(
                f"  (H^{c.n})[0,{c.k}] = {format_rational(c.matrix_power)}"
                f"  paths = {format_rational(c.path_sum)}  [{mark}]"
            )
        lines.append("moment reconstruction:")
        for j, n, lhs, rhs, ok in moment_rows:
            mark = "ok" if ok else "FAIL"
            lines.append(
                f"  <v_{j}, x^{n}> = {format_rational(lhs)}  paths = {format_rational(rhs)}  [{mark}]"
            )
        lines.append("result: " + ("all cells equal" if overall else "FAILED"))
        _emit(cfg, "\n".join(lines) + "\n")
    return 0 if overall else 4


def cmd_moments_echo(cfg: RunConfig) -> int:
    r = cfg.system.r
    table = [
        [moment(cfg.system, j, n) for n in range(cfg.count + 1)] for j in range(1, r + 1)
    ]
    if cfg.fmt == "json":
        payload = {"r": r, "moments": [[format_rational(v) for v in row] for row in table]}
        _emit(cfg, json.dumps(payload, indent=2) + "\n")
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["j", "n", "value", "decimal"])
        for j, row in enumerate(table, start=1):
            for n, v in enumerate(row):
                writer.writerow([j, n, format_rational(v), decimal_str(v)])
        _emit(cfg, buf.getvalue())
    else:
        lines = [f"normalised moments, r={r}, n = 0..{cfg.count}"]
        for j, row in enumerate(table, start=1):
            lines.append(f"  v_{j}: " + ", ".join(format_rational(v) for v in row))
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _fail(message: str) -> int:
    sys.stderr.write(f"mopfact: {message}\n")
    return 4


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--system", choices=["jacobi-pineiro", "laguerre"])
    parser.add_argument("--moments", help="path to a JSON moment file")
    parser.add_argument("--r", type=int)
    parser.add_argument("--a", help="comma-separated rationals a_1,...,a_r")
    parser.add_argument("--b", help="rational parameter b (jacobi-pineiro only)")
    parser.add_argument("--count", type=int, default=10)
    parser.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="mopfact", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="emit alpha coefficients per method")
    _add_common(p)
    p.add_argument("--method", default=None, help="comma-separated subset of "
                   f"{{{','.join(METHODS)}}} or 'all'")

    p = sub.add_parser("verify", help="cross-check methods for exact equality")
    _add_common(p)
    p.add_argument("--method", default=None)

    p = sub.add_parser("hessenberg", help="emit the recurrence bands and matrix")
    _add_common(p)
    p.add_argument("--method", default="gauss-borel")
    p.add_argument("--size", type=int, default=5)

    p = sub.add_parser("srcheck", help="production-matrix and moment path checks")
    _add_common(p)
    p.add_argument("--method", default="gauss-borel")
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--kmax", type=int, default=3)

    p = sub.add_parser("moments-echo", help="print the normalised moment table")
    _add_common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        handler = {
            "factor": cmd_factor,
            "verify": cmd_verify,
            "hessenberg": cmd_hessenberg,
            "srcheck": cmd_srcheck,
            "moments-echo": cmd_moments_echo,
        }[args.command]
        return handler(cfg)
    except NoBidiagonalFactorisation as exc:
        sys.stderr.write(f"mopfact: alpha_{exc.index} vanishes: {exc}\n")
        return 2
    except SingularLeadingMinor as exc:
        shift = "?" if exc.shift is None else exc.shift
        sys.stderr.write(f"mopfact: singular leading minor (j={shift}, n={exc.n}): {exc}\n")
        return 3
    except (MomentTableExhausted, DegenerateParameters) as exc:
        sys.stderr.write(f"mopfact: {exc}\n")
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"mopfact: {exc}\n")
        return 1
    except MopfactError as exc:
        sys.stderr.write(f"mopfact: internal error: {exc}\n")
        return 5


if __name__ == "__main__":
    sys.exit(main())
