"""Command-line front end: evaluation grids, zero scans, beta sweeps,
verification suites, and rectangle counting, with CSV or JSON output.

Exit status: 0 = success (and, for `verify`, every check passed);
1 = usage or domain error; 2 = verification failure or non-convergence.
Diagnostics go to stderr only; results go to stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from typing import Dict, List, Optional, Sequence

import numpy as np

from .core import (
    AccuracyWarning,
    Alpha,
    ConvergenceError,
    DomainError,
    EvalSettings,
    Family,
    ZetaError,
    parse_family,
)
from .dirichlet import (
    characters_mod,
    closed_form_identity,
    l_function,
    linear_relation_residual,
)
from .families import eval_family, functional_equation_pair, special_values
from .zeros import beta_zero, count_zeros_rectangle, scan_real_zeros

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2

TOL_ENV_VAR = "ZETAZEROS_TOL"

_CSV_COLUMNS = {
    "eval": ["sigma", "t", "re", "im"],
    "scan": ["family", "a", "location", "multiplicity_class", "residual"],
    "beta": ["a", "family", "beta", "prediction", "deviation"],
    "verify": ["suite", "check", "residual", "tolerance", "status"],
    "count": [
        "family",
        "a",
        "re_lo",
        "im_lo",
        "re_hi",
        "im_hi",
        "count",
        "boundary_min_abs",
        "samples_used",
    ],
}


def _fmt(x) -> object:
    if isinstance(x, float):
        if x == int(x) and abs(x) < 1e15 and not math.isinf(x):
            return x
        return x
    return x


def _settings_from(args: argparse.Namespace) -> EvalSettings:
    tol = args.tol
    if tol is None:
        env = os.environ.get(TOL_ENV_VAR)
        tol = float(env) if env else 1e-12
    return EvalSettings(target_abs_tol=tol)


def _parse_grid(text: str) -> List[float]:
    """"lo:hi:step" -> inclusive grid; a bare number -> [number]."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"grid syntax is lo:hi:step, got {text!r}")
        lo, hi, step = (float(p) for p in parts)
        if step <= 0 or hi < lo:
            raise DomainError(f"bad grid {text!r}")
        n = int(round((hi - lo) / step)) + 1
        return [lo + i * step for i in range(n)]
    return [float(text)]


def _emit(command: str, rows: List[Dict[str, object]], fmt: str, out: io.TextIOBase) -> None:
    if fmt == "json":
        payload = {"command": command, "rows": rows}
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
        return
    cols = _CSV_COLUMNS[command]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_fmt(row[c]) for c in cols])


def _cmd_eval(args: argparse.Namespace, out: io.TextIOBase) -> int:
    cfg = _settings_from(args)
    fam = parse_family(args.family)
    alpha = Alpha.parse(args.a) if args.a is not None else None
    sigmas = _parse_grid(args.sigma)
    ts = _parse_grid(args.t)
    chi = None
    if fam is Family.L_CHI:
        if args.char_modulus is None:
            raise DomainError("--char-modulus is required for family L")
        chars = characters_mod(args.char_modulus)
        if not 0 <= args.char_index < len(chars):
            raise DomainError(f"char index out of range (phi(q) = {len(chars)})")
        chi = chars[args.char_index]
    elif fam is not Family.RIEMANN and alpha is None:
        raise DomainError("--a is required for this family")
    rows = []
    for sigma in sigmas:
        for t in ts:
            s = complex(sigma, t)
            if chi is not None:
                v = l_function(chi, s, cfg)
            elif fam is Family.RIEMANN:
                v = eval_family(fam, s, 1.0, cfg)
            else:
                v = eval_family(fam, s, alpha, cfg)
            rows.append({"sigma": sigma, "t": t, "re": v.real, "im": v.imag})
    _emit("eval", rows, args.format, out)
    return EXIT_OK


def _cmd_scan(args: argparse.Namespace, out: io.TextIOBase) -> int:
    fam = parse_family(args.family)
    alpha = Alpha.parse(args.a)
    records = scan_real_zeros(fam, alpha, args.lo, args.hi, args.step)
    rows = [
        {
            "family": fam.name,
            "a": str(alpha),
            "location": rec.location,
            "multiplicity_class": rec.multiplicity_class,
            "residual": rec.residual,
        }
        for rec in records
    ]
    _emit("scan", rows, args.format, out)
    return EXIT_OK


def _cmd_beta(args: argparse.Namespace, out: io.TextIOBase) -> int:
    fam = parse_family(args.family)
    if args.a is not None:
        alphas = [Alpha.parse(args.a)]
    else:
        grid = np.linspace(args.a_from, args.a_to, args.a_points)
        alphas = [Alpha(float(x)) for x in grid]
    rows = []
    for alpha in alphas:
        pt = beta_zero(fam, alpha)
        rows.append(
            {
                "a": pt.a,
                "family": pt.family.name,
                "beta": pt.beta,
                "prediction": pt.asymptotic_prediction,
                "deviation": pt.deviation,
            }
        )
    _emit("beta", rows, args.format, out)
    return EXIT_OK


def _cmd_count(args: argparse.Namespace, out: io.TextIOBase) -> int:
    fam = parse_family(args.family)
    alpha = Alpha.parse(args.a)
    result = count_zeros_rectangle(
        fam,
        alpha,
        (complex(args.re_lo, args.im_lo), complex(args.re_hi, args.im_hi)),
        initial_samples=args.samples,
    )
    rows = [
        {
            "family": fam.name,
            "a": str(alpha),
            "re_lo": result.corners[0].real,
            "im_lo": result.corners[0].imag,
            "re_hi": result.corners[1].real,
            "im_hi": result.corners[1].imag,
            "count": result.count,
            "boundary_min_abs": result.boundary_min_abs,
            "samples_used": result.samples_used,
        }
    ]
    _emit("count", rows, args.format, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites

def _verify_functional_equations(alpha: Alpha, cfg: EvalSettings, rng: np.random.Generator):
    tol = 1e-8
    for fam in (Family.Z, Family.P, Family.Y, Family.O, Family.X):
        worst = 0.0
        for _ in range(20):
            s = complex(rng.uniform(0.05, 10.0), rng.uniform(-30.0, 30.0))
            if abs(s - 1.0) < 0.05:
                continue
            lhs, rhs = functional_equation_pair(fam, s, alpha, cfg)
            scale = max(abs(lhs), abs(rhs), 1.0)
            worst = max(worst, abs(lhs - rhs) / scale)
        yield f"fe-{fam.name}-a={alpha}", worst, tol


def _verify_closed_forms(alpha: Alpha, fam: Optional[Family], cfg: EvalSettings, rng: np.random.Generator):
    tol = 1e-8
    fams = [fam] if fam else [Family.Z, Family.P, Family.Y, Family.O, Family.X]
    for f in fams:
        worst = 0.0
        for _ in range(20):
            s = complex(rng.uniform(0.1, 6.0), rng.uniform(-20.0, 20.0))
            if abs(s - 1.0) < 0.05:
                continue
            try:
                direct, closed = closed_form_identity(f, alpha, s, cfg)
            except ZetaError:
                worst = math.nan
                break
            worst = max(worst, abs(direct - closed) / max(1.0, abs(closed)))
        if not math.isnan(worst):
            yield f"closed-form-{f.name}-a={alpha}", worst, tol


def _verify_relations(cfg: EvalSettings, rng: np.random.Generator):
    tol = 1e-8
    for q in (3, 4, 5, 6, 8, 12):
        worst = 0.0
        for _ in range(4):
            s = complex(rng.uniform(1.1, 4.0), rng.uniform(-10.0, 10.0))
            for r in range(1, q):
                if math.gcd(r, q) != 1:
                    continue
                worst = max(worst, linear_relation_residual(Family.Z, r, q, s, cfg))
                worst = max(worst, linear_relation_residual(Family.P, r, q, s, cfg))
                if 2 * r < q:
                    worst = max(worst, linear_relation_residual(Family.Y, r, q, s, cfg))
                    worst = max(worst, linear_relation_residual(Family.O, r, q, s, cfg))
        yield f"relations-q={q}", worst, tol


def _verify_special_values(alpha: Alpha, cfg: EvalSettings):
    tol = 1e-10
    sv = special_values(alpha)
    z0 = eval_family(Family.Z, 0.0, alpha, cfg)
    p0 = eval_family(Family.P, 0.0, alpha, cfg)
    p1 = eval_family(Family.P, 1.0, alpha, cfg)
    yield f"Z(0,{alpha})=0", abs(z0 - sv.z_at_0), tol
    yield f"P(0,{alpha})=-1", abs(p0 - sv.p_at_0), tol
    yield f"P(1,{alpha})=-2log(2 sin pi a)", abs(p1 - sv.p_at_1), tol


def _cmd_verify(args: argparse.Namespace, out: io.TextIOBase) -> int:
    cfg = _settings_from(args)
    fam = parse_family(args.family) if args.family else None
    alpha = Alpha.parse(args.a) if args.a else Alpha.parse("0.3")
    rng = np.random.default_rng(20240801)
    suites = {
        "functional-equations": lambda: _verify_functional_equations(alpha, cfg, rng),
        "closed-forms": lambda: _verify_closed_forms(alpha, fam, cfg, rng),
        "relations": lambda: _verify_relations(cfg, rng),
        "special-values": lambda: _verify_special_values(alpha, cfg),
    }
    if args.suite == "all":
        selected = list(suites)
    elif args.suite in suites:
        selected = [args.suite]
    else:
        raise DomainError(f"unknown suite {args.suite!r}; choices: {', '.join(suites)}, all")
    rows = []
    ok = True
    for name in selected:
        for check, residual, tol in suites[name]():
            status = "PASS" if residual < tol else "FAIL"
            ok = ok and status == "PASS"
            rows.append(
                {
                    "suite": name,
                    "check": check,
                    "residual": residual,
                    "tolerance": tol,
                    "status": status,
                }
            )
    _emit("verify", rows, args.format, out)
    return EXIT_OK if ok else EXIT_VERIFY


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.exit(EXIT_USAGE, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetazeros", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, need_family: bool = True):
        if need_family:
            p.add_argument("--family", required=True, help="Z P Y O X hurwitz periodic riemann L")
        p.add_argument("--a", help='shift parameter; "r/q" is exact, decimals are not')
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--tol", type=float, default=None, help=f"evaluation tolerance (or ${TOL_ENV_VAR})")

    p_eval = sub.add_parser("eval", help="evaluate on a sigma/t grid")
    common(p_eval)
    p_eval.add_argument("--sigma", required=True, help="value or lo:hi:step")
    p_eval.add_argument("--t", default="0", help="value or lo:hi:step")
    p_eval.add_argument("--char-modulus", type=int, default=None)
    p_eval.add_argument("--char-index", type=int, default=0)
    p_eval.set_defaults(func=_cmd_eval)

    p_scan = sub.add_parser("scan", help="scan for real zeros")
    common(p_scan)
    p_scan.add_argument("--from", dest="lo", type=float, required=True)
    p_scan.add_argument("--to", dest="hi", type=float, required=True)
    p_scan.add_argument("--step", type=float, default=0.05)
    p_scan.set_defaults(func=_cmd_scan)

    p_beta = sub.add_parser("beta", help="extra real zero sweep for Z or P")
    common(p_beta)
    p_beta.add_argument("--a-from", type=float, default=0.01)
    p_beta.add_argument("--a-to", type=float, default=0.16)
    p_beta.add_argument("--a-points", type=int, default=16)
    p_beta.set_defaults(func=_cmd_beta)

    p_verify = sub.add_parser("verify", help="run identity/relation suites")
    common(p_verify, need_family=False)
    p_verify.add_argument("--family", default=None)
    p_verify.add_argument("--suite", default="all")
    p_verify.set_defaults(func=_cmd_verify)

    p_count = sub.add_parser("count", help="argument-principle zero count in a rectangle")
    common(p_count)
    p_count.add_argument("--re-from", dest="re_lo", type=float, required=True)
    p_count.add_argument("--re-to", dest="re_hi", type=float, required=True)
    p_count.add_argument("--im-from", dest="im_lo", type=float, required=True)
    p_count.add_argument("--im-to", dest="im_hi", type=float, required=True)
    p_count.add_argument("--samples", type=int, default=512)
    p_count.set_defaults(func=_cmd_count)

    return parser


def run(argv: Sequence[str], out: io.TextIOBase = sys.stdout, err: io.TextIOBase = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    warnings.simplefilter("once", AccuracyWarning)
    try:
        return args.func(args, out)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_VERIFY
    except ZetaError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
