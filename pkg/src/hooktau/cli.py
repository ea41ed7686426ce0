"""Command line front end: verify suites, convergence studies, one-off evals.

Exit codes: 0 on success, 1 when a check or study verdict fails, 2 for
malformed invocations.  Reports written to disk (JSON, CSV) carry no
timestamps so repeated runs with the same inputs produce identical
files; the human-readable summary on stdout does carry one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from mpmath import mp

from . import __version__, asymptotics, measures, tau, verify
from .errors import HooktauError
from .tau import PRECISION_ENV, default_precision

_STUDY_ALIASES = {
    "theorem12": "chi2",
    "theorem13": "tail",
    "corollary13": "tail",
    "theorem14": "poisson",
    "prop51": "density",
    "chi2": "chi2",
    "tail": "tail",
    "poisson": "poisson",
    "scaling": "scaling",
    "density": "density",
}


def _parse_grid(text, integer=False):
    """Parse '10:40:10' (inclusive), '1,2,5', or a single number."""
    text = text.strip()
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) != 3:
            raise ValueError(f"grid must be start:stop:step, got {text!r}")
        start, stop, step = (float(v) for v in pieces)
        if step <= 0:
            raise ValueError(f"grid step must be positive, got {step}")
        vals = []
        v = start
        while v <= stop + 1e-9 * max(1.0, abs(step)):
            vals.append(v)
            v += step
    elif "," in text:
        vals = [float(v) for v in text.split(",") if v.strip()]
    else:
        vals = [float(text)]
    if integer:
        out = []
        for v in vals:
            if abs(v - round(v)) > 1e-9:
                raise ValueError(f"expected integers in the grid, got {v}")
            out.append(int(round(v)))
        return out
    return vals


def _parse_shape(text):
    return tuple(int(v) for v in text.split(",") if v.strip())


def _format_value(value, precision):
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else (
            f"{value.numerator}/{value.denominator}"
        )
    if isinstance(value, mp.mpf):
        return mp.nstr(value, precision, strip_zeros=False)
    return repr(value)


def _write_json(path, payload):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True, default=str)
        fh.write("\n")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hooktau",
        description="verification toolkit for hook-length word measures and "
                    "Hankel tau functions",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=None,
                        help=f"decimal digits (default 60, or {PRECISION_ENV})")
    common.add_argument("--output-dir", default=".",
                        help="directory for report files")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes for word sweeps")
    common.add_argument("--seed", type=int, default=0,
                        help="recorded in reports; no check here is randomized")

    pv = sub.add_parser("verify", parents=[common],
                        help="run a named self-check suite")
    pv.add_argument("suite",
                    choices=sorted(verify.SUITES) + ["all"])

    ps = sub.add_parser("study", parents=[common],
                        help="run a convergence study and write CSV + JSON")
    ps.add_argument("name", choices=sorted(set(_STUDY_ALIASES)))
    ps.add_argument("--p", type=int, default=1)
    ps.add_argument("--q", type=int, default=None)
    ps.add_argument("--k", type=int, default=0)
    ps.add_argument("--n", default=None, help="grid, e.g. 10:40:10")
    ps.add_argument("--N", dest="upper", default=None, help="row bound grid")
    ps.add_argument("--x", default=None, help="intensity grid")
    ps.add_argument("--s", default="0", help="shift value or grid")
    ps.add_argument("--power", type=int, default=0, help="probe exponent")

    pe = sub.add_parser("eval", parents=[common],
                        help="evaluate a single quantity and print it")
    pe.add_argument("target",
                    choices=["tau", "g", "h", "k", "moment", "hermitian-ratio",
                             "measure", "chi2-moment"])
    pe.add_argument("--family", choices=["gaussian", "jacobi", "laguerre"],
                    default="gaussian")
    pe.add_argument("--interval", default=None,
                    help="gaussian: left/right/full; laguerre: unit/tail/half")
    pe.add_argument("--a", type=float, default=0.0)
    pe.add_argument("--b", type=float, default=1.0)
    pe.add_argument("--alpha", type=float, default=0.0)
    pe.add_argument("--beta", type=float, default=0.0)
    pe.add_argument("--gamma", type=float, default=0.0)
    pe.add_argument("--power", type=int, default=0)
    pe.add_argument("--n", type=int, default=1)
    pe.add_argument("--p", type=int, default=1)
    pe.add_argument("--q", type=int, default=1)
    pe.add_argument("--k", type=int, default=0)
    pe.add_argument("--m", type=int, default=2)
    pe.add_argument("--ell", type=int, default=0)
    pe.add_argument("--x", type=float, default=0.0)
    pe.add_argument("--s", type=float, default=0.0)
    pe.add_argument("--order", type=int, default=0)
    pe.add_argument("--lambda", dest="shape", default="",
                    help="partition, e.g. 3,2,1")
    return parser


def _weight_from_args(args):
    if args.family == "gaussian":
        side = args.interval or "full"
        return tau.WeightSpec.gaussian_power(args.power, side)
    if args.family == "jacobi":
        return tau.WeightSpec.jacobi_exp(
            args.a, args.b, args.alpha, args.beta, args.gamma
        )
    side = args.interval or "unit"
    return tau.WeightSpec.laguerre_jacobi(args.alpha, args.beta, side)


def _run_verify(args, precision):
    results = verify.run_suite(args.suite, precision)
    for res in results:
        mark = "ok" if res.passed else "FAIL"
        detail = f"  ({res.detail})" if res.detail else ""
        print(f"[{mark:>4}] {res.name}{detail}")
    passed = sum(r.passed for r in results)
    stamp = time.strftime("%Y-%m-%d %H:%M:%S")
    print(f"{passed}/{len(results)} checks passed at {stamp}")
    payload = {
        "command": "verify",
        "suite": args.suite,
        "precision": precision,
        "seed": args.seed,
        "version": __version__,
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "passed": passed == len(results),
    }
    path = os.path.join(args.output_dir, f"verify_{args.suite}.json")
    _write_json(path, payload)
    print(f"wrote {path}")
    return 0 if passed == len(results) else 1


def _run_study(args, precision):
    name = _STUDY_ALIASES[args.name]
    q = args.q if args.q is not None else args.p
    if name == "chi2":
        n_grid = _parse_grid(args.n or "10:40:10", integer=True)
        study = asymptotics.chi2_limit_study(args.p, q, args.k, n_grid)
        verdict = study.improving or all(
            abs(r - 1) < 1e-9 for r in study.ratios()
        )
    elif name == "tail":
        grid = _parse_grid(args.upper or args.n or "2:6:1", integer=True)
        study = asymptotics.row_tail_study(args.p, args.k, grid)
        verdict = study.improving or all(
            abs(r - 1) < 1e-9 for r in study.ratios()
        )
        verdict = verdict and all(
            ok is None or ok for ok in study.extras["word_agrees"]
        )
    elif name == "poisson":
        x_grid = _parse_grid(args.x or "10:50:20")
        s_vals = _parse_grid(args.s)
        study = asymptotics.poissonized_ratio_study(
            args.p, q, s_vals[0], x_grid, precision
        )
        verdict = study.improving
    elif name == "scaling":
        n_grid = _parse_grid(args.n or "50:200:50", integer=True)
        s_vals = _parse_grid(args.s if args.s != "0" else "-1:1:0.5")
        report = asymptotics.scaling_limit_check(
            args.p, q, n_grid, s_vals, precision
        )
        study = report.to_study()
        verdict = report.decreasing
    else:
        x_grid = _parse_grid(args.x or "20:80:30")
        s_vals = _parse_grid(args.s)
        study = asymptotics.density_limit_study(
            args.p, x_grid, power=args.power, s=s_vals[0]
        )
        verdict = study.improving or max(study.gaps()) < 0.1
    base = os.path.join(args.output_dir, f"study_{name}")
    study.write_csv(base + ".csv")
    payload = {
        "command": "study",
        "name": name,
        "requested_as": args.name,
        "p": args.p,
        "q": q,
        "k": args.k,
        "precision": precision,
        "seed": args.seed,
        "version": __version__,
        "verdict": bool(verdict),
        "table": study.to_json_dict(),
    }
    _write_json(base + ".json", payload)
    for row in study.rows():
        print(
            f"{study.parameter_name}={row['parameter']}: "
            f"lhs={row['lhs']:.10g} rhs={row['rhs']:.10g} ratio={row['ratio']:.10g}"
        )
    stamp = time.strftime("%Y-%m-%d %H:%M:%S")
    state = "converging" if verdict else "NOT converging"
    print(f"{study.name}: {state}; wrote {base}.csv and {base}.json at {stamp}")
    return 0 if verdict else 1


def _run_eval(args, precision):
    target = args.target
    if target == "chi2-moment":
        value = measures.chi2_moment(args.m, args.k)
    elif target == "measure":
        shape = _parse_shape(args.shape)
        ell = args.ell or sum(shape)
        value = measures.word_measure(shape, args.p, ell)
    elif target == "hermitian-ratio":
        value = tau.hermitian_ratio(args.p, args.q, args.s, precision)
    elif target == "h":
        side = args.interval or "left"
        value = tau.matrix_integral_h(
            args.n, args.s, args.power, side, precision, order=args.order
        )
    elif target == "k":
        value = tau.matrix_integral_k(
            args.n, args.s, args.alpha, args.beta, precision, order=args.order
        )
    elif target == "moment":
        ev = tau.TauEvaluator(_weight_from_args(args), max(args.n, 1), precision)
        value = ev.moment(args.k, args.x)
    elif target == "tau":
        ev = tau.TauEvaluator(_weight_from_args(args), args.n, precision)
        value = ev.tau(args.x)
    else:
        ev = tau.TauEvaluator(_weight_from_args(args), args.n, precision)
        value = ev.log_derivative(args.x, args.order)
    print(_format_value(value, precision))
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    precision = args.precision if args.precision is not None else default_precision()
    try:
        if precision < 10:
            raise ValueError(f"precision must be at least 10 digits, got {precision}")
        os.makedirs(args.output_dir, exist_ok=True)
        if args.command == "verify":
            return _run_verify(args, precision)
        if args.command == "study":
            return _run_study(args, precision)
        return _run_eval(args, precision)
    except ArithmeticError as exc:
        # numeric machinery that ran but could not certify its target
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (HooktauError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
