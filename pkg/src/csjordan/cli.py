"""Command line front end.

Exit codes: 0 when the requested check passes, 1 when a check fails (or a
verdict is negative), 2 for usage, parse, or input validation problems.
Documents go to --out as JSON, or to stdout when no path is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import metadata

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import errors
from ._lin import fro, opnorm
from .approximation import invertible_path, wvn_perturbation
from .decomposition import takagi
from .jordan_space import symmetry_residual
from .matio import (
    _jsonable,
    load_conjugation,
    load_element,
    load_matrix,
    matrix_to_doc,
    save_matrix,
    save_report,
)
from .multiplication import multiplier_spectrum, solve_sylvester
from .sampling import random_conjugation, random_selfadjoint, random_unit_vector, stream
from .structure import automorphism_report, irreducibility_check
from .suite import DEFAULT_CHECKS, SuiteConfig, run_suite

_USAGE_ERRORS = (
    errors.ParseError,
    errors.BadConfig,
    errors.IoFailure,
    errors.InvalidDimension,
    errors.DimensionMismatch,
    errors.ConjugationMismatch,
    errors.NotUnitary,
    errors.NotSymmetric,
    errors.NotSelfadjoint,
    errors.NotNormal,
    errors.NotUnit,
    errors.ZeroVector,
    errors.ZeroInput,
    errors.InvalidP,
    errors.InvalidEpsilon,
    errors.InvalidParameter,
)
_CHECK_ERRORS = (
    errors.SingularJordanMultiplier,
    errors.NotInvertible,
    errors.NonDiagonalizable,
)


def _emit(doc, out):
    if out:
        save_report(doc, out)
    else:
        print(json.dumps(doc, sort_keys=True, indent=2, default=_jsonable))


def _cmd_takagi(args):
    a = load_matrix(args.infile)
    f = takagi(a, tol=args.tol)
    scale = max(1.0, fro(a))
    recon = fro(f.reconstruct() - a) / scale
    unit = fro(f.q.conj().T @ f.q - np.eye(a.shape[0]))
    thr = args.tol if args.tol is not None else 1e-9
    ok = recon <= thr and unit <= thr
    doc = {
        "n": int(a.shape[0]),
        "sigma": [float(s) for s in f.sigma],
        "q": matrix_to_doc(f.q),
        "reconstruction_residual": recon,
        "unitarity_residual": unit,
        "ok": ok,
    }
    _emit(doc, args.out)
    return 0 if ok else 1


def _cmd_wvn(args):
    seed = args.seed if args.seed is not None else 0
    rng = stream(seed, "cli-wvn", args.dim)
    c = random_conjugation(args.dim, rng)
    t = random_selfadjoint(c, rng)
    e = random_unit_vector(args.dim, rng)
    cert = wvn_perturbation(t, e, args.intervals, args.p, tol=args.tol)
    scale = max(1.0, opnorm(t.a))
    checks = {
        "norm_below_bound": bool(cert.measured_norm <= cert.bound + 1e-10 * scale),
        "projection_commutes": bool(cert.commute_residual <= 1e-9 * scale),
        "k_selfadjoint": bool(fro(cert.k - cert.k.conj().T) <= 1e-9 * scale),
        "k_in_class": bool(symmetry_residual(cert.k, c) <= 1e-9 * scale),
        "projection_in_class": bool(symmetry_residual(cert.projection, c) <= 1e-9 * scale),
        "projection_idempotent": bool(
            fro(cert.projection @ cert.projection - cert.projection) <= 1e-9
        ),
        "seed_in_range": bool(
            float(np.linalg.norm(cert.projection @ e - e)) <= 1e-9
        ),
        "rank_small": bool(cert.rank_p <= 2 * cert.intervals),
    }
    doc = {
        "dim": args.dim,
        "seed": seed,
        "intervals": cert.intervals,
        "p": cert.p,
        "measured_norm": cert.measured_norm,
        "bound": cert.bound,
        "commute_residual": cert.commute_residual,
        "rank_p": cert.rank_p,
        "k": matrix_to_doc(cert.k),
        "projection": matrix_to_doc(cert.projection),
        "checks": checks,
        "ok": all(checks.values()),
    }
    _emit(doc, args.out)
    return 0 if doc["ok"] else 1


def _cmd_lspec(args):
    t = load_element(args.infile, tol=args.tol)
    n = t.n
    lam = np.linalg.eigvals(t.a)
    means = np.array([0.5 * (lam[i] + lam[j]) for i in range(n) for j in range(i, n)])
    got = multiplier_spectrum(t)
    cost = np.abs(means[:, None] - got[None, :])
    rows, cols = linear_sum_assignment(cost)
    dist = float(cost[rows, cols].max())
    bound = (args.tol if args.tol is not None else 1e-7) * (1.0 + opnorm(t.a))
    doc = {
        "n": n,
        "eigenvalues": [[float(z.real), float(z.imag)] for z in lam],
        "pairwise_means": [[float(z.real), float(z.imag)] for z in means],
        "multiplier_eigenvalues": [[float(z.real), float(z.imag)] for z in got],
        "max_matching_distance": dist,
        "bound": bound,
        "ok": dist <= bound,
    }
    _emit(doc, args.out)
    return 0 if doc["ok"] else 1


def _cmd_sylvester(args):
    t = load_element(args.t, tol=args.tol)
    y = load_matrix(args.y)
    x = solve_sylvester(t, y, tol=args.tol)
    residual = fro(t.a @ x + x @ t.a - y)
    lam = np.linalg.eigvals(t.a)
    least = min(
        abs(lam[i] + lam[j]) for i in range(t.n) for j in range(i, t.n)
    )
    kappa = 2.0 * max(1.0, opnorm(t.a)) / max(least, 1e-300)
    thr = (args.tol if args.tol is not None else 1e-8) * kappa * max(1.0, fro(y))
    ok = residual <= thr
    doc = {
        "residual": residual,
        "threshold": thr,
        "membership_residual": symmetry_residual(x, t.conj),
        "ok": ok,
    }
    if args.out:
        save_matrix(x, args.out)
        doc["out"] = args.out
    else:
        doc["x"] = matrix_to_doc(x)
    print(json.dumps(doc, sort_keys=True, indent=2, default=_jsonable))
    return 0 if ok else 1


def _cmd_autocheck(args):
    v = load_matrix(args.v)
    c = load_conjugation(args.c)
    seed = args.seed if args.seed is not None else 0
    rep = automorphism_report(v, c, samples=args.samples, seed=seed, tol=args.tol)
    doc = {
        "commutes": rep.commutes,
        "alpha": None if rep.alpha is None else [rep.alpha.real, rep.alpha.imag],
        "class_preserved": rep.class_preserved,
        "class_residual": rep.class_residual,
        "product_residual": rep.product_residual,
        "adjoint_residual": rep.adjoint_residual,
        "isometry_gap": rep.isometry_gap,
        "counterexample": None
        if rep.counterexample is None
        else matrix_to_doc(rep.counterexample),
        "samples": rep.samples,
    }
    _emit(doc, args.out)
    return 0 if rep.commutes and rep.class_preserved else 1


def _cmd_irreducible(args):
    a = load_matrix(args.infile)
    verdict = irreducibility_check(a, rank_tol=args.tol)
    _emit({"irreducible": bool(verdict)}, args.out)
    return 0 if verdict else 1


def _cmd_path(args):
    t = load_element(args.infile, tol=args.tol)
    thr = args.tol if args.tol is not None else 1e-8
    samples = []
    ok = True
    for k in range(args.samples):
        s = k / max(args.samples - 1, 1)
        g = invertible_path(t, s)
        smin = float(np.linalg.svd(g.a, compute_uv=False)[-1])
        res = symmetry_residual(g.a, t.conj) / max(1.0, fro(g.a))
        ok = ok and smin > 0.0 and res <= thr
        samples.append({"t": s, "sigma_min": smin, "membership_residual": res})
    doc = {"samples": samples, "ok": ok}
    _emit(doc, args.out)
    return 0 if ok else 1


def _parse_int_list(text):
    try:
        return tuple(int(part) for part in str(text).split(",") if part.strip())
    except ValueError:
        raise errors.BadConfig(f"expected comma-separated integers, got {text!r}") from None


def _cmd_suite(args):
    base = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                base = json.load(fh)
        except OSError as exc:
            raise errors.IoFailure(f"cannot read {args.config}: {exc}") from exc
        except ValueError as exc:
            raise errors.ParseError(f"{args.config} is not valid JSON: {exc}") from exc
        if not isinstance(base, dict):
            raise errors.BadConfig("suite config must be an object")
    if args.dims is not None:
        base["dims"] = _parse_int_list(args.dims)
    if args.trials is not None:
        base["trials"] = args.trials
    if args.seed is not None:
        base["seed"] = args.seed
    if args.tol is not None:
        base["tol_override"] = args.tol
    if args.checks is not None:
        base["checks"] = tuple(
            part.strip() for part in args.checks.split(",") if part.strip()
        )
    if args.out:
        base["output_path"] = args.out
    base.setdefault("dims", (4,))
    base.setdefault("trials", 5)
    base.setdefault("seed", 0)
    base.setdefault("checks", DEFAULT_CHECKS)
    allowed = {"dims", "trials", "seed", "tol_override", "checks", "output_path"}
    unknown = set(base) - allowed
    if unknown:
        raise errors.BadConfig(f"unknown config keys: {', '.join(sorted(unknown))}")
    config = SuiteConfig(**{k: v for k, v in base.items() if v is not None})
    report = run_suite(config)
    if config.output_path:
        for rec in report["results"]:
            print(
                f"{rec['check']} n={rec['dimension']}: "
                f"{rec['passes']}/{rec['trials']} worst={rec['worst_residual']:.3e}"
            )
        print(f"report written to {config.output_path}")
        print("OK" if report["ok"] else "FAIL")
    else:
        print(json.dumps(report, sort_keys=True, indent=2, default=_jsonable))
    return 0 if report["ok"] else 1


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="stream seed")
    common.add_argument("--tol", type=float, default=None, help="tolerance override")
    common.add_argument("--out", default=None, help="write the output document here")

    parser = argparse.ArgumentParser(
        prog="csjordan", description="conjugation-symmetric matrix toolkit"
    )
    try:
        version = metadata.version("csjordan")
    except metadata.PackageNotFoundError:
        version = "unknown"
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("takagi", parents=[common], help="factor a complex symmetric matrix")
    p.add_argument("--in", dest="infile", required=True, help="matrix document")
    p.set_defaults(func=_cmd_takagi)

    p = sub.add_parser("wvn", parents=[common], help="structured perturbation certificate")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--intervals", type=int, required=True)
    p.add_argument("--p", type=float, default=2.0)
    p.set_defaults(func=_cmd_wvn)

    p = sub.add_parser("lspec", parents=[common], help="multiplication operator spectrum")
    p.add_argument("--in", dest="infile", required=True, help="element document")
    p.set_defaults(func=_cmd_lspec)

    p = sub.add_parser("sylvester", parents=[common], help="solve TX + XT = Y")
    p.add_argument("--t", required=True, help="element document for T")
    p.add_argument("--y", required=True, help="matrix document for Y")
    p.set_defaults(func=_cmd_sylvester)

    p = sub.add_parser("autocheck", parents=[common], help="automorphism certificate")
    p.add_argument("--v", required=True, help="matrix document for the unitary")
    p.add_argument("--c", required=True, help="conjugation document")
    p.add_argument("--samples", type=int, default=25)
    p.set_defaults(func=_cmd_autocheck)

    p = sub.add_parser("irreducible", parents=[common], help="commutant triviality verdict")
    p.add_argument("--in", dest="infile", required=True, help="matrix document")
    p.set_defaults(func=_cmd_irreducible)

    p = sub.add_parser("path", parents=[common], help="invertible path samples")
    p.add_argument("--in", dest="infile", required=True, help="element document")
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("suite", parents=[common], help="run the invariant suite")
    p.add_argument("--config", default=None, help="suite config document")
    p.add_argument("--dims", default=None, help="comma-separated dimensions")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--checks", default=None, help="comma-separated check names")
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CHECK_ERRORS as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=None))
