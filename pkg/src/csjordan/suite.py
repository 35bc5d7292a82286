"""Seeded batch verification of the library's invariants.

Every check draws its own inputs from a counter-based stream keyed by
(seed, check name, dimension, trial index), so results are reproducible
across platforms and adding trials never disturbs earlier draws.  Reports
are plain JSON documents; wall-clock numbers live under a separate top
level key so the rest of the report is byte-stable between runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import metadata

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import errors
from ._lin import fro, opnorm
from .approximation import (
    c_fixed_diagonalize,
    finite_spectrum_approx,
    invertible_approx,
    invertible_path,
    wvn_diagonalize,
    wvn_perturbation,
)
from .conjugation import conjugation_path, standard_conjugation
from .decomposition import refined_polar, takagi
from .jordan_space import (
    SymElement,
    antisymmetry_residual,
    coords,
    jordan_product,
    schatten_norm,
    skew_part,
    sym_part,
    symmetry_residual,
    trace_norm_witness,
    trace_pair,
)
from .multiplication import multiplier_matrix, multiplier_spectrum, solve_sylvester
from .sampling import (
    ginibre,
    haar_unitary,
    random_conjugation,
    random_orthogonal,
    random_selfadjoint,
    random_symmetric,
    random_unit_vector,
    stream,
)
from .structure import (
    automorphism_report,
    generation_dimension,
    irreducibility_check,
    jordan_simplicity_witness,
    normality_report,
)

SCHEMA = "csjordan-suite/1"


@dataclass(frozen=True)
class _Outcome:
    ok: bool
    residual: float
    bound: float | None = None
    measured: float | None = None


_REGISTRY = {}


def _check(name):
    def deco(fn):
        _REGISTRY[name] = fn
        return fn

    return deco


def check_names():
    return tuple(_REGISTRY)


@_check("conjugation-involution")
def _chk_involution(rng, n, tol):
    thr = tol if tol is not None else 1e-12 * n
    c = random_conjugation(n, rng)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    r = float(np.linalg.norm(c.apply(c.apply(x)) - x)) / max(
        1.0, float(np.linalg.norm(x))
    )
    r = max(r, fro(c.u @ np.conj(c.u) - np.eye(n)))
    return _Outcome(r <= thr, r)


@_check("fixed-basis")
def _chk_fixed_basis(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    c = random_conjugation(n, rng)
    b = c.fixed_basis
    r = fro(b.conj().T @ b - np.eye(n))
    r = max(r, fro(c.u @ np.conj(b) - b))
    r = max(r, fro(b @ b.T - c.u))
    return _Outcome(r <= thr, r)


@_check("conjugation-path")
def _chk_path(rng, n, tol):
    thr = tol if tol is not None else 1e-8
    c = random_conjugation(n, rng)
    d = random_conjugation(n, rng)
    s = float(rng.uniform(0.1, 0.9))
    conjugation_path(c, d, s)
    r = fro(conjugation_path(c, d, 0.0).u - c.u)
    r = max(r, fro(conjugation_path(c, d, 1.0).u - d.u))
    return _Outcome(r <= thr, r)


@_check("symmetry-split")
def _chk_split(rng, n, tol):
    thr = tol if tol is not None else 1e-12 * n
    c = random_conjugation(n, rng)
    x = ginibre(n, rng)
    s = sym_part(x, c).a
    o = skew_part(x, c).a
    scale = max(1.0, fro(x))
    r = fro(s + o - x) / scale
    r = max(r, symmetry_residual(s, c) / scale)
    r = max(r, antisymmetry_residual(o, c) / scale)
    return _Outcome(r <= thr, r)


@_check("trace-orthogonality")
def _chk_trace(rng, n, tol):
    thr = tol if tol is not None else 1e-10
    c = random_conjugation(n, rng)
    a = random_symmetric(c, rng).a
    b = skew_part(ginibre(n, rng), c).a
    r = abs(trace_pair(a, b)) / max(1e-150, fro(a) * fro(b))
    return _Outcome(r <= thr, r)


@_check("roberts")
def _chk_roberts(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    c = random_conjugation(n, rng)
    a = random_symmetric(c, rng).a
    b = skew_part(ginibre(n, rng), c).a
    lams = [1.0, -0.5, 2.0, 1j, float(rng.uniform(-2, 2)) + 1j * float(rng.uniform(-2, 2))]
    r = max(abs(opnorm(a - lam * b) - opnorm(a + lam * b)) for lam in lams)
    scale = max(1.0, opnorm(a) + opnorm(b))
    return _Outcome(r <= thr * scale, r)


@_check("takagi")
def _chk_takagi(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    g = ginibre(n, rng)
    a = 0.5 * (g + g.T)
    f = takagi(a)
    scale = max(1.0, fro(a))
    r = fro(f.reconstruct() - a) / scale
    r = max(r, fro(f.q.conj().T @ f.q - np.eye(n)))
    ok = (
        r <= thr
        and bool(np.all(f.sigma >= 0.0))
        and bool(np.all(np.diff(f.sigma) <= 0.0))
    )
    return _Outcome(ok, r)


@_check("refined-polar")
def _chk_refined_polar(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    c = random_conjugation(n, rng)
    t = random_symmetric(c, rng)
    rp = refined_polar(t)
    scale = max(1e-150, fro(t.a))
    w = c.u @ np.conj(rp.j.v)
    r = fro(w @ rp.modulus - t.a) / scale
    r = max(r, fro(rp.j.v @ np.conj(rp.modulus) - rp.modulus @ rp.j.v) / scale)
    # the modulus is Hermitian PSD with range inside the support of j;
    # it lies in the class itself only for normal elements
    r = max(r, fro(rp.modulus - rp.modulus.conj().T) / scale)
    r = max(r, fro(rp.j.support_projection() @ rp.modulus - rp.modulus) / scale)
    r = max(r, max(0.0, -float(np.linalg.eigvalsh(rp.modulus)[0])) / scale)
    return _Outcome(r <= thr, r)


@_check("duality")
def _chk_duality(rng, n, tol):
    thr = tol if tol is not None else 1e-8
    c = random_conjugation(n, rng)
    k = random_symmetric(c, rng)
    x, value = trace_norm_witness(k)
    tn = schatten_norm(k.a, 1)
    ok = value >= (1.0 - thr) * tn and opnorm(x.a) <= 1.0 + 1e-9
    r = max(0.0, (tn - value) / max(tn, 1e-150))
    return _Outcome(ok, r, bound=tn, measured=value)


@_check("wvn")
def _chk_wvn(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    c = random_conjugation(n, rng)
    t = random_selfadjoint(c, rng)
    e = random_unit_vector(n, rng)
    intervals = int(rng.integers(2, 33))
    cert = wvn_perturbation(t, e, intervals, 2)
    scale = max(1.0, opnorm(t.a))
    r = cert.commute_residual
    r = max(r, symmetry_residual(cert.k, c))
    r = max(r, symmetry_residual(cert.projection, c))
    r = max(r, float(np.linalg.norm(cert.projection @ e - e)) )
    ok = (
        r <= thr * scale
        and cert.measured_norm <= cert.bound + 1e-10 * scale
        and cert.rank_p <= 2 * intervals
    )
    return _Outcome(ok, r, bound=cert.bound, measured=cert.measured_norm)


@_check("wvn-diagonalize")
def _chk_wvn_diag(rng, n, tol):
    eps = 0.25
    c = random_conjugation(n, rng)
    t = random_selfadjoint(c, rng)
    d, basis = wvn_diagonalize(t, eps, 2)
    dist = opnorm(d.a - t.a)
    scale = max(1.0, opnorm(d.a))
    diag = basis.conj().T @ d.a @ basis
    off = fro(diag - np.diag(np.diag(diag)))
    r = max(off / scale, fro(c.u @ np.conj(basis) - basis))
    thr = tol if tol is not None else 1e-7
    ok = dist < eps and r <= thr
    return _Outcome(ok, r, bound=eps, measured=dist)


@_check("finite-spectrum")
def _chk_finite_spectrum(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    eps = 0.5
    c = random_conjugation(n, rng)
    t = random_selfadjoint(c, rng)
    s = finite_spectrum_approx(t, eps)
    dist = opnorm(s.a - t.a)
    ev = np.linalg.eigvalsh(s.a)
    distinct = len(np.unique(np.round(ev / eps).astype(np.int64)))
    lo, hi = np.linalg.eigvalsh(t.a)[[0, -1]]
    r = symmetry_residual(s.a, c) / max(1.0, fro(s.a))
    ok = (
        dist <= 0.5 * eps + thr
        and distinct <= int(np.floor((hi - lo) / eps)) + 2
        and r <= thr
    )
    return _Outcome(ok, r, bound=0.5 * eps, measured=dist)


@_check("multiplier-consistency")
def _chk_mult_consistency(rng, n, tol):
    thr = tol if tol is not None else 1e-10
    c = random_conjugation(n, rng)
    t = random_symmetric(c, rng)
    y = random_symmetric(c, rng)
    jm = multiplier_matrix(t)
    direct = jordan_product(t, y)
    via = jm.matrix @ coords(y.a, jm.basis)
    r = float(np.linalg.norm(via - coords(direct.a, jm.basis)))
    scale = max(1.0, fro(t.a) * fro(y.a))
    return _Outcome(r <= thr * scale, r)


@_check("multiplier-spectrum")
def _chk_mult_spectrum(rng, n, tol):
    c = random_conjugation(n, rng)
    t = random_symmetric(c, rng)
    lam = np.linalg.eigvals(t.a)
    want = np.array(
        [0.5 * (lam[i] + lam[j]) for i in range(n) for j in range(i, n)]
    )
    got = multiplier_spectrum(t)
    cost = np.abs(want[:, None] - got[None, :])
    rows, cols = linear_sum_assignment(cost)
    r = float(cost[rows, cols].max())
    bound = (tol if tol is not None else 1e-7) * (1.0 + opnorm(t.a))
    return _Outcome(r <= bound, r, bound=bound, measured=r)


@_check("sylvester")
def _chk_sylvester(rng, n, tol):
    thr = tol if tol is not None else 1e-8
    c = random_conjugation(n, rng)
    t0 = random_symmetric(c, rng)
    lam = np.linalg.eigvals(t0.a)
    shift = 1.0 + float(np.max(np.abs(lam)))
    t = SymElement(c, t0.a + shift * np.eye(n))
    y = random_symmetric(c, rng)
    x = solve_sylvester(t, y.a)
    kappa = float(np.linalg.cond(multiplier_matrix(t).matrix))
    r = fro(t.a @ x + x @ t.a - y.a)
    bound = thr * kappa * fro(y.a)
    ok = r <= bound and symmetry_residual(x, c) <= bound
    return _Outcome(ok, r, bound=bound, measured=r)


@_check("automorphism")
def _chk_automorphism(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    cs = standard_conjugation(n)
    o = random_orthogonal(n, rng)
    # real orthogonal maps commute with entrywise conjugation
    rep = automorphism_report(o, cs, samples=8, seed=7)
    r = max(rep.class_residual, rep.product_residual, rep.adjoint_residual, rep.isometry_gap)
    ok = rep.commutes and rep.class_preserved and r <= thr * n
    c = random_conjugation(n, rng)
    v = haar_unitary(n, rng)
    rep2 = automorphism_report(v, c, samples=4, seed=7)
    ok = ok and (rep2.commutes == rep2.class_preserved)
    return _Outcome(ok, r)


@_check("normality")
def _chk_normality(rng, n, tol):
    c = random_conjugation(n, rng)
    b = c.fixed_basis
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    draws = [
        random_selfadjoint(c, rng).a,
        (b * z) @ b.conj().T,
        random_symmetric(c, rng).a,
    ]
    ok = True
    for a in draws:
        rep = normality_report(SymElement(c, a))
        ok = ok and rep.consistent
    return _Outcome(ok, 0.0 if ok else 1.0)


@_check("invertible-approx")
def _chk_invertible(rng, n, tol):
    thr = tol if tol is not None else 1e-9
    eps = 0.3
    c = random_conjugation(n, rng)
    t = random_symmetric(c, rng)
    # exercise the rank-deficient branch on alternating trials: zeroing a
    # row and column of the fixed-frame matrix keeps membership exact
    if rng.integers(0, 2) == 1:
        b = c.fixed_basis
        g = ginibre(n, rng)
        s = g + g.T
        s[:, -1] = 0.0
        s[-1, :] = 0.0
        t = SymElement(c, b @ s @ b.conj().T)
    s = invertible_approx(t, eps)
    smin = float(np.linalg.svd(s.a, compute_uv=False)[-1])
    dist = opnorm(s.a - t.a)
    r = symmetry_residual(s.a, c) / max(1.0, fro(s.a))
    ok = smin >= 0.5 * eps - 1e-10 and dist <= 0.5 * eps + thr and r <= thr
    return _Outcome(ok, r, bound=0.5 * eps, measured=dist)


@_check("invertible-path")
def _chk_inv_path(rng, n, tol):
    thr = tol if tol is not None else 1e-8
    c = random_conjugation(n, rng)
    t = invertible_approx(random_symmetric(c, rng), 0.5)
    r = 0.0
    worst_min = np.inf
    for s in (0.0, 0.25, 0.5, 0.75, 1.0):
        g = invertible_path(t, s)
        worst_min = min(worst_min, float(np.linalg.svd(g.a, compute_uv=False)[-1]))
        r = max(r, symmetry_residual(g.a, c) / max(1.0, fro(g.a)))
    r = max(r, fro(invertible_path(t, 0.0).a - t.a) / max(1.0, fro(t.a)))
    r = max(r, fro(invertible_path(t, 1.0).a - np.eye(n)))
    ok = r <= thr and worst_min > 0.0
    return _Outcome(ok, r, measured=worst_min)


@_check("generation")
def _chk_generation(rng, n, tol):
    c = random_conjugation(n, rng)
    z = random_symmetric(c, rng)
    full = generation_dimension(c, 2)
    ideal = jordan_simplicity_witness(c, z)
    ok = full == n * n and ideal == n * (n + 1) // 2
    return _Outcome(ok, 0.0 if ok else 1.0, measured=float(full))


@_check("irreducible")
def _chk_irreducible(rng, n, tol):
    c = random_conjugation(n, rng)
    t = random_symmetric(c, rng)
    ok = irreducibility_check(t.a)
    reducible = np.diag(np.arange(1.0, n + 1.0)).astype(np.complex128)
    ok = ok and not irreducibility_check(reducible)
    return _Outcome(ok, 0.0 if ok else 1.0)


DEFAULT_CHECKS = check_names()


@dataclass(frozen=True)
class SuiteConfig:
    """What to run: which checks, at which sizes, how many trials each."""

    dims: tuple = (4,)
    trials: int = 5
    seed: int = 0
    tol_override: float | None = None
    checks: tuple = field(default_factory=check_names)
    output_path: str | None = None

    def __post_init__(self):
        if isinstance(self.dims, (int, np.integer)):
            object.__setattr__(self, "dims", (int(self.dims),))
        try:
            dims = tuple(int(d) for d in self.dims)
        except (TypeError, ValueError):
            raise errors.BadConfig("dims must be a list of integers") from None
        object.__setattr__(self, "dims", dims)
        if isinstance(self.checks, str):
            object.__setattr__(self, "checks", (self.checks,))
        checks = tuple(str(c) for c in self.checks)
        object.__setattr__(self, "checks", checks)
        unknown = [c for c in checks if c not in _REGISTRY]
        if unknown:
            raise errors.BadConfig(f"unknown checks: {', '.join(unknown)}")
        if checks and not dims:
            raise errors.BadConfig("dims must be nonempty when checks are requested")
        if checks and any(d < 2 for d in dims):
            raise errors.BadConfig("checks need dimension >= 2")
        if not isinstance(self.trials, (int, np.integer)) or self.trials < 1:
            raise errors.BadConfig("trials must be a positive integer")
        object.__setattr__(self, "trials", int(self.trials))
        if not isinstance(self.seed, (int, np.integer)):
            raise errors.BadConfig("seed must be an integer")
        object.__setattr__(self, "seed", int(self.seed))
        if self.tol_override is not None:
            tv = float(self.tol_override)
            if not (np.isfinite(tv) and tv > 0):
                raise errors.BadConfig("tol_override must be positive")
            object.__setattr__(self, "tol_override", tv)


def run_suite(config):
    """Execute the configured checks and return the report document.

    Trials run in deterministic order; each gets the stream keyed by
    (seed, check, dimension, trial).  The report's `ok` field is True only
    when every trial of every check passed.  When an output path is
    configured, the report is written there atomically.
    """
    from .matio import save_report

    results = []
    timing = {}
    total_start = time.perf_counter()
    all_ok = True
    for name in config.checks:
        fn = _REGISTRY[name]
        for dim in config.dims:
            cell_start = time.perf_counter()
            passes = 0
            worst = 0.0
            bound = None
            measured = None
            for trial in range(config.trials):
                rng = stream(config.seed, name, dim, trial)
                out = fn(rng, dim, config.tol_override)
                passes += bool(out.ok)
                worst = max(worst, float(out.residual))
                if out.bound is not None:
                    bound = max(bound, float(out.bound)) if bound is not None else float(out.bound)
                if out.measured is not None:
                    measured = (
                        max(measured, float(out.measured))
                        if measured is not None
                        else float(out.measured)
                    )
            all_ok = all_ok and passes == config.trials
            results.append(
                {
                    "check": name,
                    "dimension": dim,
                    "trials": config.trials,
                    "passes": passes,
                    "worst_residual": worst,
                    "bound": bound,
                    "measured": measured,
                }
            )
            timing[f"{name}:{dim}"] = time.perf_counter() - cell_start
    timing["total"] = time.perf_counter() - total_start

    try:
        pkg_version = metadata.version("csjordan")
    except metadata.PackageNotFoundError:
        pkg_version = "unknown"
    report = {
        "schema": SCHEMA,
        "package_version": pkg_version,
        "config": {
            "dims": list(config.dims),
            "trials": config.trials,
            "seed": config.seed,
            "tol_override": config.tol_override,
            "checks": list(config.checks),
            "output_path": config.output_path,
        },
        "results": results,
        "ok": all_ok,
        "timing": timing,
    }
    if config.output_path:
        save_report(report, config.output_path)
    return report
