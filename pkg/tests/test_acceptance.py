"""Acceptance gate: twelve numbered criteria, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see every verdict; each
criterion is a separate test so a failure is localized.  All twelve together
stay well under two minutes.
"""

import time
from collections import Counter

import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from csjordan import (
    c_fixed_diagonalize,
    errors,
    generation_dimension,
    ginibre,
    haar_unitary,
    invertible_approx,
    invertible_path,
    is_symmetric,
    jordan_simplicity_witness,
    multiplier_kernel,
    multiplier_norm_report,
    multiplier_spectrum,
    normality_report,
    automorphism_report,
    polar_isometry,
    random_conjugation,
    random_orthogonal,
    random_selfadjoint,
    random_skew,
    random_symmetric,
    random_unit_vector,
    refined_polar,
    schatten_norm,
    solve_sylvester,
    standard_conjugation,
    stream,
    sym_part,
    symmetric_element,
    symmetry_residual,
    trace_norm_witness,
    trace_pair,
    wvn_diagonalize,
    wvn_perturbation,
)

_T0 = time.perf_counter()


def _verdict(num, ok, detail):
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


def test_criterion_01_refined_polar():
    start = time.perf_counter()
    worst_recon = 0.0
    worst_commute = 0.0
    for n in (2, 8, 32):
        for trial in range(100):
            rng = stream(1, "accept-polar", n, trial)
            c = random_conjugation(n, rng)
            t = random_symmetric(c, rng)
            rp = refined_polar(t)
            scale = np.linalg.norm(t.a)
            recon = np.linalg.norm(polar_isometry(c, rp.j) @ rp.modulus - t.a) / scale
            commute = (
                np.linalg.norm(rp.j.v @ np.conj(rp.modulus) - rp.modulus @ rp.j.v) / scale
            )
            worst_recon = max(worst_recon, recon)
            worst_commute = max(worst_commute, commute)
    elapsed = time.perf_counter() - start
    ok = worst_recon <= 1e-9 and worst_commute <= 1e-9 and elapsed < 10.0
    assert _verdict(
        1,
        ok,
        f"reconstruction {worst_recon:.2e}, commutation {worst_commute:.2e}, {elapsed:.1f}s",
    )


def test_criterion_02_perturbation_bound():
    worst_gap = -np.inf
    worst_resid = 0.0
    ranks_ok = True
    for trial in range(50):
        rng = stream(2, "accept-wvn", trial)
        c = random_conjugation(32, rng)
        t = random_selfadjoint(c, rng)
        e = random_unit_vector(32, rng)
        lam = np.linalg.eigvalsh(t.a)
        span = float(lam[-1] - lam[0])
        for intervals in (4, 8, 16, 32):
            cert = wvn_perturbation(t, e, intervals, 2.0)
            bound = 4.0 * span / np.sqrt(intervals)
            worst_gap = max(worst_gap, cert.measured_norm - bound)
            worst_resid = max(
                worst_resid,
                cert.commute_residual,
                float(np.linalg.norm(cert.k - cert.k.conj().T)),
                symmetry_residual(cert.k, c),
                symmetry_residual(cert.projection, c),
            )
            ranks_ok = ranks_ok and cert.rank_p <= 2 * intervals
    ok = worst_gap <= 0.0 and worst_resid <= 1e-9 and ranks_ok
    assert _verdict(
        2, ok, f"bound slack {-worst_gap:.2e}, worst residual {worst_resid:.2e}"
    )


def test_criterion_03_diagonalize_loop():
    ok = True
    details = []
    for epsilon in (0.1, 0.01):
        rng = stream(3, "accept-diag", int(1 / epsilon))
        c = random_conjugation(16, rng)
        t = random_selfadjoint(c, rng)
        d, basis = wvn_diagonalize(t, epsilon, 2.0)
        dist = schatten_norm(d.a - t.a, 2)
        scale = max(1.0, np.linalg.norm(d.a))
        member = is_symmetric(d.a, c, tol=1e-9 * scale)
        g = basis.conj().T @ d.a @ basis
        off = float(np.linalg.norm(g - np.diag(np.diag(g))))
        fixed = max(
            float(np.linalg.norm(c.apply(basis[:, i]) - basis[:, i])) for i in range(16)
        )
        ok = ok and dist < epsilon and member and off <= 1e-7 * scale and fixed <= 1e-7
        details.append(f"eps={epsilon}: dist {dist:.2e}, offdiag {off:.2e}")
    assert _verdict(3, ok, "; ".join(details))


def test_criterion_04_multiplier_spectrum_and_norm():
    worst_match = 0.0
    attained = True
    ratios_ok = True
    for n in range(2, 9):
        for trial in range(100):
            rng = stream(4, "accept-spec", n, trial)
            c = random_conjugation(n, rng)
            t = random_symmetric(c, rng)
            lam = np.linalg.eigvals(t.a)
            means = np.array(
                [0.5 * (lam[i] + lam[j]) for i in range(n) for j in range(i, n)]
            )
            spec = multiplier_spectrum(t)
            cost = np.abs(means[:, None] - spec[None, :])
            rows, cols = linear_sum_assignment(cost)
            dist = float(cost[rows, cols].max()) / (1.0 + schatten_norm(t.a, 0))
            worst_match = max(worst_match, dist)
            rep = multiplier_norm_report(t, samples=8, seed=trial)
            attained = attained and rep.attainment_gap == 0.0
            ratios_ok = ratios_ok and rep.max_ratio <= 1.0 + 1e-9
    ok = worst_match <= 1e-7 and attained and ratios_ok
    assert _verdict(
        4, ok, f"worst relative matching distance {worst_match:.2e}, attainment exact"
    )


def test_criterion_05_block_example():
    ok = True
    details = []
    for k in (2, 4):
        c = standard_conjugation(2 * k)
        t = symmetric_element(
            c, np.diag([1.0] * k + [-1.0] * k).astype(complex)
        )
        spec = multiplier_spectrum(t)
        snapped = np.round(spec.real).astype(int)
        exact = float(np.max(np.abs(spec - snapped)))
        counts = Counter(snapped.tolist())
        want = {1: k * (k + 1) // 2, -1: k * (k + 1) // 2, 0: k * k}
        dims = {mu: multiplier_kernel(t, float(mu))[0] for mu in (0, 1, -1)}
        good = (
            exact <= 1e-12
            and dict(counts) == want
            and dims == {0: k * k, 1: k * (k + 1) // 2, -1: k * (k + 1) // 2}
        )
        ok = ok and good
        details.append(f"k={k}: dims {dims[1]}/{dims[-1]}/{dims[0]}")
    assert _verdict(5, ok, "; ".join(details))


def test_criterion_06_sylvester():
    worst = 0.0
    member_ok = True
    for trial in range(100):
        rng = stream(6, "accept-sylv", trial)
        c = random_conjugation(8, rng)
        base = random_symmetric(c, rng).a
        shift = 1.0 + float(np.max(np.abs(np.linalg.eigvals(base))))
        t = symmetric_element(c, base + shift * np.eye(8))
        lam = np.linalg.eigvals(t.a)
        least = min(abs(lam[i] + lam[j]) for i in range(8) for j in range(i, 8))
        assert least >= 0.1
        y = random_symmetric(c, rng).a
        x = solve_sylvester(t, y)
        kappa = 2.0 * max(1.0, schatten_norm(t.a, 0)) / least
        resid = np.linalg.norm(t.a @ x + x @ t.a - y) / (kappa * np.linalg.norm(y))
        worst = max(worst, resid)
        member_ok = member_ok and symmetry_residual(x, c) <= 1e-8 * max(
            1.0, np.linalg.norm(x)
        )
    singular_raises = False
    c2 = standard_conjugation(2)
    t2 = symmetric_element(c2, np.diag([1.0, -1.0]).astype(complex))
    try:
        solve_sylvester(t2, np.eye(2))
    except errors.SingularJordanMultiplier:
        singular_raises = True
    ok = worst <= 1e-8 and member_ok and singular_raises
    assert _verdict(6, ok, f"worst residual/(kappa*|Y|) {worst:.2e}, singular raises")


def test_criterion_07_trace_and_roberts():
    worst_trace = 0.0
    worst_roberts = 0.0
    rng = stream(7, "accept-roberts")
    c = random_conjugation(16, rng)
    for _ in range(200):
        a = random_symmetric(c, rng)
        b = random_skew(c, rng)
        lam = (rng.standard_normal() + 1j * rng.standard_normal()) or 1.0
        tr = abs(trace_pair(a.a, b.a)) / (np.linalg.norm(a.a) * np.linalg.norm(b.a))
        worst_trace = max(worst_trace, tr)
        gap = abs(
            schatten_norm(a.a - lam * b.a, 0) - schatten_norm(a.a + lam * b.a, 0)
        )
        worst_roberts = max(worst_roberts, gap)
    ok = worst_trace <= 1e-10 and worst_roberts <= 1e-9
    assert _verdict(7, ok, f"trace {worst_trace:.2e}, roberts gap {worst_roberts:.2e}")


def test_criterion_08_duality_attainment():
    worst_ratio = np.inf
    norms_ok = True
    members_ok = True
    for trial in range(100):
        rng = stream(8, "accept-duality", trial)
        c = random_conjugation(8, rng)
        k = random_symmetric(c, rng)
        x, value = trace_norm_witness(k)
        worst_ratio = min(worst_ratio, value / schatten_norm(k.a, 1))
        norms_ok = norms_ok and schatten_norm(x.a, 0) <= 1.0 + 1e-9
        members_ok = members_ok and symmetry_residual(x.a, c) <= 1e-9
    ok = worst_ratio >= 1.0 - 1e-8 and norms_ok and members_ok
    assert _verdict(8, ok, f"worst attainment ratio {worst_ratio:.12f}")


def test_criterion_09_automorphisms():
    worst = 0.0
    all_pass = True
    for n in (2, 8):
        c = standard_conjugation(n)
        for trial in range(50):
            rng = stream(9, "accept-auto", n, trial)
            v = random_orthogonal(n, rng)
            rep = automorphism_report(v, c, samples=5, seed=trial)
            all_pass = all_pass and rep.commutes and rep.class_preserved
            worst = max(
                worst,
                rep.class_residual,
                rep.product_residual,
                rep.adjoint_residual,
                rep.isometry_gap,
            )
    agree = True
    for trial in range(100):
        rng = stream(9, "accept-auto-bicond", trial)
        c = random_conjugation(4, rng)
        v = haar_unitary(4, rng)
        rep = automorphism_report(v, c, samples=2, seed=trial)
        agree = agree and (rep.commutes == rep.class_preserved)
    ok = all_pass and worst <= 1e-9 and agree
    assert _verdict(
        9, ok, f"worst orthogonal residual {worst:.2e}, biconditional agrees"
    )


def test_criterion_10_invertible_approx_and_path():
    eps = 0.3
    dist_ok = True
    floor_ok = True
    for trial in range(100):
        rng = stream(10, "accept-inv", trial)
        c = random_conjugation(6, rng)
        if trial % 3 == 0:
            b = c.fixed_basis
            g = ginibre(6, rng)
            s = 0.5 * (g + g.T)
            s[:, -1] = 0.0
            s[-1, :] = 0.0
            t = symmetric_element(c, b @ s @ b.conj().T)
        else:
            t = random_symmetric(c, rng)
        out = invertible_approx(t, eps)
        dist_ok = dist_ok and schatten_norm(out.a - t.a, 0) <= 0.5 * eps + 1e-10
        smin = float(np.linalg.svd(out.a, compute_uv=False)[-1])
        floor_ok = floor_ok and smin >= 0.5 * eps - 1e-10

    path_ok = True
    for trial in range(5):
        rng = stream(10, "accept-path", trial)
        c = random_conjugation(6, rng)
        elem = invertible_approx(random_symmetric(c, rng), 0.4)
        scale = max(1.0, np.linalg.norm(elem.a))
        for k in range(50):
            s = k / 49.0
            pt = invertible_path(elem, s)
            smin = float(np.linalg.svd(pt.a, compute_uv=False)[-1])
            member = symmetry_residual(pt.a, c) <= 1e-8 * max(1.0, np.linalg.norm(pt.a))
            path_ok = path_ok and smin > 0.0 and member
        start_gap = np.linalg.norm(invertible_path(elem, 0.0).a - elem.a) / scale
        end_gap = float(np.linalg.norm(invertible_path(elem, 1.0).a - np.eye(6)))
        path_ok = path_ok and start_gap <= 1e-8 and end_gap <= 1e-8
    ok = dist_ok and floor_ok and path_ok
    assert _verdict(10, ok, "floored spectrum, in-class path, endpoints match")


def test_criterion_11_generation_and_simplicity():
    ok = True
    for n in range(2, 9):
        rng = stream(11, "accept-gen", n)
        c = random_conjugation(n, rng)
        ok = ok and generation_dimension(c, 2) == n * n
        for trial in range(3):
            z = random_symmetric(c, stream(11, "accept-gen-seed", n, trial))
            ok = ok and jordan_simplicity_witness(c, z) == n * (n + 1) // 2
    assert _verdict(11, ok, "degree-2 generation n^2, ideals full for n in 2..8")


def test_criterion_12_normality_equivalences():
    consistent = True
    witness = True
    for trial in range(500):
        rng = stream(12, "accept-normal", trial)
        c = random_conjugation(6, rng)
        kind = trial % 4
        if kind == 0:
            t = random_selfadjoint(c, rng)
        elif kind == 1:
            b = c.fixed_basis
            z = rng.standard_normal(6) + 1j * rng.standard_normal(6)
            t = symmetric_element(c, b @ np.diag(z) @ b.conj().T)
        elif kind == 2:
            t = random_symmetric(c, rng)
        else:
            t = sym_part(ginibre(6, rng) + 2j * np.eye(6), c)
        rep = normality_report(t)
        consistent = consistent and rep.consistent
        if not rep.is_normal:
            gram = t.a.conj().T @ t.a
            witness = witness and not is_symmetric(
                gram, c, tol=1e-9 * max(1.0, float(np.linalg.norm(gram)))
            )
    ok = consistent and witness
    assert _verdict(12, ok, "flags agree on 500 mixed draws; T*T leaves the class")


def test_total_runtime_budget():
    elapsed = time.perf_counter() - _T0
    print(f"acceptance total: {elapsed:.1f}s")
    assert elapsed < 120.0
