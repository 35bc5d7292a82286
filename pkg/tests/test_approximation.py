import numpy as np
import pytest

from csjordan import (
    SymElement,
    c_fixed_diagonalize,
    c_fixed_joint_diagonalize,
    dual_exponent,
    errors,
    finite_spectrum_approx,
    ginibre,
    invertible_approx,
    invertible_path,
    is_symmetric,
    random_conjugation,
    schatten_norm,
    standard_conjugation,
    stream,
    sym_part,
    symmetric_element,
    wvn_diagonalize,
    wvn_perturbation,
)


def selfadjoint_member(c, rng):
    s = sym_part(ginibre(c.n, rng), c).a
    return symmetric_element(c, 0.5 * (s + s.conj().T))


def fixed_frame_normal(c, rng):
    b = c.fixed_basis
    z = rng.standard_normal(c.n) + 1j * rng.standard_normal(c.n)
    return symmetric_element(c, b @ np.diag(z) @ b.conj().T)


def test_dual_exponent():
    assert dual_exponent(2.0) == pytest.approx(2.0)
    assert dual_exponent(4.0) == pytest.approx(4.0 / 3.0)
    assert dual_exponent(np.inf) == 1.0
    with pytest.raises(errors.InvalidP):
        dual_exponent(1.0)
    with pytest.raises(errors.InvalidP):
        dual_exponent(0.5)


def test_wvn_diagonal_oracle():
    c = standard_conjugation(3)
    t = symmetric_element(c, np.diag([1.0, 2.0, 3.0]).astype(complex))
    e = np.array([1.0, 0.0, 0.0], dtype=complex)
    cert = wvn_perturbation(t, e, 3, 2.0)
    # the seed is already an eigenvector: nothing to cancel
    assert np.allclose(cert.k, 0.0, atol=1e-14)
    assert cert.measured_norm < 1e-13
    assert np.allclose(cert.projection, np.diag([1.0, 0.0, 0.0]), atol=1e-13)
    assert cert.rank_p == 1
    assert cert.commute_residual < 1e-13
    assert cert.intervals == 3 and cert.p == 2.0
    assert cert.bound == pytest.approx(4.0 * (2.0 + 2e-12) / np.sqrt(3.0), rel=1e-6)


@pytest.mark.parametrize("intervals", [1, 4, 16])
def test_wvn_certificate_properties(intervals):
    rng = stream(31, "wvn-props", intervals)
    c = random_conjugation(8, rng)
    t = selfadjoint_member(c, rng)
    e = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    cert = wvn_perturbation(t, e, intervals, 2.0)
    scale = max(1.0, np.linalg.norm(t.a))
    assert cert.measured_norm <= cert.bound + 1e-9
    assert cert.commute_residual < 1e-9 * scale
    assert np.linalg.norm(cert.k - cert.k.conj().T) < 1e-12 * scale
    assert is_symmetric(cert.k, c, tol=1e-10 * scale)
    p = cert.projection
    assert np.linalg.norm(p @ p - p) < 1e-10
    assert np.linalg.norm(p - p.conj().T) < 1e-12
    assert is_symmetric(p, c, tol=1e-9)
    # the seed lands inside the projected subspace
    assert np.linalg.norm(p @ e - e) < 1e-8 * np.linalg.norm(e)
    assert cert.rank_p <= 2 * intervals
    assert abs(np.trace(p).real - cert.rank_p) < 1e-9
    shifted = t.a + cert.k
    assert np.linalg.norm(shifted @ p - p @ shifted) < 1e-9 * scale


def test_wvn_argument_errors():
    rng = stream(32, "wvn-errors")
    c = random_conjugation(4, rng)
    t = selfadjoint_member(c, rng)
    e = np.ones(4, dtype=complex)
    with pytest.raises(errors.InvalidP):
        wvn_perturbation(t, e, 4, 1.0)
    with pytest.raises(errors.InvalidParameter):
        wvn_perturbation(t, e, 0, 2.0)
    with pytest.raises(errors.InvalidParameter):
        wvn_perturbation(t, e, 2.5, 2.0)
    with pytest.raises(errors.ZeroVector):
        wvn_perturbation(t, np.zeros(4), 4, 2.0)
    skewed = SymElement(c, t.a + 1j * np.eye(4))
    with pytest.raises(errors.NotSelfadjoint):
        wvn_perturbation(skewed, e, 4, 2.0)
    h = ginibre(4, rng)
    outside = SymElement(c, 0.5 * (h + h.conj().T))
    with pytest.raises(errors.NotSymmetric):
        wvn_perturbation(outside, e, 4, 2.0)


@pytest.mark.parametrize("epsilon", [0.1, 0.01])
def test_wvn_diagonalize(epsilon):
    rng = stream(33, "wvn-diag", int(1.0 / epsilon))
    c = random_conjugation(6, rng)
    t = selfadjoint_member(c, rng)
    d, basis = wvn_diagonalize(t, epsilon, 2.0)
    assert schatten_norm(d.a - t.a, 2) < epsilon
    assert is_symmetric(d.a, c, tol=1e-9)
    assert np.linalg.norm(basis.conj().T @ basis - np.eye(6)) < 1e-9
    # every basis vector is conjugation fixed
    for i in range(6):
        assert np.linalg.norm(c.apply(basis[:, i]) - basis[:, i]) < 1e-8
    g = basis.conj().T @ d.a @ basis
    off = g - np.diag(np.diag(g))
    assert np.linalg.norm(off) < 1e-7 * max(1.0, np.linalg.norm(d.a))


def test_wvn_diagonalize_epsilon_gate():
    c = standard_conjugation(2)
    t = symmetric_element(c, np.eye(2, dtype=complex))
    for bad in (0.0, -1.0, np.nan, np.inf):
        with pytest.raises(errors.InvalidEpsilon):
            wvn_diagonalize(t, bad, 2.0)


def test_c_fixed_diagonalize_normal():
    rng = stream(34, "cfixed", 5)
    c = random_conjugation(5, rng)
    t = fixed_frame_normal(c, rng)
    basis, eigs = c_fixed_diagonalize(t)
    assert np.linalg.norm(basis.conj().T @ basis - np.eye(5)) < 1e-10
    for i in range(5):
        v = basis[:, i]
        assert np.linalg.norm(c.apply(v) - v) < 1e-9
        assert np.linalg.norm(t.a @ v - eigs[i] * v) < 1e-9 * max(1.0, abs(eigs[i]))


def test_c_fixed_diagonalize_gates():
    rng = stream(35, "cfixed-gates")
    c = random_conjugation(4, rng)
    generic = sym_part(ginibre(4, rng), c)
    with pytest.raises(errors.NotNormal):
        c_fixed_diagonalize(generic)
    h = ginibre(4, rng)
    outside = SymElement(c, 0.5 * (h + h.conj().T))
    with pytest.raises(errors.NotSymmetric):
        c_fixed_diagonalize(outside)


def test_c_fixed_joint_diagonalize():
    rng = stream(36, "cfixed-joint", 4)
    c = random_conjugation(4, rng)
    b = c.fixed_basis
    z1 = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    z2 = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    t1 = symmetric_element(c, b @ np.diag(z1) @ b.conj().T)
    t2 = symmetric_element(c, b @ np.diag(z2) @ b.conj().T)
    basis, eigenlists = c_fixed_joint_diagonalize([t1, t2])
    assert np.linalg.norm(basis.conj().T @ basis - np.eye(4)) < 1e-10
    assert len(eigenlists) == 2
    for t, eigs in zip((t1, t2), eigenlists):
        for i in range(4):
            v = basis[:, i]
            assert np.linalg.norm(t.a @ v - eigs[i] * v) < 1e-8 * max(1.0, abs(eigs[i]))
    for i in range(4):
        v = basis[:, i]
        assert np.linalg.norm(c.apply(v) - v) < 1e-9


def test_c_fixed_joint_diagonalize_gates():
    rng = stream(37, "cfixed-joint-gates", 3)
    c = random_conjugation(3, rng)
    b = c.fixed_basis
    t1 = symmetric_element(c, b @ np.diag([1.0, 2.0, 3.0]).astype(complex) @ b.conj().T)
    s = np.array([[1.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 3.0]])
    t2 = symmetric_element(c, b @ s @ b.conj().T)
    with pytest.raises(errors.InvalidParameter):
        c_fixed_joint_diagonalize([])
    with pytest.raises(errors.InvalidParameter):
        c_fixed_joint_diagonalize([t1, t2])
    d = random_conjugation(3, stream(38, "cfixed-other"))
    t3 = fixed_frame_normal(d, stream(39, "cfixed-other-elem"))
    with pytest.raises(errors.ConjugationMismatch):
        c_fixed_joint_diagonalize([t1, t3])


def test_invertible_approx_oracles():
    c = standard_conjugation(2)
    t = symmetric_element(c, np.diag([1.0, 0.0]).astype(complex))
    out = invertible_approx(t, 0.2)
    assert np.allclose(out.a, np.diag([1.0, 0.1]), atol=1e-12)

    z = symmetric_element(c, np.zeros((2, 2), dtype=complex))
    out0 = invertible_approx(z, 0.2)
    assert np.allclose(out0.a, 0.1 * np.eye(2), atol=1e-12)

    ident = symmetric_element(c, np.eye(2, dtype=complex))
    fast = invertible_approx(ident, 0.5)
    assert np.array_equal(fast.a, ident.a)
    assert fast.a is not ident.a

    for bad in (0.0, -0.3, np.nan, np.inf):
        with pytest.raises(errors.InvalidEpsilon):
            invertible_approx(ident, bad)


def test_invertible_approx_random():
    for seed in range(5):
        rng = stream(40, "inv-approx", 5, seed)
        c = random_conjugation(5, rng)
        t = sym_part(ginibre(5, rng), c)
        eps = 0.3
        out = invertible_approx(t, eps)
        smin = np.linalg.svd(out.a, compute_uv=False)[-1]
        assert smin >= 0.5 * eps - 1e-10
        assert schatten_norm(out.a - t.a, 0) <= 0.5 * eps + 1e-9
        assert is_symmetric(out.a, c, tol=1e-9)


def test_invertible_approx_rank_deficient():
    rng = stream(41, "inv-approx-rank", 4)
    c = random_conjugation(4, rng)
    b = c.fixed_basis
    g = ginibre(4, rng)
    s = 0.5 * (g + g.T)
    s[:, 0] = 0.0
    s[0, :] = 0.0
    t = symmetric_element(c, b @ s @ b.conj().T)
    out = invertible_approx(t, 0.4)
    smin = np.linalg.svd(out.a, compute_uv=False)[-1]
    assert smin >= 0.2 - 1e-10
    assert is_symmetric(out.a, c, tol=1e-9)
    assert schatten_norm(out.a - t.a, 0) <= 0.2 + 1e-9


def test_finite_spectrum_oracle():
    c = standard_conjugation(2)
    t = symmetric_element(c, np.diag([0.1, 0.9]).astype(complex))
    out = finite_spectrum_approx(t, 1.0)
    assert np.allclose(out.a, np.diag([0.0, 1.0]), atol=1e-12)
    # halves round up
    one = symmetric_element(standard_conjugation(1), np.array([[0.5]], dtype=complex))
    assert np.allclose(finite_spectrum_approx(one, 1.0).a, [[1.0]], atol=1e-12)


def test_finite_spectrum_random():
    rng = stream(42, "finite-spec", 6)
    c = random_conjugation(6, rng)
    t = selfadjoint_member(c, rng)
    eps = 0.3
    out = finite_spectrum_approx(t, eps)
    assert schatten_norm(out.a - t.a, 0) <= 0.5 * eps + 1e-9
    assert is_symmetric(out.a, c, tol=1e-9)
    assert np.linalg.norm(out.a - out.a.conj().T) < 1e-10
    eigs = np.linalg.eigvalsh(out.a)
    distinct = np.unique(np.round(eigs / eps).astype(int))
    span = float(np.max(np.linalg.eigvalsh(t.a)) - np.min(np.linalg.eigvalsh(t.a)))
    assert len(distinct) <= int(np.ceil(span / eps)) + 1


def test_finite_spectrum_gates():
    c = standard_conjugation(2)
    sym_not_sa = symmetric_element(c, np.array([[0.0, 1j], [1j, 0.0]]))
    with pytest.raises(errors.NotSelfadjoint):
        finite_spectrum_approx(sym_not_sa, 0.5)
    t = symmetric_element(c, np.eye(2, dtype=complex))
    with pytest.raises(errors.InvalidEpsilon):
        finite_spectrum_approx(t, 0.0)


def test_invertible_path():
    rng = stream(43, "inv-path", 4)
    c = random_conjugation(4, rng)
    raw = sym_part(ginibre(4, rng), c)
    elem = invertible_approx(raw, 0.4)
    start = invertible_path(elem, 0.0)
    assert np.linalg.norm(start.a - elem.a) < 1e-9 * max(1.0, np.linalg.norm(elem.a))
    end = invertible_path(elem, 1.0)
    assert np.linalg.norm(end.a - np.eye(4)) < 1e-9
    prev = start.a
    for t in (0.1, 0.25, 0.5, 0.51, 0.75, 0.9, 1.0):
        pt = invertible_path(elem, t)
        assert is_symmetric(pt.a, c, tol=1e-8)
        smin = np.linalg.svd(pt.a, compute_uv=False)[-1]
        assert smin > 1e-3
        # modest step-to-step continuity
        assert np.linalg.norm(pt.a - prev) < 3.0
        prev = pt.a


def test_invertible_path_gates():
    c = standard_conjugation(2)
    singular = symmetric_element(c, np.diag([1.0, 0.0]).astype(complex))
    with pytest.raises(errors.NotInvertible):
        invertible_path(singular, 0.5)
    elem = symmetric_element(c, np.eye(2, dtype=complex))
    for bad in (-0.1, 1.1, np.nan):
        with pytest.raises(errors.InvalidParameter):
            invertible_path(elem, bad)
