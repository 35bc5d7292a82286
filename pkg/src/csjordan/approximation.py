"""Constructive approximation inside the symmetric class.

Three families of procedures: structured Weyl-von Neumann perturbations
that make a selfadjoint element commute with a finite-rank projection in
the class (and, iterated, diagonalize it in a conjugation-fixed basis),
exact C-fixed diagonalization of normal elements, and norm-density
constructions (invertible and finite-spectrum approximants, paths through
the invertibles).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import errors
from ._lin import (
    EPS,
    as_vector,
    default_tol,
    fixed_onb_of_symmetric_unitary,
    fro,
    gap_groups,
    hermitian_part,
    joint_eigen_clusters,
    opnorm,
    pivoted_onb,
)
from .conjugation import Conjugation, conjugation_path
from .decomposition import extend_partial_conjugation, refined_polar
from .jordan_space import SymElement, is_symmetric, schatten_norm

# interval counts beyond this add nothing: the width drops below the
# eigenvalue clustering resolution, so every cluster already sits alone
MAX_INTERVALS = 2**40


@dataclass(frozen=True)
class PerturbationCertificate:
    """Outcome of one structured perturbation.

    k is the selfadjoint perturbation in the class, projection the
    finite-rank commuting projection containing the seed vector; bound is
    the a-priori value 4(b-a)/intervals^(1/q), measured_norm the actual
    Schatten p-norm of k.
    """

    k: np.ndarray = field(repr=False)
    projection: np.ndarray = field(repr=False)
    intervals: int
    p: float
    measured_norm: float
    bound: float
    commute_residual: float
    rank_p: int


def dual_exponent(p):
    """q with 1/p + 1/q = 1; requires p > 1 (q = 1 at p = inf)."""
    p = float(p)
    if not p > 1.0:
        raise errors.InvalidP(f"the bound needs p > 1, got {p}")
    if np.isinf(p):
        return 1.0
    return p / (p - 1.0)


def _check_selfadjoint_member(a, c, tol):
    if np.linalg.norm(a - a.conj().T) > tol:
        raise errors.NotSelfadjoint("element is not selfadjoint within tolerance")
    if not is_symmetric(a, c, tol=tol):
        raise errors.NotSymmetric("element is outside the symmetric class")


def wvn_perturbation(t, e, intervals, p, tol=None):
    """Finite-rank selfadjoint perturbation making t commute with a small
    projection whose range contains e.

    Partitions the spectral interval into equal parts, takes within each
    part the span of the seed component and its conjugate, and cancels the
    coupling between that span and the rest of the part.  Eigenvalues are
    first snapped into clusters so a numerically degenerate eigenspace is
    never split across a partition boundary; a cluster landing exactly on
    an interior boundary goes to the lower part, and the last part is
    closed.
    """
    c = t.conj
    a = np.asarray(t.a, dtype=np.complex128)
    n = c.n
    q = dual_exponent(p)
    if intervals != int(intervals) or not 1 <= int(intervals) <= 2**53:
        raise errors.InvalidParameter(f"intervals must be a positive integer, got {intervals}")
    intervals = int(intervals)
    if tol is None:
        tol = default_tol(a)
    _check_selfadjoint_member(a, c, tol)
    e = as_vector(e, n, "e")
    ne = float(np.linalg.norm(e))
    if not np.isfinite(ne) or ne < 1e-150:
        raise errors.ZeroVector("seed vector must be nonzero")

    h = hermitian_part(a)
    lam, vecs = np.linalg.eigh(h)
    scale = max(1.0, float(np.max(np.abs(lam))))
    ctol = 64.0 * n * EPS * scale
    groups = gap_groups(lam, ctol)
    lo = float(lam[0]) - tol
    hi = float(lam[-1]) + tol
    span = hi - lo

    # sparse assignment: only occupied parts matter, never more than n
    occupied = {}
    for grp in groups:
        rep = float(np.mean(lam[grp]))
        frac = (rep - lo) / span if span > 0 else 0.0
        pos = frac * intervals
        idx = int(np.floor(pos))
        if idx > 0 and pos == idx:
            idx -= 1
        idx = min(max(idx, 0), intervals - 1)
        occupied.setdefault(idx, []).extend(grp)

    k_mat = np.zeros((n, n), dtype=np.complex128)
    proj = np.zeros((n, n), dtype=np.complex128)
    rank_p = 0
    for cols in occupied.values():
        z = vecs[:, cols]
        p_i = z @ z.conj().T
        reduce_res = fro(c.sandwich(p_i) - p_i)
        if reduce_res > 1e-7 * max(1.0, np.sqrt(n)):
            raise errors.NotSymmetric(
                "a spectral subspace fails to reduce the conjugation; "
                "the element is not symmetric at the required accuracy"
            )
        e_i = p_i @ e
        if float(np.linalg.norm(e_i)) <= 1e-13 * ne:
            continue
        m_i = pivoted_onb(np.stack([e_i, c.apply(e_i)], axis=1))
        q_i = m_i @ m_i.conj().T
        r_i = p_i - q_i
        k_mat -= q_i @ h @ r_i + r_i @ h @ q_i
        proj += q_i
        rank_p += m_i.shape[1]
    k_mat = hermitian_part(k_mat)
    proj = hermitian_part(proj)

    shifted = a + k_mat
    commute = fro(shifted @ proj - proj @ shifted)
    return PerturbationCertificate(
        k=k_mat,
        projection=proj,
        intervals=intervals,
        p=float(p),
        measured_norm=schatten_norm(k_mat, p),
        bound=4.0 * span / float(intervals) ** (1.0 / q),
        commute_residual=commute,
        rank_p=rank_p,
    )


def _intervals_for_budget(span, budget, q):
    """Smallest comfortable interval count with 4*span/n^(1/q) below budget."""
    if span <= 0.0 or budget <= 0.0:
        return 1
    ratio = 8.0 * span / budget
    if ratio <= 1.0:
        return 1
    ln_n = q * np.log(ratio)
    if ln_n >= 40.0 * np.log(2.0):
        return MAX_INTERVALS
    return min(MAX_INTERVALS, int(np.ceil(np.exp(ln_n))) + 1)


def wvn_diagonalize(t, epsilon, p, tol=None):
    """Diagonalizable approximant within epsilon in Schatten p-norm.

    Walks the conjugation-fixed basis, at each step perturbing the current
    element (geometrically shrinking budgets, so the total stays below
    epsilon) until it commutes with a block containing the next basis
    vector, then recurses on the orthogonal complement.  Each step absorbs
    at least one dimension, so at most n perturbations happen.  Returns
    (d, b) with d the perturbed element and b a C-fixed orthonormal
    eigenbasis of it.
    """
    c = t.conj
    n = c.n
    a = np.asarray(t.a, dtype=np.complex128)
    if not (np.isfinite(epsilon) and epsilon > 0.0):
        raise errors.InvalidEpsilon(f"epsilon must be positive, got {epsilon}")
    q = dual_exponent(p)
    if tol is None:
        tol = default_tol(a)
    _check_selfadjoint_member(a, c, tol)

    d = hermitian_part(a)
    fb = c.fixed_basis
    queue = [fb[:, i] for i in range(n)]
    w = np.eye(n, dtype=np.complex128)
    step = 0
    while w.shape[1] > 0:
        step += 1
        if step > 2 * n + 4:
            raise errors.AlgebraError("perturbation sweep failed to terminate")
        m = w.shape[1]
        # next seed: first queued fixed-basis vector still visible in the
        # remaining subspace (projections only shrink, so skipped vectors
        # stay negligible); fall back to a frame vector once drained
        e_coord = None
        while queue:
            ec = w.conj().T @ queue.pop(0)
            if float(np.linalg.norm(ec)) > 1e-8:
                e_coord = ec
                break
        if e_coord is None:
            e_coord = np.zeros(m, dtype=np.complex128)
            e_coord[0] = 1.0

        u_sub = w.conj().T @ c.u @ np.conj(w)
        c_sub = Conjugation(0.5 * (u_sub + u_sub.T), tol=1e-8)
        t_sub = hermitian_part(w.conj().T @ d @ w)
        ev = np.linalg.eigvalsh(t_sub)
        span = float(ev[-1] - ev[0]) + 2.0 * tol
        budget = epsilon / 2.0**step
        n_int = _intervals_for_budget(span, budget, q)
        while True:
            cert = wvn_perturbation(SymElement(c_sub, t_sub), e_coord, n_int, p)
            if cert.measured_norm < budget or n_int >= MAX_INTERVALS:
                break
            n_int = min(n_int * 16, MAX_INTERVALS)
        d = hermitian_part(d + w @ cert.k @ w.conj().T)
        r = max(int(round(float(np.trace(cert.projection).real))), 1)
        w = w @ pivoted_onb(np.eye(m) - cert.projection, rank=m - r)

    elem = SymElement(c, d)
    relaxed = max(default_tol(d), 1e-9 * max(1.0, fro(d)))
    basis, _ = c_fixed_diagonalize(elem, tol=relaxed)
    return elem, basis


def c_fixed_diagonalize(t, tol=None):
    """Orthonormal eigenbasis of a normal element with every vector fixed
    by the conjugation.

    The eigenspaces of a normal element of the class are invariant under
    the conjugation, and a conjugation restricted to an invariant subspace
    again has a fixed orthonormal basis; assembling those per eigenspace
    gives the basis.  Returns (b, eigenvalues) with t b_i = d_i b_i and
    C(b_i) = b_i columnwise.
    """
    c = t.conj
    a = np.asarray(t.a, dtype=np.complex128)
    if tol is None:
        tol = default_tol(a)
    if fro(a @ a.conj().T - a.conj().T @ a) > tol * max(1.0, fro(a)):
        raise errors.NotNormal("element is not normal within tolerance")
    if not is_symmetric(a, c, tol=tol):
        raise errors.NotSymmetric("element is outside the symmetric class")
    blocks, values = joint_eigen_clusters([a])
    cols = []
    eigs = []
    for z, val in zip(blocks, values):
        u_g = z.conj().T @ c.u @ np.conj(z)
        f = fixed_onb_of_symmetric_unitary(0.5 * (u_g + u_g.T))
        cols.append(z @ f)
        eigs.extend([val[0]] * z.shape[1])
    return np.concatenate(cols, axis=1), np.array(eigs)


def c_fixed_joint_diagonalize(ts, tol=None):
    """One C-fixed orthonormal basis diagonalizing a commuting normal family.

    Returns (b, eigenlists) where eigenlists[j][i] is the eigenvalue of
    ts[j] on column i.
    """
    if not ts:
        raise errors.InvalidParameter("need at least one element")
    c = ts[0].conj
    mats = [np.asarray(t.a, dtype=np.complex128) for t in ts]
    if tol is None:
        tol = max(default_tol(a) for a in mats)
    for t, a in zip(ts, mats):
        if t.conj is not c and fro(t.conj.u - c.u) > tol:
            raise errors.ConjugationMismatch("family must share one conjugation")
        if fro(a @ a.conj().T - a.conj().T @ a) > tol * max(1.0, fro(a)):
            raise errors.NotNormal("every element must be normal")
        if not is_symmetric(a, c, tol=tol):
            raise errors.NotSymmetric("every element must lie in the class")
    for i, x in enumerate(mats):
        for y in mats[i + 1 :]:
            if fro(x @ y - y @ x) > tol * max(1.0, fro(x)) * max(1.0, fro(y)):
                raise errors.InvalidParameter("family must commute")
    blocks, values = joint_eigen_clusters(mats)
    cols = []
    per_mat = [[] for _ in mats]
    for z, val in zip(blocks, values):
        u_g = z.conj().T @ c.u @ np.conj(z)
        f = fixed_onb_of_symmetric_unitary(0.5 * (u_g + u_g.T))
        cols.append(z @ f)
        for j in range(len(mats)):
            per_mat[j].extend([val[j]] * z.shape[1])
    return np.concatenate(cols, axis=1), [np.array(v) for v in per_mat]


def invertible_approx(t, epsilon):
    """Invertible element of the class within epsilon/2 in operator norm.

    Floors the modulus spectrum at epsilon/2; the flooring commutes with
    the conjugation data of the refined polar factorization, so the result
    stays in the class and its smallest singular value is at least
    epsilon/2.
    """
    if not (np.isfinite(epsilon) and epsilon > 0.0):
        raise errors.InvalidEpsilon(f"epsilon must be positive, got {epsilon}")
    rp = refined_polar(t)
    lam, vv = np.linalg.eigh(rp.modulus)
    lam = np.maximum(lam, 0.0)
    if float(lam[0]) > 0.5 * epsilon:
        return SymElement(t.conj, np.array(t.a, copy=True))
    jt = extend_partial_conjugation(rp.j, t.conj)
    floored = (vv * np.maximum(lam, 0.5 * epsilon)) @ vv.conj().T
    w_iso = t.conj.u @ np.conj(jt.u)
    return SymElement(t.conj, w_iso @ floored)


def finite_spectrum_approx(t, epsilon, tol=None):
    """Selfadjoint element of the class with few eigenvalues, within
    epsilon/2 in operator norm.

    Rounds the spectrum to the grid epsilon * Z (anchored at zero, halves
    round up) in a C-fixed eigenbasis, so the result has at most
    ceil((b - a)/epsilon) + 1 distinct eigenvalues.
    """
    if not (np.isfinite(epsilon) and epsilon > 0.0):
        raise errors.InvalidEpsilon(f"epsilon must be positive, got {epsilon}")
    a = np.asarray(t.a, dtype=np.complex128)
    if tol is None:
        tol = default_tol(a)
    if np.linalg.norm(a - a.conj().T) > tol:
        raise errors.NotSelfadjoint("element is not selfadjoint within tolerance")
    basis, eigs = c_fixed_diagonalize(t, tol=tol)
    snapped = epsilon * np.floor(np.real(eigs) / epsilon + 0.5)
    s = hermitian_part((basis * snapped) @ basis.conj().T)
    return SymElement(t.conj, s)


def invertible_path(elem, t, tol=None):
    """Point at parameter t on a path of invertibles in the class from the
    element to the identity.

    First half straightens the modulus (f_s(x) = s + (1 - s)x, s = 2t), so
    the midpoint is the polar unitary; the second half carries that unitary
    to the identity along a conjugation path, staying unitary and in the
    class throughout.
    """
    if not (np.isfinite(t) and 0.0 <= t <= 1.0):
        raise errors.InvalidParameter(f"t must lie in [0, 1], got {t}")
    c = elem.conj
    rp = refined_polar(elem)
    lam, vv = np.linalg.eigh(rp.modulus)
    smax = float(lam[-1]) if len(lam) else 0.0
    if float(lam[0]) <= 1e-10 * max(1.0, smax):
        raise errors.NotInvertible("element is singular at the working resolution")
    jt = extend_partial_conjugation(rp.j, c)
    if t <= 0.5:
        s = 2.0 * t
        qmat = (vv * (s + (1.0 - s) * lam)) @ vv.conj().T
        return SymElement(c, c.u @ np.conj(jt.u) @ qmat)
    js = conjugation_path(jt, c, 2.0 * t - 1.0, tol=tol)
    return SymElement(c, c.u @ np.conj(js.u))
