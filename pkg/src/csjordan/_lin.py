"""Low-level dense linear algebra helpers shared across the package."""

from __future__ import annotations

import numpy as np

from . import errors

EPS = float(np.finfo(np.float64).eps)


def as_square(a, name="matrix"):
    """Coerce to a square complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise errors.DimensionMismatch(f"{name} must be square, got shape {np.shape(a)}")
    return m


def as_vector(x, n=None, name="vector"):
    v = np.asarray(x, dtype=np.complex128).reshape(-1)
    if n is not None and v.shape[0] != n:
        raise errors.DimensionMismatch(f"{name} must have length {n}, got {v.shape[0]}")
    return v


def default_tol(*mats, n=None):
    """Scale-aware default tolerance: 1e-12 * n * max(1, ||A||_F).

    With several inputs the largest norm and dimension win.  Every public
    operation accepts an explicit tol that overrides this policy.
    """
    dim = 1 if n is None else int(n)
    scale = 1.0
    for a in mats:
        a = np.asarray(a)
        if a.ndim:
            dim = max(dim, a.shape[-1])
        scale = max(scale, float(np.linalg.norm(a)))
    return 1e-12 * dim * scale


def fro(a):
    return float(np.linalg.norm(a))


def opnorm(a):
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def hermitian_part(a):
    return 0.5 * (a + a.conj().T)


def pivoted_onb(cols, rank=None, tol=None):
    """Orthonormal basis of the column span by pivoted modified Gram-Schmidt.

    Pivot order is deterministic: largest remaining column norm first, ties
    resolved by lowest index.  Stops at `rank` columns when given, otherwise
    when every remaining column is below `tol`.
    """
    a = np.array(cols, copy=True)
    n, k = a.shape
    if tol is None:
        col_max = float(np.max(np.linalg.norm(a, axis=0))) if k else 0.0
        tol = 1e-10 * max(1.0, col_max)
    picked = []
    live = list(range(k))
    while live and (rank is None or len(picked) < rank):
        norms = np.array([np.linalg.norm(a[:, j]) for j in live])
        p = int(np.argmax(norms))
        if norms[p] <= tol:
            break
        j = live.pop(p)
        v = a[:, j] / np.linalg.norm(a[:, j])
        for u in picked:
            v = v - u * np.vdot(u, v)
        nv = np.linalg.norm(v)
        if nv <= 0.5:
            continue
        v = v / nv
        picked.append(v)
        for j2 in live:
            a[:, j2] = a[:, j2] - v * np.vdot(v, a[:, j2])
    if not picked:
        return np.zeros((n, 0), dtype=a.dtype)
    return np.stack(picked, axis=1)


def inv_sqrt_psd(h):
    """Inverse square root of a Hermitian positive definite matrix."""
    w, v = np.linalg.eigh(hermitian_part(h))
    w = np.maximum(w, EPS)
    return (v * (1.0 / np.sqrt(w))) @ v.conj().T


def gap_groups(sorted_vals, ctol):
    """Group indices of an ascending real sequence into clusters with
    consecutive gaps <= ctol."""
    m = len(sorted_vals)
    if m == 0:
        return []
    groups = [[0]]
    for i in range(1, m):
        if sorted_vals[i] - sorted_vals[i - 1] <= ctol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def joint_eigen_clusters(mats, ctol=None):
    """Cluster a commuting normal family into joint eigenspaces.

    Refines an orthonormal block decomposition successively by the Hermitian
    and anti-Hermitian parts of each matrix; all splits use eigh, so the
    returned blocks are orthonormal to machine precision even for clustered
    spectra.  Returns (blocks, values) where blocks[g] is an n x k_g column
    block and values[g][t] is the eigenvalue of mats[t] on block g.
    """
    mats = [as_square(t) for t in mats]
    n = mats[0].shape[0]
    herms = []
    for t in mats:
        herms.append(hermitian_part(t))
        herms.append(hermitian_part(-1j * t))
    if ctol is None:
        ctol = max(default_tol(h) for h in herms)
    blocks = [np.eye(n, dtype=np.complex128)]
    for h in herms:
        nxt = []
        for z in blocks:
            if z.shape[1] == 1:
                nxt.append(z)
                continue
            hz = hermitian_part(z.conj().T @ h @ z)
            w, v = np.linalg.eigh(hz)
            for grp in gap_groups(w, ctol):
                nxt.append(z @ v[:, grp])
        blocks = nxt
    values = []
    for z in blocks:
        values.append(
            [complex(np.trace(z.conj().T @ t @ z) / z.shape[1]) for t in mats]
        )
    return blocks, values


def fixed_onb_of_symmetric_unitary(u):
    """Orthonormal basis fixed by the antilinear map x -> u conj(x).

    Works on the real doubled form: the map is a real-linear involution with
    matrix [[Re u, Im u], [Im u, -Re u]]; the fixed subspace has real
    dimension n and a real-orthonormal basis of it is complex-orthonormal.
    Deterministic via pivoted Gram-Schmidt on the fixed-space projector.
    """
    u = as_square(u)
    n = u.shape[0]
    ur, ui = u.real, u.imag
    inv = np.block([[ur, ui], [ui, -ur]])
    proj = 0.5 * (np.eye(2 * n) + inv)
    cols = pivoted_onb(proj, rank=n)
    return cols[:n, :] + 1j * cols[n:, :]
