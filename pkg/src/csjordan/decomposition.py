"""Takagi factorization and the refined polar decomposition.

Every complex symmetric A factors as A = Q Sigma Q^T with Q unitary and
Sigma the singular values.  Through the fixed basis of a conjugation this
upgrades the polar decomposition of a C-symmetric T to T = C J |T| where J
is a partial conjugation supported on ran|T| that commutes with |T|.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import errors
from .conjugation import Conjugation
from ._lin import EPS, as_square, default_tol, hermitian_part, inv_sqrt_psd, pivoted_onb


@dataclass(frozen=True)
class TakagiFactors:
    """Unitary q and nonincreasing nonnegative sigma with A = q diag(sigma) q^T.

    q is not unique: any unitary mixing within a repeated singular value
    block is equally valid.
    """

    q: np.ndarray = field(repr=False)
    sigma: np.ndarray

    def reconstruct(self):
        return self.q @ (self.sigma[:, None] * self.q.T)


def takagi(a, tol=None):
    """Takagi factorization of a complex symmetric matrix.

    Solved through the real doubled eigenproblem: with A = A1 + i A2 the
    real symmetric matrix [[A1, A2], [A2, -A1]] has spectrum {s} U {-s} and
    its eigenvector [u; v] at s >= 0 yields q = u + i v with
    A conj(q) = s q.  eigh keeps the computed family orthonormal even for
    clustered singular values; the near-kernel block (where the +s and -s
    clusters merge) is rebuilt from the complex span of all near-zero
    eigenvectors, and a final Hermitian polish restores unitarity without
    disturbing the reconstruction.
    """
    a = as_square(a, "a")
    n = a.shape[0]
    if tol is None:
        tol = default_tol(a)
    if np.linalg.norm(a - a.T) > tol:
        raise errors.NotSymmetric("takagi needs a complex symmetric matrix")
    a = 0.5 * (a + a.T)
    m = np.block([[a.real, a.imag], [a.imag, -a.real]])
    lam, w = np.linalg.eigh(m)
    order = np.argsort(-lam, kind="stable")[:n]
    lam_top = lam[order]
    q = w[:n, order] + 1j * w[n:, order]
    sigma = np.maximum(lam_top, 0.0)
    smax = float(sigma[0]) if n else 0.0
    zcut = 128.0 * n * EPS * max(1.0, smax)
    small = sigma <= zcut
    k0 = int(np.count_nonzero(small))
    if k0:
        # rebuild the near-kernel columns: complex span of the 2*k0 smallest
        # |lam| eigenvectors, orthogonalized against the large block
        absorder = np.argsort(np.abs(lam), kind="stable")[: 2 * k0]
        z = w[:n, absorder] + 1j * w[n:, absorder]
        big = q[:, ~small]
        if big.shape[1]:
            z = z - big @ (big.conj().T @ z)
        uz = np.linalg.svd(z, full_matrices=False)[0]
        q[:, small] = uz[:, :k0]
        sigma[small] = 0.0
    q = q @ inv_sqrt_psd(q.conj().T @ q)
    return TakagiFactors(q=q, sigma=sigma)


@dataclass(frozen=True)
class PartialConjugation:
    """Antilinear x -> v conj(x) with v symmetric and v conj(v) an
    orthogonal projection (its support); squares to the identity on the
    support and vanishes on the complement."""

    v: np.ndarray = field(repr=False)

    def apply(self, x):
        return self.v @ np.conj(x)

    def support_projection(self):
        return self.v @ np.conj(self.v)

    @property
    def n(self):
        return self.v.shape[0]


def partial_conjugation(v, tol=None):
    """Validating constructor for PartialConjugation."""
    v = as_square(v, "v")
    if tol is None:
        tol = default_tol(v)
    if np.linalg.norm(v - v.T) > tol:
        raise errors.NotSymmetric("partial conjugation matrix must be symmetric")
    p = v @ np.conj(v)
    if np.linalg.norm(p - p.conj().T) > tol or np.linalg.norm(p @ p - p) > tol:
        raise errors.InvalidParameter("v conj(v) is not an orthogonal projection")
    return PartialConjugation(v=v)


@dataclass(frozen=True)
class RefinedPolar:
    """T = C J |T| with J a partial conjugation commuting with the modulus."""

    j: PartialConjugation
    modulus: np.ndarray = field(repr=False)
    support_rank: int


def refined_polar(t, rank_tol=None):
    """Refined polar factorization of a C-symmetric element.

    In the fixed basis the coordinate matrix A is symmetric with Takagi
    factors (Q, Sigma); then |A| = conj(Q) Sigma Q^T and the partial
    conjugation is conj(Q) Pi Q* with Pi the support indicator.  Singular
    values at or below rank_tol (default 1e-10 * max(1, sigma_max)) are
    treated as zero.
    """
    c = t.conj
    b = c.fixed_basis
    a = b.conj().T @ t.a @ b
    tf = takagi(a, tol=10.0 * default_tol(a))
    q, sigma = tf.q, tf.sigma
    smax = float(sigma[0]) if len(sigma) else 0.0
    if rank_tol is None:
        rank_tol = 1e-10 * max(1.0, smax)
    keep = sigma > rank_tol
    pi = keep.astype(np.float64)
    qc = q.conj()
    v_hat = qc @ (pi[:, None] * q.conj().T)
    mod_hat = qc @ (sigma[:, None] * q.T)
    v = b @ v_hat @ b.T
    modulus = hermitian_part(b @ mod_hat @ b.conj().T)
    j = PartialConjugation(v=0.5 * (v + v.T))
    return RefinedPolar(j=j, modulus=modulus, support_rank=int(np.count_nonzero(keep)))


def polar_isometry(c, j):
    """Matrix of the linear map C J (antilinear composed with antilinear)."""
    return c.u @ np.conj(j.v if isinstance(j, PartialConjugation) else j.u)


def extend_partial_conjugation(j, c=None, tol=None):
    """Extend a partial conjugation to a full conjugation.

    Installs an intrinsic conjugation of the kernel: with G a deterministic
    orthonormal basis of ker (pivoted Gram-Schmidt on the complement
    projector), the completion is G G^T, and v + G G^T is symmetric unitary.
    The ambient conjugation c, when given, only fixes the expected size.
    """
    v = as_square(j.v if isinstance(j, PartialConjugation) else j, "v")
    n = v.shape[0]
    if c is not None and c.n != n:
        raise errors.DimensionMismatch(
            "partial conjugation is %dx%d but the ambient space has dimension %d"
            % (n, n, c.n)
        )
    supp = v @ np.conj(v)
    supp = hermitian_part(supp)
    r = int(round(float(np.trace(supp).real)))
    if r >= n:
        return Conjugation(v, tol=tol)
    comp = np.eye(n) - supp
    g = pivoted_onb(comp, rank=n - r)
    return Conjugation(v + g @ g.T, tol=tol)
