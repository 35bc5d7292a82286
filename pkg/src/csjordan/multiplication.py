"""The Jordan multiplication operator X -> T o X as an explicit matrix.

On the n(n+1)/2-dimensional symmetric class the multiplication by a fixed
element is a linear operator; materializing it in the orthonormal class
basis exposes its spectrum (pairwise means of the spectrum of T), its norm,
its kernel structure, and turns TX + XT = Y into ordinary linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import errors
from ._lin import as_square, opnorm
from .jordan_space import SymElement, from_coords, skew_basis, sym_basis
from .sampling import random_symmetric, stream


@dataclass(frozen=True)
class JordanMultiplier:
    """Matrix of X -> T o X in the class basis (diagonal-first order)."""

    elem: SymElement
    basis: list = field(repr=False)
    matrix: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def apply_coords(self, v):
        return self.matrix @ np.asarray(v, dtype=np.complex128).reshape(-1)


def _multiplier_on(a, basis):
    m = len(basis)
    if m == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    stack = np.stack(basis)
    prod = 0.5 * (np.einsum("ij,kjl->kil", a, stack) + np.einsum("kij,jl->kil", stack, a))
    flat_b = np.conj(stack.reshape(m, -1))
    flat_p = prod.reshape(m, -1)
    return flat_b @ flat_p.T


def multiplier_matrix(t):
    """Materialize X -> T o X on the symmetric class."""
    basis = sym_basis(t.conj)
    return JordanMultiplier(elem=t, basis=basis, matrix=_multiplier_on(np.asarray(t.a), basis))


def skew_multiplier_matrix(t):
    """Matrix of the same multiplication restricted to the antisymmetric
    class, which it also preserves.  Size n(n-1)/2."""
    return _multiplier_on(np.asarray(t.a), skew_basis(t.conj))


def multiplier_spectrum(t):
    """Eigenvalues of the multiplication operator; n(n+1)/2 values.

    As a set this is the pairwise-mean set {(lam + mu)/2} of the spectrum
    of T; for diagonalizable T it matches the unordered-pair multiset."""
    return np.linalg.eigvals(multiplier_matrix(t).matrix)


@dataclass(frozen=True)
class MultiplierNormReport:
    operator_norm: float
    identity_image_norm: float
    attainment_gap: float
    max_ratio: float
    samples: int


def multiplier_norm_report(t, samples, seed=0):
    """Check that multiplication by T has operator norm ||T||.

    The upper bound is sampled (||T o X|| <= ||T|| ||X|| over random class
    elements); attainment is exact at X = I since T o I evaluates to
    (T + T)/2, bitwise T.  Reports the worst sampled ratio.
    """
    samples = int(samples)
    if samples < 1:
        raise errors.InvalidParameter("samples must be >= 1")
    a = np.asarray(t.a)
    nt = opnorm(a)
    at_identity = opnorm(0.5 * (a @ np.eye(t.conj.n) + np.eye(t.conj.n) @ a))
    rng = stream(seed, "multiplier-norm", t.conj.n)
    worst = 0.0
    for _ in range(samples):
        x = random_symmetric(t.conj, rng).a
        nx = opnorm(x)
        if nx < 1e-12:
            continue
        worst = max(worst, opnorm(0.5 * (a @ x + x @ a)) / (nt * nx) if nt > 0 else 0.0)
    return MultiplierNormReport(
        operator_norm=nt,
        identity_image_norm=at_identity,
        attainment_gap=abs(at_identity - nt),
        max_ratio=worst,
        samples=samples,
    )


def _eigen_pairs_min(lam):
    s = lam[:, None] + lam[None, :]
    flat = np.abs(s).reshape(-1)
    k = int(np.argmin(flat))
    i, j = divmod(k, len(lam))
    return float(flat[k]), (complex(lam[i]), complex(lam[j]))


def solve_sylvester(t, y, tol=None):
    """Solve TX + XT = Y.

    Solvable exactly when no two eigenvalues of T sum to zero; then the
    solution is unique, and for Y in the class it lies in the class too.
    Eigenframe division is used when the eigenvector matrix is well
    conditioned, otherwise a dense solve of the n^2 x n^2 system.
    """
    a = np.asarray(t.a, dtype=np.complex128)
    n = a.shape[0]
    y = as_square(y, "y")
    if y.shape[0] != n:
        raise errors.DimensionMismatch("right-hand side has the wrong size")
    if not np.all(np.isfinite(y)):
        raise errors.InvalidParameter("right-hand side must be finite")
    threshold = 1e-8 * max(1.0, opnorm(a))
    lam, v = np.linalg.eig(a)
    least, pair = _eigen_pairs_min(lam)
    if least <= threshold:
        raise errors.SingularJordanMultiplier(
            f"eigenvalue pair {pair[0]:.6g}, {pair[1]:.6g} sums to {least:.3e}",
            pair=pair,
        )
    cond = np.linalg.cond(v)
    if np.isfinite(cond) and cond < 1e8:
        vinv = np.linalg.inv(v)
        yh = vinv @ y @ v
        xh = yh / (lam[:, None] + lam[None, :])
        return v @ xh @ vinv
    # defective (or nearly) T: row-major vec turns the equation into
    # (kron(T, I) + kron(I, T^T)) x = vec(Y)
    big = np.kron(a, np.eye(n)) + np.kron(np.eye(n), a.T)
    try:
        x = np.linalg.solve(big, y.reshape(-1))
    except np.linalg.LinAlgError as exc:
        raise errors.NonDiagonalizable(
            "dense multiplier system is numerically singular"
        ) from exc
    if not np.all(np.isfinite(x)):
        raise errors.NonDiagonalizable("dense multiplier system is numerically singular")
    return x.reshape(n, n)


def multiplier_kernel(t, mu, rank_tol=None):
    """Numerical kernel of (multiplication by T) - mu.

    Returns (dimension, list of class matrices spanning the kernel).  For
    eigenvalues lam, nu of T with mu = (lam + nu)/2 the symmetrized rank-one
    matrices built from the eigenvectors lie in this kernel.
    """
    jm = multiplier_matrix(t)
    m = jm.dim
    mu = complex(mu)
    if rank_tol is None:
        rank_tol = 1e-8 * (1.0 + max(opnorm(np.asarray(t.a)), abs(mu)))
    _, s, vh = np.linalg.svd(jm.matrix - mu * np.eye(m))
    dim = int(np.count_nonzero(s <= rank_tol))
    vectors = [np.conj(vh[m - 1 - i]) for i in range(dim)]
    mats = [from_coords(vec, jm.basis) for vec in reversed(vectors)]
    return dim, mats
