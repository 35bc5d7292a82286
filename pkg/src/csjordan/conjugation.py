"""Conjugations of C^n: antilinear involutive isometries x -> U conj(x).

A conjugation is stored through its matrix U, which is unitary (isometry)
and symmetric (involution).  Two conjugations define the same symmetric
class of matrices exactly when their matrices differ by a unimodular
scalar; `same_symmetry_class` recovers that scalar.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import errors
from ._lin import (
    as_square,
    default_tol,
    fixed_onb_of_symmetric_unitary,
    joint_eigen_clusters,
)


class Conjugation:
    """Antilinear involutive isometry of C^n.

    The action is x -> u @ conj(x).  Unitarity of u is the isometry law
    <Cx, Cy> = conj(<x, y>); symmetry of u is equivalent to C squaring to
    the identity.  Instances are immutable; the fixed orthonormal basis is
    computed lazily on first access and cached.
    """

    def __init__(self, u, tol=None):
        u = as_square(u, "u")
        n = u.shape[0]
        if n < 1:
            raise errors.InvalidDimension("conjugation needs n >= 1")
        if tol is None:
            tol = default_tol(u)
        if np.linalg.norm(u.conj().T @ u - np.eye(n)) > tol:
            raise errors.NotUnitary(f"u is not unitary within {tol:.3e}")
        if np.linalg.norm(u - u.T) > tol:
            raise errors.NotSymmetric(f"u is not symmetric within {tol:.3e}")
        u = u.copy()
        u.setflags(write=False)
        self._u = u
        self.n = n

    @property
    def u(self):
        return self._u

    def apply(self, x):
        """Apply the conjugation to a vector (or columnwise to a matrix)."""
        x = np.asarray(x)
        if x.ndim == 0 or x.shape[0] != self._u.shape[0]:
            raise errors.DimensionMismatch(
                f"expected leading dimension {self._u.shape[0]}"
            )
        return self._u @ np.conj(x)

    def sandwich(self, x):
        """Matrix of the linear map C X C for a linear operator X."""
        x = as_square(x, "x")
        if x.shape[0] != self._u.shape[0]:
            raise errors.DimensionMismatch(
                f"expected a {self._u.shape[0]} square matrix"
            )
        return self._u @ np.conj(x) @ self._u.conj().T

    @cached_property
    def fixed_basis(self):
        """Unitary matrix whose columns b_i satisfy C(b_i) = b_i.

        Deterministic: pivoted Gram-Schmidt (descending pivot magnitude,
        ties by lowest index) on the projector onto the fixed subspace of
        the real-linear involution.  For the standard conjugation this is
        exactly the identity.  Computing the projector is idempotent, so a
        concurrent first access at worst recomputes the same array.
        """
        return fixed_onb_of_symmetric_unitary(self._u)

    def __repr__(self):
        return f"Conjugation(n={self.n})"


def standard_conjugation(n):
    """Entrywise conjugation on C^n (u = identity)."""
    if int(n) < 1:
        raise errors.InvalidDimension("n must be >= 1")
    return Conjugation(np.eye(int(n), dtype=np.complex128))


def conjugation_from_unitary(u, tol=None):
    """Build a conjugation from its matrix, validating unitarity then symmetry."""
    return Conjugation(u, tol=tol)


def same_conjugation(c, d, tol=None):
    """True when two conjugations have (numerically) the same matrix."""
    if c is d:
        return True
    if c.n != d.n:
        return False
    if tol is None:
        tol = default_tol(c.u)
    return bool(np.linalg.norm(c.u - d.u) <= tol)


def same_symmetry_class(c, d, tol=None):
    """Unimodular alpha with u_c = alpha * u_d, or None.

    Conjugations that differ by a unimodular scalar (and only those) have
    identical symmetric and antisymmetric matrix classes.
    """
    if c.n != d.n:
        raise errors.DimensionMismatch("conjugations act on different dimensions")
    if tol is None:
        tol = default_tol(c.u, d.u)
    idx = np.unravel_index(int(np.argmax(np.abs(d.u))), d.u.shape)
    denom = d.u[idx]
    alpha = c.u[idx] / denom
    if abs(abs(alpha) - 1.0) > tol:
        return None
    if np.linalg.norm(c.u - alpha * d.u) > tol:
        return None
    return complex(alpha)


def equivalence_unitary(c, d, tol=None):
    """Unitary W with W* C W = D (as antilinear maps).

    Constructed by mapping the fixed basis of d onto the fixed basis of c:
    W = B_c B_d*.  Any two conjugations of the same dimension are related
    this way.
    """
    if c.n != d.n:
        raise errors.DimensionMismatch("conjugations act on different dimensions")
    return c.fixed_basis @ d.fixed_basis.conj().T


def _unitary_power(w, t):
    """w^t for unitary w, real t, with the branch cut placed in the largest
    spectral gap so eigenvalues at -1 never straddle the cut."""
    blocks, values = joint_eigen_clusters([w])
    angles = np.array([np.angle(v[0] / abs(v[0])) for v in values])
    if len(angles) == 1:
        cut = float(angles[0]) + np.pi
    else:
        order = np.argsort(angles)
        a = angles[order]
        gaps = np.diff(a)
        wrap = (a[0] + 2.0 * np.pi) - a[-1]
        if wrap >= (np.max(gaps) if len(gaps) else -np.inf):
            cut = a[-1] + 0.5 * wrap
        else:
            i = int(np.argmax(gaps))
            cut = a[i] + 0.5 * gaps[i]
    adj = cut - np.mod(cut - angles, 2.0 * np.pi)  # each in (cut - 2pi, cut]
    n = w.shape[0]
    out = np.zeros((n, n), dtype=np.complex128)
    for z, th in zip(blocks, adj):
        out += np.exp(1j * t * th) * (z @ z.conj().T)
    return out


def conjugation_path(c, d, t, tol=None):
    """Point at parameter t on a norm-continuous path of conjugations from c to d.

    Uses V(t) = W^t for the equivalence unitary W and returns V(t)* C V(t).
    Endpoints reproduce c and d within tolerance.
    """
    if not (0.0 <= t <= 1.0):
        raise errors.InvalidParameter(f"t must lie in [0, 1], got {t}")
    if c.n != d.n:
        raise errors.DimensionMismatch("conjugations act on different dimensions")
    w = equivalence_unitary(c, d)
    v = _unitary_power(w, float(t))
    u_t = v.conj().T @ c.u @ np.conj(v)
    u_t = 0.5 * (u_t + u_t.T)
    return Conjugation(u_t, tol=tol)
