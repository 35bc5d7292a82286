"""The symmetric/antisymmetric split of matrices under a conjugation.

For a conjugation C, a matrix T is C-symmetric when C T C = T*.  Those
matrices form a complex subspace closed under the Jordan (anticommutator)
product and under adjoints; the C-antisymmetric matrices (C X C = -X*) are
its trace-orthogonal complement.  Writing X^t = C X* C, the two halves of
any X are (X + X^t)/2 and (X - X^t)/2, which in the C-fixed basis are the
plain symmetric and skew parts of the coordinate matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import errors
from .conjugation import Conjugation, same_conjugation
from ._lin import as_square, as_vector, default_tol, fro, opnorm


@dataclass(frozen=True)
class SymElement:
    """A matrix certified C-symmetric: C T C = T* within tolerance."""

    conj: Conjugation
    a: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = as_square(self.a, "a")
        if a.shape[0] != self.conj.n:
            raise errors.DimensionMismatch("matrix and conjugation dimensions differ")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def n(self):
        return self.conj.n


@dataclass(frozen=True)
class SkewElement:
    """A matrix certified C-antisymmetric: C X C = -X* within tolerance."""

    conj: Conjugation
    a: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = as_square(self.a, "a")
        if a.shape[0] != self.conj.n:
            raise errors.DimensionMismatch("matrix and conjugation dimensions differ")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def n(self):
        return self.conj.n


def transpose_map(x, c):
    """X -> C X* C, the transpose relative to the conjugation.

    Equals u X^T u* and reduces to the literal transpose for the standard
    conjugation.  It is an antihomomorphism: (XY)^t = Y^t X^t.
    """
    x = as_square(x)
    return c.u @ x.T @ c.u.conj().T


def sym_part(x, c):
    """Symmetric half (X + X^t)/2 as a SymElement."""
    x = as_square(x)
    return SymElement(c, 0.5 * (x + transpose_map(x, c)))


def skew_part(x, c):
    """Antisymmetric half (X - X^t)/2 as a SkewElement."""
    x = as_square(x)
    return SkewElement(c, 0.5 * (x - transpose_map(x, c)))


def symmetry_residual(x, c):
    """Frobenius distance from x to its symmetric half."""
    x = as_square(x)
    return fro(0.5 * (x - transpose_map(x, c)))


def antisymmetry_residual(x, c):
    x = as_square(x)
    return fro(0.5 * (x + transpose_map(x, c)))


def is_symmetric(x, c, tol=None):
    """Membership test for the C-symmetric class."""
    x = as_square(x)
    if tol is None:
        tol = default_tol(x)
    return symmetry_residual(x, c) <= tol


def is_antisymmetric(x, c, tol=None):
    x = as_square(x)
    if tol is None:
        tol = default_tol(x)
    return antisymmetry_residual(x, c) <= tol


def symmetric_element(c, a, tol=None):
    """Validating constructor; raises NotSymmetric on failure."""
    a = as_square(a)
    if tol is None:
        tol = default_tol(a)
    r = symmetry_residual(a, c)
    if r > tol:
        raise errors.NotSymmetric(f"symmetry residual {r:.3e} exceeds {tol:.3e}")
    return SymElement(c, a)


def antisymmetric_element(c, a, tol=None):
    a = as_square(a)
    if tol is None:
        tol = default_tol(a)
    r = antisymmetry_residual(a, c)
    if r > tol:
        raise errors.NotSymmetric(f"antisymmetry residual {r:.3e} exceeds {tol:.3e}")
    return SkewElement(c, a)


def _require_compatible(s, t):
    if s.conj.n != t.conj.n:
        raise errors.DimensionMismatch("elements live on different dimensions")
    if not same_conjugation(s.conj, t.conj):
        raise errors.ConjugationMismatch("elements live over different conjugations")


def jordan_product(s, t):
    """Anticommutator product (AB + BA)/2; the class is closed under it."""
    _require_compatible(s, t)
    return SymElement(s.conj, 0.5 * (s.a @ t.a + t.a @ s.a))


def schatten_norm(x, p):
    """Schatten p-norm; the selector p = 0 denotes the operator norm."""
    x = as_square(x)
    if p == 0 or np.isinf(p):
        return opnorm(x)
    if p < 1:
        raise errors.InvalidP(f"p must be 0 (operator norm) or >= 1, got {p}")
    s = np.linalg.svd(x, compute_uv=False)
    if p == 1:
        return float(np.sum(s))
    if p == 2:
        return float(np.sqrt(np.sum(s * s)))
    return float(np.sum(s**p) ** (1.0 / p))


def trace_pair(a, b):
    """tr(AB).  Vanishes identically between the symmetric and
    antisymmetric classes of one conjugation."""
    a = as_square(a)
    b = as_square(b)
    if a.shape != b.shape:
        raise errors.DimensionMismatch("trace pairing needs equal shapes")
    return complex(np.trace(a @ b))


def trace_norm_witness(k):
    """Unit-norm symmetric X with tr(XK) = ||K||_1 for symmetric K != 0.

    X is the adjoint of the unitary C J~ built from the refined polar
    factorization of K, with the partial conjugation J extended over the
    kernel; then XK = |K| up to the support cutoff.
    """
    from .decomposition import extend_partial_conjugation, refined_polar

    scale = opnorm(k.a)
    if not np.isfinite(scale) or scale < 1e-150:
        raise errors.ZeroInput("trace-norm witness needs a nonzero element")
    rp = refined_polar(SymElement(k.conj, k.a / scale))
    jt = extend_partial_conjugation(rp.j)
    x = jt.u @ np.conj(k.conj.u)
    value = float(np.trace(x @ k.a).real)
    return SymElement(k.conj, x), value


def symmetrized_rank_one(e, f, c, tol=None):
    """X = e (x) f + (Cf) (x) (Ce) for unit vectors e, f.

    Always C-symmetric; the operator norm lies in [1, 2] and is at least
    1 + |<Ce, f>|^2, with Schatten norms between the operator norm and 2.
    """
    e = as_vector(e, c.n, "e")
    f = as_vector(f, c.n, "f")
    if tol is None:
        tol = default_tol(np.eye(c.n))
    if abs(np.linalg.norm(e) - 1.0) > max(tol, 1e-9):
        raise errors.NotUnit("e must be a unit vector")
    if abs(np.linalg.norm(f) - 1.0) > max(tol, 1e-9):
        raise errors.NotUnit("f must be a unit vector")
    ce = c.apply(e)
    cf = c.apply(f)
    x = np.outer(e, np.conj(f)) + np.outer(cf, np.conj(ce))
    return SymElement(c, x)


def doubling_conjugation(c):
    """Conjugation on C^(2n) swapping the two copies through C."""
    n = c.n
    z = np.zeros((n, n), dtype=np.complex128)
    u2 = np.block([[z, c.u], [c.u, z]])
    return Conjugation(u2)


def doubling_embedding(x, c, doubled=None):
    """Embed X as diag(X, X^t) over the doubling conjugation.

    The embedding is an isometric Jordan homomorphism of the symmetric
    class; pass `doubled` to reuse one doubling conjugation across calls.
    """
    x = as_square(x)
    if doubled is None:
        doubled = doubling_conjugation(c)
    xt = transpose_map(x, c)
    n = c.n
    z = np.zeros((n, n), dtype=np.complex128)
    big = np.block([[x, z], [z, xt]])
    return SymElement(doubled, big)


def roberts_orthogonal(s, o, lambdas=None, tol=None):
    """Check ||A - l B|| = ||A + l B|| over a sample of scalars l.

    Holds for every scalar when A is symmetric and B antisymmetric: in the
    fixed basis A - l B and A + l B are mutual transposes.
    """
    _require_compatible(s, o)
    if lambdas is None:
        lambdas = [1.0, -0.5, 2.0, 1j, 0.3 - 0.7j]
    if tol is None:
        tol = 1e-9 * max(1.0, opnorm(s.a) + opnorm(o.a))
    for lam in lambdas:
        d = abs(opnorm(s.a - lam * o.a) - opnorm(s.a + lam * o.a))
        if d > tol:
            return False
    return True


def sym_basis(c):
    """Frobenius-orthonormal basis of the symmetric class.

    In the fixed basis B: the n projections B E_ii B* first, then the
    normalized symmetric pair matrices B (E_ij + E_ji)/sqrt(2) B* for
    i < j in lexicographic order.  Length n(n+1)/2.
    """
    b = c.fixed_basis
    n = c.n
    out = []
    for i in range(n):
        out.append(np.outer(b[:, i], np.conj(b[:, i])))
    r = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            out.append(
                r
                * (
                    np.outer(b[:, i], np.conj(b[:, j]))
                    + np.outer(b[:, j], np.conj(b[:, i]))
                )
            )
    return out


def skew_basis(c):
    """Frobenius-orthonormal basis of the antisymmetric class; length n(n-1)/2."""
    b = c.fixed_basis
    n = c.n
    out = []
    r = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            out.append(
                r
                * (
                    np.outer(b[:, i], np.conj(b[:, j]))
                    - np.outer(b[:, j], np.conj(b[:, i]))
                )
            )
    return out


def coords(x, basis):
    """Coordinates of x in a Frobenius-orthonormal basis."""
    x = as_square(x)
    return np.array([np.vdot(bk, x) for bk in basis])


def from_coords(v, basis):
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    if len(v) != len(basis):
        raise errors.DimensionMismatch("coordinate length does not match basis")
    out = np.zeros_like(basis[0], dtype=np.complex128)
    for vk, bk in zip(v, basis):
        out = out + vk * bk
    return out
