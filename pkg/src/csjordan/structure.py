"""Structural predicates and certificates for the symmetric class.

Covers unitary-implemented Jordan automorphisms (with the unimodular
commutation criterion and explicit counterexamples), the normality
equivalences, generation of the full matrix algebra by class elements,
Jordan simplicity via ideal closure, and irreducibility through the
commutant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import errors
from ._lin import as_square, default_tol, fro, hermitian_part, opnorm
from .jordan_space import SymElement, sym_basis, symmetry_residual
from .sampling import random_symmetric, stream


@dataclass(frozen=True)
class AutomorphismReport:
    """Certificate for X -> V X V* acting on the symmetric class.

    The map preserves the class exactly when some unimodular multiple of V
    commutes with the conjugation; the product, adjoint, and isometry
    residuals hold for every unitary V and are reported as sampled maxima.
    """

    commutes: bool
    alpha: complex | None
    class_preserved: bool
    class_residual: float
    product_residual: float
    adjoint_residual: float
    isometry_gap: float
    counterexample: np.ndarray | None = field(repr=False)
    samples: int = 0


def automorphism_report(v, c, samples=50, seed=0, tol=None):
    """Certify whether X -> V X V* is a Jordan automorphism of the class.

    The commutation test solves U conj(V) = beta V U at the largest entry
    and checks the relation globally; beta is alpha^2 for the unimodular
    alpha making alpha V commute with the conjugation.  Class preservation
    is decided exactly on the spanning basis of the class, not by sampling;
    the worst basis element is returned as the counterexample on failure.
    """
    v = as_square(v, "v")
    n = v.shape[0]
    if n != c.n:
        raise errors.DimensionMismatch("v and the conjugation differ in size")
    if tol is None:
        tol = default_tol(v)
    if np.linalg.norm(v.conj().T @ v - np.eye(n)) > tol:
        raise errors.NotUnitary("v is not unitary within tolerance")
    samples = int(samples)
    if samples < 1:
        raise errors.InvalidParameter("samples must be >= 1")

    ctol = max(tol, 1e-9 * np.sqrt(n))
    lhs = c.u @ np.conj(v)
    rhs = v @ c.u
    k = int(np.argmax(np.abs(rhs)))
    i, j = divmod(k, n)
    beta = complex(lhs[i, j] / rhs[i, j])
    commutes = bool(
        abs(abs(beta) - 1.0) <= ctol and fro(lhs - beta * rhs) <= ctol * np.sqrt(n)
    )
    alpha = None
    if commutes:
        beta /= abs(beta)
        alpha = complex(np.exp(0.5j * np.angle(beta)))

    basis = sym_basis(c)
    worst = 0.0
    culprit = None
    for bmat in basis:
        r = symmetry_residual(v @ bmat @ v.conj().T, c)
        if r > worst:
            worst = r
            culprit = bmat
    class_preserved = bool(worst <= ctol)

    rng = stream(seed, "automorphism", n)
    prod_res = 0.0
    adj_res = 0.0
    iso_gap = 0.0
    for _ in range(samples):
        x = random_symmetric(c, rng).a
        y = random_symmetric(c, rng).a
        fx = v @ x @ v.conj().T
        fy = v @ y @ v.conj().T
        fxy = v @ (0.5 * (x @ y + y @ x)) @ v.conj().T
        prod_res = max(prod_res, fro(fxy - 0.5 * (fx @ fy + fy @ fx)))
        adj_res = max(adj_res, fro(v @ x.conj().T @ v.conj().T - fx.conj().T))
        iso_gap = max(iso_gap, abs(opnorm(fx) - opnorm(x)))

    return AutomorphismReport(
        commutes=commutes,
        alpha=alpha,
        class_preserved=class_preserved,
        class_residual=worst,
        product_residual=prod_res,
        adjoint_residual=adj_res,
        isometry_gap=iso_gap,
        counterexample=None if class_preserved else culprit,
        samples=samples,
    )


@dataclass(frozen=True)
class NormalityReport:
    """The equivalent normality conditions, each evaluated independently:
    vanishing self-commutator, modulus inside the class, and T*T inside
    the class.  They agree for every element of the class."""

    is_normal: bool
    modulus_in_class: bool
    gram_in_class: bool
    normality_residual: float
    modulus_residual: float
    gram_residual: float

    @property
    def consistent(self):
        return self.is_normal == self.modulus_in_class == self.gram_in_class


def normality_report(t, tol=None):
    a = np.asarray(t.a, dtype=np.complex128)
    c = t.conj
    if tol is None:
        tol = default_tol(a)
    comm = fro(a @ a.conj().T - a.conj().T @ a)
    gram = a.conj().T @ a
    gram_res = symmetry_residual(gram, c)
    w, vv = np.linalg.eigh(hermitian_part(gram))
    modulus = (vv * np.sqrt(np.maximum(w, 0.0))) @ vv.conj().T
    mod_res = symmetry_residual(modulus, c)
    scale = max(1.0, opnorm(a))
    # the gram residual is half the self-commutator norm, so a doubled
    # threshold keeps the two flags aligned; the modulus flag needs extra
    # slack because a matrix square root loses digits near a singular point
    return NormalityReport(
        is_normal=bool(comm <= 2.0 * tol * scale),
        modulus_in_class=bool(mod_res <= 1e-7 * scale),
        gram_in_class=bool(gram_res <= tol * scale),
        normality_residual=comm,
        modulus_residual=mod_res,
        gram_residual=gram_res,
    )


class _SpanAccumulator:
    """Incremental orthonormal span of flattened matrices.

    Rows of q are the orthonormal vectors; projection is two rounds of
    classical Gram-Schmidt done as matrix products.
    """

    def __init__(self, rel_tol=1e-9):
        self.q = None
        self.rel_tol = rel_tol

    def absorb(self, mat):
        v = np.asarray(mat, dtype=np.complex128).reshape(-1)
        nv = np.linalg.norm(v)
        if nv < 1e-150:
            return None
        v = v / nv
        if self.q is not None:
            for _ in range(2):
                v = v - self.q.T @ (self.q.conj() @ v)
        res = np.linalg.norm(v)
        if res <= self.rel_tol:
            return None
        v = v / res
        self.q = v[None, :] if self.q is None else np.vstack([self.q, v])
        return v

    @property
    def dim(self):
        return 0 if self.q is None else self.q.shape[0]


def generation_dimension(c, degree, tol=None):
    """Complex dimension of the span of products of at most `degree`
    elements of the class.

    Degree one gives the class itself, n(n+1)/2; degree two already fills
    all of the n x n matrices.  Products are accumulated level by level,
    with each level compressed to an orthonormal spanning set so the work
    stays polynomial in n.
    """
    degree = int(degree)
    if degree < 1:
        raise errors.InvalidParameter("degree must be >= 1")
    n = c.n
    basis = sym_basis(c)
    total = _SpanAccumulator()
    level = []
    for bmat in basis:
        kept = total.absorb(bmat)
        if kept is not None:
            level.append(kept.reshape(n, n))
    for _ in range(1, degree):
        if total.dim == n * n:
            break
        nxt = _SpanAccumulator()
        nxt_level = []
        for w in level:
            for bmat in basis:
                cand = w @ bmat
                total.absorb(cand)
                kept = nxt.absorb(cand)
                if kept is not None:
                    nxt_level.append(kept.reshape(n, n))
            # a full span cannot grow and is never consumed by later levels
            if total.dim == n * n:
                break
        level = nxt_level
    return total.dim


def jordan_simplicity_witness(c, z, tol=None):
    """Dimension of the Jordan ideal generated by a nonzero class element.

    Closes span{z} under multiplication by the class basis until stable;
    simplicity at finite dimension means the answer is always the full
    n(n+1)/2.
    """
    zmat = z.a if isinstance(z, SymElement) else as_square(z, "z")
    n = c.n
    if fro(zmat) < 1e-150:
        raise errors.ZeroInput("ideal seed must be nonzero")
    basis = sym_basis(c)
    span = _SpanAccumulator()
    cap = n * (n + 1) // 2
    # worklist closure: once a direction has met every basis element the
    # span absorbs all its products, so each kept direction is processed once
    queue = []
    kept = span.absorb(zmat)
    if kept is not None:
        queue.append(kept.reshape(n, n))
    while queue and span.dim < cap:
        x = queue.pop()
        for amat in basis:
            kept = span.absorb(0.5 * (amat @ x + x @ amat))
            if kept is not None:
                queue.append(kept.reshape(n, n))
    return span.dim


def irreducibility_check(t, rank_tol=None):
    """True iff nothing but scalars commutes with both t and its adjoint.

    The commutant is computed as the kernel of the stacked linear system
    for PT = TP and PT* = T*P on vec(P); dimension one means irreducible.
    """
    t = as_square(t, "t")
    n = t.shape[0]
    if n < 2:
        raise errors.InvalidDimension("irreducibility needs n >= 2")
    scale = opnorm(t)
    a = t / scale if scale > 0 else t
    if rank_tol is None:
        rank_tol = 1e-9 * n
    eye = np.eye(n)
    rows = np.vstack(
        [
            np.kron(eye, a.T) - np.kron(a, eye),
            np.kron(eye, np.conj(a)) - np.kron(a.conj().T, eye),
        ]
    )
    s = np.linalg.svd(rows, compute_uv=False)
    return int(np.count_nonzero(s <= rank_tol)) == 1
