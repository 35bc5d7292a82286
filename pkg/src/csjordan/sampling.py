"""Seeded random generation of the objects the suite exercises.

All draws run on counter-based Philox streams keyed by (seed, labels...),
so results are identical across platforms and runs, and trial k never
depends on how many trials follow it.
"""

from __future__ import annotations

import zlib

import numpy as np

from . import errors
from .conjugation import Conjugation
from .jordan_space import SymElement, skew_part, sym_part

_MASK = (1 << 64) - 1


def stream(seed, *labels):
    """Independent Generator for (seed, labels).  Strings hash via crc32."""
    keys = [int(seed) & _MASK]
    for item in labels:
        if isinstance(item, str):
            keys.append(zlib.crc32(item.encode("utf-8")))
        else:
            keys.append(int(item) & _MASK)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(keys)))


def ginibre(n, rng):
    """n x n matrix with iid standard complex normal entries."""
    n = int(n)
    if n < 1:
        raise errors.InvalidDimension("n must be >= 1")
    re = rng.standard_normal((n, n))
    im = rng.standard_normal((n, n))
    return (re + 1j * im) / np.sqrt(2.0)


def haar_unitary(n, rng):
    """Haar-distributed unitary via phase-fixed QR of a Ginibre draw."""
    q, r = np.linalg.qr(ginibre(n, rng))
    d = np.diagonal(r)
    return q * (d / np.abs(d)).conj()


def random_orthogonal(n, rng):
    """Haar real orthogonal matrix."""
    n = int(n)
    if n < 1:
        raise errors.InvalidDimension("n must be >= 1")
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diagonal(r))


def random_conjugation(n, rng):
    """Conjugation with a Haar-random symmetric unitary matrix W W^T."""
    w = haar_unitary(n, rng)
    return Conjugation(w @ w.T)


def random_unit_vector(n, rng):
    n = int(n)
    if n < 1:
        raise errors.InvalidDimension("n must be >= 1")
    while True:
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        nv = np.linalg.norm(v)
        if nv > 1e-6:
            return v / nv


def random_symmetric(c, rng):
    """Generic element of the symmetric class: sym part of a Ginibre draw."""
    return sym_part(ginibre(c.n, rng), c)


def random_selfadjoint(c, rng):
    """Selfadjoint element of the class (the class is adjoint-stable, so
    averaging a member with its adjoint stays inside)."""
    s = random_symmetric(c, rng).a
    return SymElement(c, 0.5 * (s + s.conj().T))


def random_skew(c, rng):
    """Generic element of the antisymmetric class."""
    return skew_part(ginibre(c.n, rng), c)
