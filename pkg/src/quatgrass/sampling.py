"""Random quaternionic matrices, unitaries, frames, and subspace points."""

from __future__ import annotations

import numpy as np

from .errors import LinearlyDependent
from .quaternion import QuatMatrix, _mgs_pass
from .spectra import matrix_exp
from . import grassmann


def random_quaternion_matrix(n, m=None, rng=None):
    """Matrix with independent standard normal components."""
    m = n if m is None else m
    g = np.random.default_rng(rng)
    return QuatMatrix(
        g.standard_normal((n, m)) + 1j * g.standard_normal((n, m)),
        g.standard_normal((n, m)) + 1j * g.standard_normal((n, m)))


def random_hermitian(n, rng=None):
    a = random_quaternion_matrix(n, n, rng)
    return (a + a.adjoint()) * 0.5


def random_unitary(n, rng=None):
    """Haar-like unitary: exponential of a random skew-hermitian matrix."""
    a = random_quaternion_matrix(n, n, rng)
    return matrix_exp((a - a.adjoint()) * 0.5)


def random_frame(n, k, rng=None):
    """n x k matrix with orthonormal columns."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n, got k=%d, n=%d" % (k, n))
    a = random_quaternion_matrix(n, k, rng)
    cols = [(a.ca[:, j], a.cb[:, j]) for j in range(k)]
    out, _, skipped = _mgs_pass(cols, [1e-8] * k)
    if skipped:
        # vanishing measure, but a fixed rng could hand us one
        raise LinearlyDependent("random draw produced dependent columns")
    return QuatMatrix.from_columns(out)


def random_grassmann_point(n, k, rng=None):
    """Uniform-ish point: span of a random orthonormal frame."""
    return grassmann.from_frame(random_frame(n, k, rng))
