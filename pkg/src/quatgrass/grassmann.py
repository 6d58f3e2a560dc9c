"""Points on the quaternionic Grassmannian and geodesics between them.

A point is the orthogonal projector P onto a k-dimensional right-quaternionic
subspace of H^n.  The key object for geometry is the product of reflections
W = (I - 2Q)(I - 2P), a unitary matrix whose standard eigenvalue phases are
twice the principal angles between the subspaces, each counted twice.  The
shortest-path distance is half the root sum of squared phases, and the path
itself is P conjugated by exp(t/2 * log W).
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import (
    CutLocus,
    DimensionMismatch,
    MixedDimensions,
    NotOrthonormalFrame,
    QuatGrassError,
)
from .quaternion import QuatMatrix
from .spectra import TAU_BRANCH, matrix_exp, standard_eigenvalues, unitary_eig

logger = logging.getLogger(__name__)

# Projector acceptance: residual bounds scale with the ambient dimension.
IDEMPOTENT_TOL_PER_DIM = 1e-8
HERMITIAN_TOL_PER_DIM = 1e-10
TRACE_REAL_TOL = 1e-6
TRACE_IMAG_TOL = 1e-8

# Frames are accepted when the Gram matrix is this close to the identity.
FRAME_TOL = 1e-8


class GrassmannPoint:
    """A k-dimensional subspace of H^n, held as its orthogonal projector.

    The constructor validates hermitianity, idempotency, and that the trace
    is the (real) integer subspace dimension with 1 <= k <= n - 1.

    Parameters
    ----------
    projector : QuatMatrix
        Square hermitian idempotent of trace k.
    k : int or None
        Expected subspace dimension; None reads it off the trace.
    """

    __slots__ = ("projector", "k")

    def __init__(self, projector, k=None):
        if not isinstance(projector, QuatMatrix):
            raise TypeError("projector must be a QuatMatrix")
        n, m = projector.shape
        if n != m:
            raise DimensionMismatch("projector must be square, got %r" % (projector.shape,))
        herm = (projector - projector.adjoint()).norm()
        if herm > HERMITIAN_TOL_PER_DIM * n:
            raise ValueError(
                "projector is not hermitian: residual %.3e exceeds %.3e"
                % (herm, HERMITIAN_TOL_PER_DIM * n))
        idem = (projector @ projector - projector).norm()
        if idem > IDEMPOTENT_TOL_PER_DIM * n:
            raise ValueError(
                "projector is not idempotent: residual %.3e exceeds %.3e"
                % (idem, IDEMPOTENT_TOL_PER_DIM * n))
        tr = projector.trace()
        im = float(np.sqrt(tr.x ** 2 + tr.y ** 2 + tr.z ** 2))
        if im > TRACE_IMAG_TOL:
            raise ValueError("projector trace has imaginary magnitude %.3e" % im)
        if k is None:
            k = int(round(tr.w))
        k = int(k)
        if abs(tr.w - k) > TRACE_REAL_TOL:
            raise ValueError(
                "projector trace %.8g is not the subspace dimension %d" % (tr.w, k))
        if not 1 <= k <= n - 1:
            raise ValueError(
                "subspace dimension must satisfy 1 <= k <= n - 1, got k=%d, n=%d"
                % (k, n))
        self.projector = projector
        self.k = k

    @property
    def dimension(self):
        """Ambient dimension n."""
        return self.projector.shape[0]

    @property
    def subspace_dim(self):
        """Subspace dimension k."""
        return self.k

    def __repr__(self):
        return "GrassmannPoint(n=%d, k=%d)" % (self.dimension, self.k)


def from_frame(x):
    """Grassmannian point spanned by the columns of an orthonormal frame.

    Parameters
    ----------
    x : QuatMatrix, shape (n, k)
        Columns must be orthonormal within ``FRAME_TOL``.

    Raises
    ------
    NotOrthonormalFrame
        If the frame Gram matrix strays from the identity.
    """
    n, k = x.shape
    gram = x.adjoint() @ x
    res = (gram - QuatMatrix.eye(k)).norm()
    if res > FRAME_TOL:
        raise NotOrthonormalFrame(
            "frame gram residual %.3e exceeds %.3e" % (res, FRAME_TOL))
    return GrassmannPoint(x @ x.adjoint(), k)


def _check_compatible(p, q):
    if p.dimension != q.dimension or p.subspace_dim != q.subspace_dim:
        raise DimensionMismatch(
            "points live on different Grassmannians: (n=%d, k=%d) vs (n=%d, k=%d)"
            % (p.dimension, p.subspace_dim, q.dimension, q.subspace_dim))


def _reflection_product(p, q):
    eye = QuatMatrix.eye(p.dimension)
    return (eye - q.projector * 2.0) @ (eye - p.projector * 2.0)


def geodesic_distance(p, q):
    """Length of the shortest path between two points on one Grassmannian.

    Half the root sum of squared standard-eigenvalue phases of the
    reflection product (I - 2Q)(I - 2P), phases taken in [0, pi].

    Raises
    ------
    DimensionMismatch
        If the points have different n or k.
    PairingFailure, NoConvergence
        Propagated from the eigenvalue computation.
    """
    _check_compatible(p, q)
    lam = standard_eigenvalues(_reflection_product(p, q))
    lam = lam / np.abs(lam)
    ang = np.angle(lam)
    return 0.5 * float(np.sqrt(np.sum(ang ** 2)))


def geodesic_interpolate(p, q, t):
    """Point a fraction ``t`` of the way along the shortest path from p to q.

    The path is gamma(t) = exp(t X) P exp(t X)^* with X half the principal
    logarithm of the reflection product; gamma(0) = P exactly and
    gamma(1) recovers Q.

    Raises
    ------
    ValueError
        If ``t`` is outside [0, 1].
    CutLocus
        If some principal angle is at the branch point, where the shortest
        path is not unique.
    """
    _check_compatible(p, q)
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError("interpolation parameter must lie in [0, 1], got %r" % t)
    w = _reflection_product(p, q)
    dec = unitary_eig(w, tol=1e-6 * max(1.0, w.norm()))
    ang = np.angle(dec.eigenvalues)
    if np.any(ang >= np.pi - TAU_BRANCH):
        raise CutLocus(
            "points are mutually at the cut locus (a phase reached pi); the "
            "shortest path is not unique")
    x = dec.log() * 0.5
    e = matrix_exp(x * t)
    return GrassmannPoint(e @ p.projector @ e.adjoint(), p.subspace_dim)


@dataclass
class DistanceMatrix:
    """Pairwise geodesic distances with row/column labels."""

    labels: list
    values: np.ndarray


def distance_matrix(points, labels=None, threads=None):
    """All pairwise geodesic distances, computed row-parallel.

    Parameters
    ----------
    points : sequence of GrassmannPoint
        All on the same Grassmannian.
    labels : sequence of str or None
        Row/column labels; None numbers them.
    threads : int or None
        Worker threads; None lets the pool pick, 1 runs serial.

    Raises
    ------
    MixedDimensions
        If points disagree in n or k.
    """
    points = list(points)
    if not points:
        raise ValueError("no points given")
    if labels is None:
        labels = [str(i) for i in range(len(points))]
    labels = [str(lbl) for lbl in labels]
    if len(labels) != len(points):
        raise DimensionMismatch(
            "%d labels for %d points" % (len(labels), len(points)))
    ref = (points[0].dimension, points[0].subspace_dim)
    for lbl, pt in zip(labels, points):
        got = (pt.dimension, pt.subspace_dim)
        if got != ref:
            raise MixedDimensions(
                "point %r lives on (n=%d, k=%d), expected (n=%d, k=%d)"
                % (lbl, got[0], got[1], ref[0], ref[1]))
    if threads is not None and threads < 1:
        raise ValueError("threads must be a positive integer")

    count = len(points)
    values = np.zeros((count, count))

    def row(i):
        out = np.zeros(count)
        for j in range(i + 1, count):
            try:
                out[j] = geodesic_distance(points[i], points[j])
            except QuatGrassError as exc:
                raise type(exc)(
                    "distance between %r and %r: %s"
                    % (labels[i], labels[j], exc)) from exc
        logger.info("distance row %d/%d done", i + 1, count)
        return out

    if threads == 1:
        for i in range(count):
            values[i] = row(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, out in enumerate(pool.map(row, range(count))):
                values[i] = out
    values = values + values.T
    return DistanceMatrix(labels=labels, values=values)
