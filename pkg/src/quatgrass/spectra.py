"""Eigenvalues, singular value decomposition, and logarithms of quaternion matrices.

Everything here routes through the complex adjoint image: a quaternionic
n x n matrix becomes a 2n x 2n complex matrix whose spectrum consists of
conjugate pairs.  One representative per pair, taken from the closed upper
half plane, is a standard eigenvalue; an n x n quaternionic matrix has
exactly n of them.  Real eigenvalues of the image occur with even
multiplicity and are halved.

The pairing of the 2n complex values into n representatives is done in two
stages: values within ``TAU_IM_REL`` (relative to the image norm) of the
real axis are sorted and paired adjacently, and the remaining values are
split by the sign of their imaginary part and greedily matched against the
conjugates of the opposite half.  Any leftover or mismatch raises
``PairingFailure`` rather than silently producing a spectrum of the wrong
multiplicity.

Singular value and unitary eigendecompositions rebuild quaternionic factor
matrices from the complex ones.  A degenerate singular value or eigenvalue
of quaternionic multiplicity r appears in the image with multiplicity 2r,
and its complex invariant subspace carries a quaternionic structure: the
quaternionic columns read off the complex basis vectors span it, and a
quaternionic Gram-Schmidt pass extracts r orthonormal quaternionic columns
from the 2r complex ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotUnitary,
    PairingFailure,
)
from .quaternion import (
    ZERO_THRESHOLD,
    QuatMatrix,
    _mgs_pass,
    chi,
    from_chi,
)

# Relative half-width of the band around the real axis inside which an
# adjoint-image eigenvalue counts as real (times the image Frobenius norm).
TAU_IM_REL = 1e-9

# Relative tolerance for matching a value with its conjugate partner.
TAU_PAIR_REL = 1e-7

# Absolute tolerance on | |lambda| - 1 | for spectra of unitary matrices.
TAU_CIRCLE = 1e-6

# Phase width within which unitary eigenvalues are treated as one cluster
# and their eigenvectors re-orthonormalized together.
TAU_CLUSTER_PHASE = 1e-6

# Relative rank cutoff: singular values at or below TAU_RANK_REL * sigma_1
# count as zero for rank decisions.
TAU_RANK_REL = 1e-10

# Distance from the log branch point (angle pi) below which geodesic
# construction refuses to pick a direction.
TAU_BRANCH = 1e-9

# Singular values at or below this (relative to sigma_1) are handled by the
# null-space branch instead of dividing by them.
_NULL_CUTOFF_REL = 1e-13

# Residual threshold for dropping a linearly dependent candidate column
# during invariant-subspace extraction.
_DEPENDENT_TOL = 1e-8


def complex_eigenvalues(a):
    """All 2n eigenvalues of the complex adjoint image, conjugate pairs intact.

    Sorted by descending real part, then descending imaginary part.
    """
    n, m = a.shape
    if n != m:
        raise DimensionMismatch("eigenvalues of a non-square matrix")
    try:
        lam = np.linalg.eigvals(chi(a))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence("eigenvalue iteration failed: %s" % exc) from exc
    return lam[np.lexsort((-lam.imag, -lam.real))]


def standard_eigenvalues(a):
    """The n standard eigenvalues of a square quaternionic matrix.

    One representative per conjugate pair of the adjoint image, chosen from
    the closed upper half plane, sorted by descending real part then
    descending imaginary part.

    Raises
    ------
    PairingFailure
        If the image spectrum cannot be split into conjugate pairs within
        tolerance (an indication of a badly conditioned input).
    NoConvergence
        If the underlying eigenvalue iteration fails.
    """
    n, m = a.shape
    if n != m:
        raise DimensionMismatch("eigenvalues of a non-square matrix")
    lam = complex_eigenvalues(a)
    scale = np.sqrt(2.0) * a.norm()
    return _standard_from_spectrum(lam, scale, n)


def _standard_from_spectrum(lam, scale, n):
    """Pair a 2n-point conjugate-symmetric spectrum into n representatives."""
    lam = np.asarray(lam, dtype=complex)
    if lam.shape != (2 * n,):
        raise PairingFailure(
            "expected %d spectrum points, got %d" % (2 * n, lam.size))
    tau_im = TAU_IM_REL * scale
    tau_pair = TAU_PAIR_REL * scale
    reps = []

    real_mask = np.abs(lam.imag) <= tau_im
    reals = np.sort(lam.real[real_mask])
    if reals.size % 2:
        raise PairingFailure(
            "odd number of near-real eigenvalues (%d); real eigenvalues of "
            "the adjoint image must have even multiplicity" % reals.size)
    for i in range(0, reals.size, 2):
        gap = reals[i + 1] - reals[i]
        if gap > tau_pair:
            raise PairingFailure(
                "near-real values %.6g and %.6g are %.3e apart, beyond the "
                "pairing tolerance %.3e" % (reals[i], reals[i + 1], gap, tau_pair))
        reps.append(complex(0.5 * (reals[i] + reals[i + 1]), 0.0))

    uppers = lam[lam.imag > tau_im]
    lowers = lam[lam.imag < -tau_im]
    if uppers.size != lowers.size:
        raise PairingFailure(
            "unbalanced half planes: %d values above the real axis, %d below"
            % (uppers.size, lowers.size))
    lowers_conj = np.conj(lowers)
    used = np.zeros(lowers.size, dtype=bool)
    for u in uppers:
        d = np.abs(u - lowers_conj)
        d[used] = np.inf
        j = int(np.argmin(d)) if d.size else 0
        if d.size == 0 or d[j] > tau_pair:
            raise PairingFailure(
                "no conjugate partner for %.6g%+.6gj within tolerance %.3e"
                % (u.real, u.imag, tau_pair))
        used[j] = True
        reps.append(0.5 * (u + lowers_conj[j]))

    if len(reps) != n:
        raise PairingFailure(
            "pairing produced %d representatives, expected %d" % (len(reps), n))
    out = np.array([complex(r.real, max(r.imag, 0.0)) for r in reps])
    return out[np.lexsort((-out.imag, -out.real))]


def _qcol(u):
    """Quaternionic column encoded by a complex adjoint-image column."""
    n = u.shape[0] // 2
    return (np.array(u[:n]), -np.conj(u[n:]))


def _chi_col(col):
    """First adjoint-image column of a quaternionic column (ca, cb)."""
    return np.concatenate([col[0], -np.conj(col[1])])


def _isotropic_primaries(chi_cols, want, what):
    """Extract ``want`` orthonormal quaternionic columns from 2*want complex ones.

    The complex columns span an invariant subspace that is closed under the
    quaternionic structure, so a greedy quaternionic Gram-Schmidt over their
    quaternionic reads yields exactly half as many independent columns.  A
    second pass tightens orthonormality.
    """
    cand = [_qcol(u) for u in chi_cols]
    prims, _, _ = _mgs_pass(cand, [_DEPENDENT_TOL] * len(cand), want)
    if len(prims) < want:
        raise PairingFailure(
            "%s: extracted %d independent quaternionic columns from a "
            "%d-dimensional complex subspace, expected %d"
            % (what, len(prims), len(cand), want))
    out, _, skipped = _mgs_pass(prims, [ZERO_THRESHOLD] * len(prims))
    if skipped:
        raise PairingFailure("%s: column collapsed during re-orthonormalization"
                             % what)
    return out


def _desc_clusters(values, tol):
    """Group indices of a descending 1-D array by gaps larger than tol."""
    if values.size == 0:
        return []
    splits = list(np.where(-np.diff(values) > tol)[0] + 1)
    return np.split(np.arange(values.size), splits)


@dataclass
class Qsvd:
    """Quaternionic singular value decomposition.

    ``u`` and ``v`` are unitary and ``u @ a @ v`` is the n x m real diagonal
    matrix carrying ``sigma``; equivalently
    ``a = u.adjoint() @ diag(sigma) @ v.adjoint()``.
    """

    u: QuatMatrix
    sigma: np.ndarray
    v: QuatMatrix

    @property
    def left_vectors(self):
        """Matrix whose columns are the left singular vectors."""
        return self.u.adjoint()

    @property
    def right_vectors(self):
        """Matrix whose columns are the right singular vectors."""
        return self.v


def qsvd(a):
    """Singular value decomposition of a quaternionic matrix.

    The singular values equal those of the complex adjoint image with
    multiplicities halved; they come back sorted in descending order, all
    min(n, m) of them including zeros.

    Raises
    ------
    NoConvergence
        If the complex SVD iteration fails.
    PairingFailure
        If a singular cluster of the image has odd size or does not carry
        the expected quaternionic structure.
    """
    n, m = a.shape
    c = chi(a)
    try:
        ut, s, vh = np.linalg.svd(c)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence("singular value iteration failed: %s" % exc) from exc
    v = vh.conj().T
    s1 = s[0] if s.size else 0.0
    s_left = np.concatenate([s, np.zeros(2 * n - s.size)])
    s_right = np.concatenate([s, np.zeros(2 * m - s.size)])

    gap_tol = max(TAU_RANK_REL * s1, ZERO_THRESHOLD)
    left_cols = []
    sigma_full = []
    for grp in _desc_clusters(s_left, gap_tol):
        if len(grp) % 2:
            raise PairingFailure(
                "singular cluster of odd size %d; image singular values must "
                "pair up" % len(grp))
        prims = _isotropic_primaries(
            [ut[:, j] for j in grp], len(grp) // 2, "left singular cluster")
        left_cols.extend(prims)
        sigma_full.extend(s_left[grp][::2])
    sigma_full = np.array(sigma_full)

    p = min(n, m)
    sigma = sigma_full[:p]
    null_cut = max(_NULL_CUTOFF_REL * s1, ZERO_THRESHOLD)

    right_cols = []
    null_needed = 0
    for i in range(p):
        if sigma_full[i] > null_cut:
            w = c.conj().T @ _chi_col(left_cols[i]) / sigma_full[i]
            right_cols.append(_qcol(w))
        else:
            null_needed += 1
    if m > n:
        null_needed += m - n
    if null_needed:
        nz = int(np.sum(s_right > null_cut))
        null_basis = v[:, nz:]
        prims = _isotropic_primaries(
            [null_basis[:, j] for j in range(null_basis.shape[1])],
            null_needed, "right null space")
        right_cols.extend(prims)

    right_cols, _, skipped = _mgs_pass(
        right_cols, [ZERO_THRESHOLD] * len(right_cols))
    if skipped:
        raise PairingFailure("right singular column collapsed during repair")

    uq = QuatMatrix.from_columns(left_cols)
    vq = QuatMatrix.from_columns(right_cols)
    return Qsvd(u=uq.adjoint(), sigma=sigma, v=vq)


@dataclass
class UnitaryEig:
    """Unitary eigendecomposition: ``a = v @ diag(eigenvalues) @ v.adjoint()``.

    ``eigenvalues`` are the n standard eigenvalues on the unit circle with
    nonnegative imaginary part; ``v`` is unitary with quaternionic
    eigenvector columns.
    """

    v: QuatMatrix
    eigenvalues: np.ndarray

    def log(self):
        """Principal logarithm, a skew-hermitian quaternionic matrix.

        Eigenvalue phases are taken in [0, pi]; the quaternionic similarity
        freedom absorbs the choice of sign.  The result is explicitly
        skew-symmetrized to scrub roundoff.
        """
        theta = np.angle(self.eigenvalues)
        d = QuatMatrix.diag(1j * theta)
        s = self.v @ d @ self.v.adjoint()
        return (s - s.adjoint()) * 0.5


def unitary_eig(a, tol=None):
    """Eigendecomposition of a unitary quaternionic matrix.

    Uses a complex Schur decomposition of the adjoint image, which is
    diagonal for normal input, then rebuilds quaternionic eigenvectors:
    eigenvalues strictly above the real axis keep their Schur vector's
    quaternionic read directly, and near-real clusters (at +-1) go through
    quaternionic Gram-Schmidt extraction.  Eigenvalues are renormalized to
    unit modulus, and eigenvectors of phase clusters closer than
    ``TAU_CLUSTER_PHASE`` are re-orthonormalized together.

    Parameters
    ----------
    a : QuatMatrix
        Square unitary matrix.
    tol : float or None
        Absolute tolerance for the unitarity check; None picks the
        predicate default.

    Raises
    ------
    NotUnitary
        If the input fails the unitarity check or its spectrum strays from
        the unit circle by more than ``TAU_CIRCLE``.
    """
    n, m = a.shape
    if n != m:
        raise DimensionMismatch("eigendecomposition of a non-square matrix")
    if not a.is_unitary(tol):
        raise NotUnitary("input fails the unitarity check")
    c = chi(a)
    try:
        t, z = scipy.linalg.schur(c, output="complex")
    except np.linalg.LinAlgError as exc:
        raise NoConvergence("schur iteration failed: %s" % exc) from exc
    lam = np.diag(t)
    drift = np.max(np.abs(np.abs(lam) - 1.0))
    if drift > TAU_CIRCLE:
        raise NotUnitary(
            "spectrum strays %.3e from the unit circle (tolerance %.3e)"
            % (drift, TAU_CIRCLE))

    scale = np.linalg.norm(c)
    tau_im = TAU_IM_REL * scale
    tau_pair = TAU_PAIR_REL * scale

    vals = []
    vecs = []

    real_idx = np.where(np.abs(lam.imag) <= tau_im)[0]
    if real_idx.size:
        order = real_idx[np.argsort(-lam.real[real_idx])]
        reals_desc = lam.real[order]
        for grp in _desc_clusters(reals_desc, tau_pair):
            if len(grp) % 2:
                raise PairingFailure(
                    "real eigenvalue cluster of odd size %d" % len(grp))
            idx = order[grp]
            rep = complex(np.mean(lam.real[idx]), 0.0)
            prims = _isotropic_primaries(
                [z[:, j] for j in idx], len(grp) // 2, "real eigencluster")
            vals.extend([rep] * (len(grp) // 2))
            vecs.extend(prims)

    upper_idx = np.where(lam.imag > tau_im)[0]
    lower_idx = np.where(lam.imag < -tau_im)[0]
    if upper_idx.size != lower_idx.size:
        raise PairingFailure(
            "unbalanced half planes: %d eigenvalues above the real axis, "
            "%d below" % (upper_idx.size, lower_idx.size))
    lowers_conj = np.conj(lam[lower_idx])
    used = np.zeros(lower_idx.size, dtype=bool)
    for j in upper_idx:
        d = np.abs(lam[j] - lowers_conj)
        d[used] = np.inf
        k = int(np.argmin(d)) if d.size else 0
        if d.size == 0 or d[k] > tau_pair:
            raise PairingFailure(
                "no conjugate partner for eigenvalue %.6g%+.6gj within %.3e"
                % (lam[j].real, lam[j].imag, tau_pair))
        used[k] = True
        vals.append(0.5 * (lam[j] + lowers_conj[k]))
        vecs.append(_qcol(z[:, j]))

    if len(vals) != n:
        raise PairingFailure(
            "eigenvector extraction produced %d columns, expected %d"
            % (len(vals), n))

    vals = np.array(vals)
    vals = vals / np.abs(vals)
    order = np.lexsort((-vals.imag, -vals.real))
    vals = vals[order]
    vecs = [vecs[i] for i in order]

    # Re-orthonormalize eigenvectors whose phases fall in one cluster; the
    # sort by descending real part is ascending in phase on the half circle.
    theta = np.angle(vals)
    start = 0
    for end in range(1, n + 1):
        if end < n and abs(theta[end] - theta[end - 1]) <= TAU_CLUSTER_PHASE:
            continue
        if end - start > 1:
            fixed, _, skipped = _mgs_pass(
                vecs[start:end], [ZERO_THRESHOLD] * (end - start))
            if skipped:
                raise PairingFailure(
                    "eigenvector collapsed while re-orthonormalizing a "
                    "degenerate phase cluster")
            vecs[start:end] = fixed
        start = end

    return UnitaryEig(v=QuatMatrix.from_columns(vecs), eigenvalues=vals)


def unitary_log(a, tol=None):
    """Principal logarithm of a unitary matrix; see ``UnitaryEig.log``."""
    return unitary_eig(a, tol).log()


def matrix_exp(a):
    """Matrix exponential, computed on the complex adjoint image.

    The exponential of an adjoint image keeps the quaternionic block
    symmetry, so the result maps back exactly.
    """
    n, m = a.shape
    if n != m:
        raise DimensionMismatch("exponential of a non-square matrix")
    return from_chi(scipy.linalg.expm(chi(a)))
