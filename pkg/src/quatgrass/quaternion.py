"""Quaternion scalars, dense quaternion matrices, and the complex adjoint map.

A quaternion q = w + x i + y j + z k is stored either as four reals (scalar
case) or, for matrices, as the complex pair A = Ca + Cb j with
Ca = W + X i and Cb = Y + Z i.  The pair form makes the complex adjoint
representation a plain block assembly and turns quaternionic matrix products
into four complex GEMMs.
"""

from __future__ import annotations

import numbers

import numpy as np

from .errors import (
    DimensionMismatch,
    NotQuaternionicStructure,
    ZeroQuaternion,
)

# Absolute norm below which a quaternion counts as zero for inversion.
ZERO_THRESHOLD = 1e-300

# Relative tolerance for the hermitian/unitary predicates:
# threshold = PREDICATE_RTOL * max(1, frobenius norm).
PREDICATE_RTOL = 1e-10

# Relative tolerance for the block-symmetry residual accepted by from_chi.
CHI_SYMMETRY_RTOL = 1e-9


class Quaternion:
    """A quaternion w + x i + y j + z k with float components.

    Products follow the Hamilton convention (i j = k, j i = -k,
    i**2 = j**2 = k**2 = -1) and therefore do not commute.
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    @property
    def components(self):
        return (self.w, self.x, self.y, self.z)

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        return float(np.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2))

    def inverse(self):
        n = self.norm()
        if n <= ZERO_THRESHOLD:
            raise ZeroQuaternion("cannot invert a quaternion with norm %.3g" % n)
        n2 = n * n
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def is_pure(self, tol=1e-12):
        return abs(self.w) <= tol * max(1.0, self.norm())

    def __add__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            p, q = self, other
            return Quaternion(
                p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
            )
        if isinstance(other, numbers.Real):
            s = float(other)
            return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)
        return NotImplemented

    def __rmul__(self, other):
        # Reals commute with quaternions; quaternion * quaternion never lands here.
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return self * (1.0 / float(other))
        if isinstance(other, Quaternion):
            return self * other.inverse()
        return NotImplemented

    def __eq__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "Quaternion(%r, %r, %r, %r)" % self.components

    def to_complex_pair(self):
        """Return (a, b) with q = a + b j, a = w + x i and b = y + z i."""
        return (complex(self.w, self.x), complex(self.y, self.z))


def _as_quaternion(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, numbers.Real):
        return Quaternion(float(value))
    return None


def _as_complex_2d(a, name):
    arr = np.array(a, dtype=np.complex128, order="C", copy=True)
    if arr.ndim != 2 or arr.size == 0:
        raise DimensionMismatch(
            "%s must be a nonempty 2-D array, got shape %r" % (name, arr.shape))
    return arr


class QuatMatrix:
    """Dense quaternionic matrix stored as the complex pair A = ca + cb j.

    The component arrays returned by ``w``, ``x``, ``y``, ``z`` follow
    row-major entry order.  Scalar multiplication by a ``Quaternion``
    distinguishes sides: ``A * q`` multiplies every entry on the right,
    ``q * A`` on the left.

    Parameters
    ----------
    ca : array_like of complex, shape (n, m)
        The w + x i part of each entry.
    cb : array_like of complex or None
        The y + z i part; None means zero.
    """

    __slots__ = ("ca", "cb")

    def __init__(self, ca, cb=None):
        self.ca = _as_complex_2d(ca, "ca")
        if cb is None:
            self.cb = np.zeros_like(self.ca)
        else:
            self.cb = _as_complex_2d(cb, "cb")
            if self.cb.shape != self.ca.shape:
                raise DimensionMismatch(
                    "ca and cb differ in shape: %r vs %r"
                    % (self.ca.shape, self.cb.shape))

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_parts(cls, w, x=None, y=None, z=None):
        """Build from real component arrays; omitted components are zero."""
        ref = None
        parts = []
        for name, p in (("w", w), ("x", x), ("y", y), ("z", z)):
            if p is None:
                parts.append(None)
                continue
            arr = np.asarray(p, dtype=float)
            if arr.ndim != 2 or arr.size == 0:
                raise DimensionMismatch(
                    "component %s must be a nonempty 2-D array" % name)
            if ref is not None and arr.shape != ref:
                raise DimensionMismatch(
                    "component %s has shape %r, expected %r"
                    % (name, arr.shape, ref))
            ref = arr.shape
            parts.append(arr)
        if ref is None:
            raise DimensionMismatch("at least one component array is required")
        fw, fx, fy, fz = (np.zeros(ref) if p is None else p for p in parts)
        return cls(fw + 1j * fx, fy + 1j * fz)

    @classmethod
    def from_entries(cls, rows):
        """Build from a nested sequence of Quaternion or real entries."""
        data = [[_require_quaternion(e) for e in row] for row in rows]
        n = len(data)
        if n == 0 or len(data[0]) == 0:
            raise DimensionMismatch("entries must form a nonempty 2-D grid")
        m = len(data[0])
        if any(len(row) != m for row in data):
            raise DimensionMismatch("entry rows have unequal lengths")
        ca = np.empty((n, m), dtype=complex)
        cb = np.empty((n, m), dtype=complex)
        for i, row in enumerate(data):
            for j, q in enumerate(row):
                ca[i, j], cb[i, j] = q.to_complex_pair()
        return cls(ca, cb)

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls(np.zeros((n, m), dtype=complex))

    @classmethod
    def eye(cls, n):
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def diag(cls, values):
        """Diagonal matrix from Quaternion, real, or complex entries.

        Complex entries c embed as w + x i quaternions.
        """
        vals = list(values)
        if not vals:
            raise DimensionMismatch("diag needs at least one value")
        ca = np.zeros((len(vals), len(vals)), dtype=complex)
        cb = np.zeros_like(ca)
        for i, v in enumerate(vals):
            if isinstance(v, Quaternion):
                ca[i, i], cb[i, i] = v.to_complex_pair()
            else:
                ca[i, i] = complex(v)
        return cls(ca, cb)

    @classmethod
    def hstack(cls, mats):
        mats = list(mats)
        if not mats:
            raise DimensionMismatch("hstack needs at least one matrix")
        rows = mats[0].shape[0]
        if any(m.shape[0] != rows for m in mats):
            raise DimensionMismatch("hstack row counts differ")
        return cls(np.hstack([m.ca for m in mats]),
                   np.hstack([m.cb for m in mats]))

    @classmethod
    def from_columns(cls, cols):
        """Assemble from 1-D complex-pair columns [(ca_col, cb_col), ...]."""
        if not cols:
            raise DimensionMismatch("no columns given")
        return cls(np.column_stack([c[0] for c in cols]),
                   np.column_stack([c[1] for c in cols]))

    # ---- components ----------------------------------------------------

    @property
    def shape(self):
        return self.ca.shape

    @property
    def w(self):
        return self.ca.real.copy()

    @property
    def x(self):
        return self.ca.imag.copy()

    @property
    def y(self):
        return self.cb.real.copy()

    @property
    def z(self):
        return self.cb.imag.copy()

    def entry(self, i, j):
        a = self.ca[i, j]
        b = self.cb[i, j]
        return Quaternion(a.real, a.imag, b.real, b.imag)

    def col(self, j):
        return QuatMatrix(self.ca[:, j:j + 1], self.cb[:, j:j + 1])

    def col_block(self, start, stop):
        """Columns start..stop-1 as a new matrix."""
        return QuatMatrix(self.ca[:, start:stop], self.cb[:, start:stop])

    def copy(self):
        return QuatMatrix(self.ca, self.cb)

    # ---- algebra --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QuatMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionMismatch(
                "cannot add shapes %r and %r" % (self.shape, other.shape))
        return QuatMatrix(self.ca + other.ca, self.cb + other.cb)

    def __sub__(self, other):
        if not isinstance(other, QuatMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionMismatch(
                "cannot subtract shapes %r and %r" % (self.shape, other.shape))
        return QuatMatrix(self.ca - other.ca, self.cb - other.cb)

    def __neg__(self):
        return QuatMatrix(-self.ca, -self.cb)

    def __matmul__(self, other):
        if not isinstance(other, QuatMatrix):
            return NotImplemented
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatch(
                "cannot multiply shapes %r and %r" % (self.shape, other.shape))
        # (Aa + Ab j)(Ba + Bb j) = (Aa Ba - Ab conj(Bb)) + (Aa Bb + Ab conj(Ba)) j
        return QuatMatrix(
            self.ca @ other.ca - self.cb @ np.conj(other.cb),
            self.ca @ other.cb + self.cb @ np.conj(other.ca),
        )

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            s = float(other)
            return QuatMatrix(self.ca * s, self.cb * s)
        if isinstance(other, Quaternion):
            # right multiplication of every entry: a_ij * q
            al, be = other.to_complex_pair()
            return QuatMatrix(self.ca * al - self.cb * np.conj(be),
                              self.ca * be + self.cb * np.conj(al))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return self * other
        if isinstance(other, Quaternion):
            # left multiplication of every entry: q * a_ij
            al, be = other.to_complex_pair()
            return QuatMatrix(al * self.ca - be * np.conj(self.cb),
                              al * self.cb + be * np.conj(self.ca))
        return NotImplemented

    def adjoint(self):
        """Conjugate transpose."""
        return QuatMatrix(np.conj(self.ca).T, -self.cb.T)

    @property
    def H(self):
        return self.adjoint()

    def conjugate(self):
        return QuatMatrix(np.conj(self.ca), -self.cb)

    def transpose(self):
        return QuatMatrix(self.ca.T, self.cb.T)

    def trace(self):
        n, m = self.shape
        if n != m:
            raise DimensionMismatch("trace of a non-square matrix")
        a = np.trace(self.ca)
        b = np.trace(self.cb)
        return Quaternion(a.real, a.imag, b.real, b.imag)

    def norm(self):
        """Quaternionic Frobenius norm sqrt(sum of squared entry norms)."""
        return float(np.sqrt(np.sum(np.abs(self.ca) ** 2)
                             + np.sum(np.abs(self.cb) ** 2)))

    def inverse(self):
        """Matrix inverse, computed through the complex adjoint image."""
        n, m = self.shape
        if n != m:
            raise DimensionMismatch("inverse of a non-square matrix")
        return from_chi(np.linalg.inv(chi(self)))

    # ---- predicates ------------------------------------------------------

    def _predicate_tol(self, tol):
        if tol is not None:
            return float(tol)
        return PREDICATE_RTOL * max(1.0, self.norm())

    def is_hermitian(self, tol=None):
        n, m = self.shape
        if n != m:
            return False
        return (self - self.adjoint()).norm() <= self._predicate_tol(tol)

    def is_unitary(self, tol=None):
        n, m = self.shape
        if n != m:
            return False
        g = self.adjoint() @ self
        return (g - QuatMatrix.eye(n)).norm() <= self._predicate_tol(tol)

    def __repr__(self):
        return "QuatMatrix(shape=%r)" % (self.shape,)


def _require_quaternion(entry):
    q = _as_quaternion(entry)
    if q is None:
        raise TypeError("expected Quaternion or real entry, got %r" % (entry,))
    return q


def chi(a):
    """Complex adjoint image of a quaternionic matrix.

    For A = A0 + A1 i + A2 j + A3 k the image is the 2n x 2m complex block
    matrix [[A0 + A1 i, A2 + A3 i], [-(A2 + A3 i)^-, (A0 + A1 i)^-]] where
    ^- is entrywise conjugation.  The map is an algebra homomorphism:
    it preserves products, sums, adjoints, and inverses, and its Frobenius
    norm satisfies ||chi(A)|| = sqrt(2) ||A||.

    Parameters
    ----------
    a : QuatMatrix

    Returns
    -------
    numpy.ndarray of complex, shape (2n, 2m)
    """
    return np.block([[a.ca, a.cb], [-np.conj(a.cb), np.conj(a.ca)]])


def from_chi(c, tol=None):
    """Invert the complex adjoint map.

    The input must carry the block symmetry of an adjoint image within
    ``tol`` (default ``CHI_SYMMETRY_RTOL`` times its Frobenius norm); the two
    redundant copies of each block are averaged, so exact images round-trip
    bit for bit.

    Raises
    ------
    NotQuaternionicStructure
        If the block symmetry residual exceeds the tolerance.
    DimensionMismatch
        If the input dimensions are odd.
    """
    c = np.asarray(c, dtype=complex)
    if c.ndim != 2 or c.shape[0] % 2 or c.shape[1] % 2 or c.size == 0:
        raise DimensionMismatch(
            "adjoint image must be 2-D with even dimensions, got %r"
            % (c.shape,))
    n = c.shape[0] // 2
    m = c.shape[1] // 2
    a = c[:n, :m]
    b = c[:n, m:]
    c21 = c[n:, :m]
    c22 = c[n:, m:]
    residual = np.sqrt(np.linalg.norm(c21 + np.conj(b)) ** 2
                       + np.linalg.norm(c22 - np.conj(a)) ** 2)
    if tol is None:
        tol = CHI_SYMMETRY_RTOL * np.linalg.norm(c)
    if residual > tol:
        raise NotQuaternionicStructure(
            "block symmetry residual %.3e exceeds tolerance %.3e"
            % (residual, tol))
    return QuatMatrix(0.5 * (a + np.conj(c22)), 0.5 * (b - np.conj(c21)))


def _mgs_pass(cols, thresholds, want=None):
    """Quaternionic modified Gram-Schmidt over complex-pair columns.

    cols is a sequence of (ca, cb) 1-D arrays.  Each column is reduced
    against the already-kept ones by subtracting q * (q^* v); a column whose
    residual norm is at or below its threshold is skipped.  Stops early once
    ``want`` columns are kept.

    Returns (kept_columns, kept_indices, skipped_indices).
    """
    out = []
    kept = []
    skipped = []
    for i, (va, vb) in enumerate(cols):
        va = np.array(va, dtype=complex)
        vb = np.array(vb, dtype=complex)
        for qa, qb in out:
            alpha = np.vdot(qa, va) + np.conj(np.vdot(qb, vb))
            beta = np.vdot(qa, vb) - np.conj(np.vdot(qb, va))
            va -= qa * alpha - qb * np.conj(beta)
            vb -= qa * beta + qb * np.conj(alpha)
        nv = np.sqrt(np.linalg.norm(va) ** 2 + np.linalg.norm(vb) ** 2)
        if nv <= thresholds[i]:
            skipped.append(i)
            continue
        out.append((va / nv, vb / nv))
        kept.append(i)
        if want is not None and len(out) == want:
            break
    return out, kept, skipped
