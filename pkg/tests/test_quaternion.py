import numpy as np
import pytest
from hypothesis import given, strategies as st

from quatgrass.errors import (
    DimensionMismatch,
    NotQuaternionicStructure,
    ZeroQuaternion,
)
from quatgrass.quaternion import Quaternion, QuatMatrix, chi, from_chi


def comps(q):
    return np.array(q.components)


class TestQuaternionScalar:
    def test_hamilton_product(self):
        # (1 + i)(1 + j) = 1 + i + j + k
        p = Quaternion(1, 1, 0, 0)
        q = Quaternion(1, 0, 1, 0)
        assert (p * q).components == (1, 1, 1, 1)

    def test_noncommutative(self):
        i = Quaternion(0, 1, 0, 0)
        j = Quaternion(0, 0, 1, 0)
        k = Quaternion(0, 0, 0, 1)
        assert (i * j).components == k.components
        assert (j * i).components == (-k).components

    def test_conjugate_times_self(self):
        q = Quaternion(0, 1, 1, 1)
        prod = q * q.conjugate()
        assert prod.components == (3, 0, 0, 0)

    def test_inverse(self):
        q = Quaternion(1, 1, 1, 1)
        inv = q.inverse()
        assert np.allclose(comps(inv), [0.25, -0.25, -0.25, -0.25])
        assert np.allclose(comps(q * inv), [1, 0, 0, 0])

    def test_inverse_of_tiny_raises(self):
        with pytest.raises(ZeroQuaternion):
            Quaternion(1e-301).inverse()
        with pytest.raises(ZeroQuaternion):
            Quaternion().inverse()

    def test_real_scalar_mixing(self):
        q = Quaternion(1, 2, 3, 4)
        assert (2 * q).components == (2, 4, 6, 8)
        assert (q * 2).components == (2, 4, 6, 8)
        assert (q + 1).components == (2, 2, 3, 4)
        assert (1 - q).components == (0, -2, -3, -4)
        assert (q / 2).components == (0.5, 1, 1.5, 2)

    def test_norm(self):
        assert Quaternion(1, 1, 1, 1).norm() == 2.0

    def test_division_by_quaternion(self):
        p = Quaternion(1, 2, 3, 4)
        q = Quaternion(0, 1, 0, 0)
        assert np.allclose(comps((p / q) * q), comps(p))


finite = st.floats(min_value=-1e6, max_value=1e6,
                   allow_nan=False, allow_infinity=False)
nonzero = st.tuples(finite, finite, finite, finite).filter(
    lambda t: sum(abs(c) for c in t) > 1e-3)
quat = st.builds(Quaternion, finite, finite, finite, finite)
quat_nonzero = nonzero.map(lambda t: Quaternion(*t))


class TestQuaternionProperties:
    @given(quat, quat)
    def test_norm_multiplicative(self, p, q):
        assert (p * q).norm() == pytest.approx(
            p.norm() * q.norm(), rel=1e-10, abs=1e-9)

    @given(quat, quat)
    def test_conjugate_antihomomorphism(self, p, q):
        lhs = (p * q).conjugate()
        rhs = q.conjugate() * p.conjugate()
        assert np.allclose(comps(lhs), comps(rhs), rtol=1e-12, atol=1e-9)

    @given(quat_nonzero)
    def test_inverse_roundtrip(self, q):
        assert np.allclose(comps(q * q.inverse()), [1, 0, 0, 0],
                           rtol=1e-9, atol=1e-9)

    @given(quat, quat, quat)
    def test_associative(self, p, q, r):
        lhs = (p * q) * r
        rhs = p * (q * r)
        scale = max(1.0, p.norm() * q.norm() * r.norm())
        assert np.allclose(comps(lhs), comps(rhs), atol=1e-9 * scale)


I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


class TestQuatMatrix:
    def test_diag_product(self):
        a = QuatMatrix.diag([I, I])
        b = QuatMatrix.diag([J, J])
        c = a @ b
        assert c.entry(0, 0).components == K.components
        assert c.entry(1, 1).components == K.components
        assert c.entry(0, 1).components == (0, 0, 0, 0)

    def test_frobenius_norm(self):
        m = QuatMatrix.from_entries([[I, J], [K, Quaternion(1)]])
        assert m.norm() == 2.0

    def test_matmul_shape_check(self):
        a = QuatMatrix.zeros(2, 3)
        b = QuatMatrix.zeros(2, 3)
        with pytest.raises(DimensionMismatch):
            a @ b

    def test_adjoint_reverses_product(self):
        rng = np.random.default_rng(7)
        a = QuatMatrix(rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4)),
                       rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4)))
        b = QuatMatrix(rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2)),
                       rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2)))
        lhs = (a @ b).adjoint()
        rhs = b.adjoint() @ a.adjoint()
        assert (lhs - rhs).norm() <= 1e-12 * max(1.0, lhs.norm())

    def test_entry_and_components_roundtrip(self):
        m = QuatMatrix.from_parts(
            [[1.0, 2.0]], [[3.0, 4.0]], [[5.0, 6.0]], [[7.0, 8.0]])
        assert m.entry(0, 1).components == (2, 4, 6, 8)
        assert np.array_equal(m.w, [[1, 2]])
        assert np.array_equal(m.x, [[3, 4]])
        assert np.array_equal(m.y, [[5, 6]])
        assert np.array_equal(m.z, [[7, 8]])

    def test_scalar_sides_differ(self):
        m = QuatMatrix.from_entries([[J]])
        left = I * m
        right = m * I
        assert left.entry(0, 0).components == K.components
        assert right.entry(0, 0).components == (-K).components

    def test_real_scalar_both_sides(self):
        m = QuatMatrix.from_entries([[Quaternion(1, 2, 3, 4)]])
        assert (2 * m).entry(0, 0).components == (2, 4, 6, 8)
        assert (m * 2).entry(0, 0).components == (2, 4, 6, 8)

    def test_trace(self):
        m = QuatMatrix.from_entries([[I, J], [K, Quaternion(2)]])
        assert m.trace().components == (2, 1, 0, 0)

    def test_inverse_roundtrip(self):
        rng = np.random.default_rng(11)
        m = QuatMatrix(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)),
                       rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        prod = m @ m.inverse()
        assert (prod - QuatMatrix.eye(4)).norm() <= 1e-10

    def test_hermitian_predicate(self):
        h = QuatMatrix.from_entries([[Quaternion(2), I + J],
                                     [(I + J).conjugate(), Quaternion(5)]])
        assert h.is_hermitian()
        assert not QuatMatrix.from_entries([[I]]).is_hermitian()

    def test_unitary_predicate(self):
        u = QuatMatrix.diag([I, J, K])
        assert u.is_unitary()
        assert not (u * 2).is_unitary()
        assert not QuatMatrix.zeros(2, 3).is_unitary()

    def test_hstack(self):
        a = QuatMatrix.eye(2)
        b = QuatMatrix.zeros(2, 1)
        assert QuatMatrix.hstack([a, b]).shape == (2, 3)
        with pytest.raises(DimensionMismatch):
            QuatMatrix.hstack([a, QuatMatrix.zeros(3, 1)])

    def test_empty_rejected(self):
        with pytest.raises(DimensionMismatch):
            QuatMatrix(np.zeros((0, 2), dtype=complex))


class TestChi:
    def test_unit_examples(self):
        assert np.array_equal(chi(QuatMatrix.from_entries([[I]])),
                              [[1j, 0], [0, -1j]])
        assert np.array_equal(chi(QuatMatrix.from_entries([[J]])),
                              [[0, 1], [-1, 0]])
        assert np.array_equal(chi(QuatMatrix.from_entries([[K]])),
                              [[0, 1j], [1j, 0]])

    def test_homomorphism(self):
        rng = np.random.default_rng(3)
        a = QuatMatrix(rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4)),
                       rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4)))
        b = QuatMatrix(rng.standard_normal((4, 5)) + 1j * rng.standard_normal((4, 5)),
                       rng.standard_normal((4, 5)) + 1j * rng.standard_normal((4, 5)))
        lhs = chi(a @ b)
        rhs = chi(a) @ chi(b)
        assert np.linalg.norm(lhs - rhs) <= 1e-12 * max(1.0, np.linalg.norm(lhs))
        assert np.allclose(chi(a).conj().T, chi(a.adjoint()))

    def test_norm_doubling(self):
        rng = np.random.default_rng(5)
        a = QuatMatrix(rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3)),
                       rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3)))
        assert np.linalg.norm(chi(a)) == pytest.approx(
            np.sqrt(2) * a.norm(), rel=1e-13)

    def test_from_chi_roundtrip_exact(self):
        rng = np.random.default_rng(9)
        a = QuatMatrix(rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2)),
                       rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2)))
        back = from_chi(chi(a))
        assert np.array_equal(back.ca, a.ca)
        assert np.array_equal(back.cb, a.cb)

    def test_from_chi_rejects_bad_structure(self):
        with pytest.raises(NotQuaternionicStructure):
            from_chi(np.array([[1j, 0], [0, 1j]]))
        with pytest.raises(DimensionMismatch):
            from_chi(np.zeros((3, 2)))

    def test_from_chi_accepts_zero(self):
        z = from_chi(np.zeros((4, 4)))
        assert z.norm() == 0.0

    def test_inverse_through_chi_matches(self):
        rng = np.random.default_rng(13)
        a = QuatMatrix(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)),
                       rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        inv_chi = np.linalg.inv(chi(a))
        assert np.linalg.norm(chi(a.inverse()) - inv_chi) <= 1e-9
