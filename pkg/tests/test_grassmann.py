import numpy as np
import pytest

from quatgrass.errors import (
    CutLocus,
    DimensionMismatch,
    MixedDimensions,
    NotOrthonormalFrame,
)
from quatgrass.grassmann import (
    DistanceMatrix,
    GrassmannPoint,
    distance_matrix,
    from_frame,
    geodesic_distance,
    geodesic_interpolate,
)
from quatgrass.quaternion import QuatMatrix
from quatgrass.sampling import (
    random_frame,
    random_grassmann_point,
    random_unitary,
)


def line(theta):
    """Gr(2,1) point spanned by (cos t, sin t)."""
    return from_frame(QuatMatrix.from_parts([[np.cos(theta)], [np.sin(theta)]]))


class TestGrassmannPoint:
    def test_from_frame_projector(self):
        p = line(np.pi / 4)
        assert np.allclose(p.projector.w, [[0.5, 0.5], [0.5, 0.5]], atol=1e-14)
        assert p.dimension == 2
        assert p.subspace_dim == 1

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            GrassmannPoint(QuatMatrix.from_parts([[0.0, 1.0], [0.0, 1.0]]))

    def test_rejects_non_idempotent(self):
        with pytest.raises(ValueError):
            GrassmannPoint(QuatMatrix.diag([0.5, 0.5]))

    def test_rejects_trivial_subspaces(self):
        with pytest.raises(ValueError):
            GrassmannPoint(QuatMatrix.eye(3))
        with pytest.raises(ValueError):
            GrassmannPoint(QuatMatrix.zeros(3))

    def test_rejects_wrong_k(self):
        with pytest.raises(ValueError):
            GrassmannPoint(QuatMatrix.diag([1.0, 0.0]), k=2)

    def test_infers_k_from_trace(self):
        p = GrassmannPoint(QuatMatrix.diag([1.0, 1.0, 0.0]))
        assert p.subspace_dim == 2

    def test_from_frame_rejects_skewed(self):
        x = QuatMatrix.from_parts([[1.0], [1.0]])
        with pytest.raises(NotOrthonormalFrame):
            from_frame(x)


class TestGeodesicDistance:
    def test_frozen_quarter_turn(self):
        # one principal angle pi/4: distance sqrt(2) * pi/4
        assert geodesic_distance(line(0.0), line(np.pi / 4)) == pytest.approx(
            np.sqrt(2) * np.pi / 4, abs=1e-10)

    def test_frozen_orthogonal_lines(self):
        assert geodesic_distance(line(0.0), line(np.pi / 2)) == pytest.approx(
            np.pi / np.sqrt(2), abs=1e-10)

    def test_self_distance_negligible(self):
        p = random_grassmann_point(6, 2, rng=3)
        assert geodesic_distance(p, p) <= 1e-7

    def test_symmetry(self):
        p = random_grassmann_point(5, 2, rng=4)
        q = random_grassmann_point(5, 2, rng=5)
        assert geodesic_distance(p, q) == pytest.approx(
            geodesic_distance(q, p), abs=1e-8)

    def test_unitary_invariance(self):
        p = random_grassmann_point(5, 2, rng=6)
        q = random_grassmann_point(5, 2, rng=7)
        u = random_unitary(5, rng=8)
        pu = GrassmannPoint(u @ p.projector @ u.adjoint(), 2)
        qu = GrassmannPoint(u @ q.projector @ u.adjoint(), 2)
        assert geodesic_distance(pu, qu) == pytest.approx(
            geodesic_distance(p, q), abs=1e-8)

    def test_principal_angle_oracle_real_frames(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            xa = np.linalg.qr(rng.standard_normal((7, 3)))[0]
            xb = np.linalg.qr(rng.standard_normal((7, 3)))[0]
            theta = np.arccos(np.clip(
                np.linalg.svd(xa.T @ xb, compute_uv=False), -1.0, 1.0))
            expected = np.sqrt(2.0) * np.linalg.norm(theta)
            p = from_frame(QuatMatrix(xa.astype(complex)))
            q = from_frame(QuatMatrix(xb.astype(complex)))
            assert geodesic_distance(p, q) == pytest.approx(expected, abs=1e-8)

    def test_range_bound(self):
        for seed in range(5):
            p = random_grassmann_point(6, 3, rng=10 + seed)
            q = random_grassmann_point(6, 3, rng=20 + seed)
            d = geodesic_distance(p, q)
            assert 0.0 <= d <= 0.5 * np.pi * np.sqrt(6) + 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            geodesic_distance(random_grassmann_point(4, 2, rng=1),
                              random_grassmann_point(5, 2, rng=1))
        with pytest.raises(DimensionMismatch):
            geodesic_distance(random_grassmann_point(5, 1, rng=1),
                              random_grassmann_point(5, 2, rng=1))


class TestGeodesicInterpolate:
    def test_endpoint_zero_is_exact(self):
        p = random_grassmann_point(5, 2, rng=11)
        q = random_grassmann_point(5, 2, rng=12)
        g0 = geodesic_interpolate(p, q, 0.0)
        assert np.array_equal(g0.projector.ca, p.projector.ca)
        assert np.array_equal(g0.projector.cb, p.projector.cb)

    def test_endpoint_one_recovers_target(self):
        p = random_grassmann_point(5, 2, rng=13)
        q = random_grassmann_point(5, 2, rng=14)
        g1 = geodesic_interpolate(p, q, 1.0)
        assert (g1.projector - q.projector).norm() <= 1e-6

    def test_constant_speed(self):
        p = random_grassmann_point(6, 2, rng=15)
        q = random_grassmann_point(6, 2, rng=16)
        d = geodesic_distance(p, q)
        for t in (0.25, 0.5, 0.75):
            g = geodesic_interpolate(p, q, t)
            assert geodesic_distance(p, g) == pytest.approx(t * d, abs=1e-6)
            assert geodesic_distance(g, q) == pytest.approx((1 - t) * d, abs=1e-6)

    def test_cut_locus_raises(self):
        with pytest.raises(CutLocus):
            geodesic_interpolate(line(0.0), line(np.pi / 2), 0.5)

    def test_parameter_range(self):
        p = line(0.0)
        q = line(0.3)
        with pytest.raises(ValueError):
            geodesic_interpolate(p, q, -0.1)
        with pytest.raises(ValueError):
            geodesic_interpolate(p, q, 1.1)


class TestDistanceMatrix:
    def test_symmetric_zero_diagonal(self):
        pts = [random_grassmann_point(4, 2, rng=s) for s in range(4)]
        dm = distance_matrix(pts)
        assert isinstance(dm, DistanceMatrix)
        assert dm.labels == ["0", "1", "2", "3"]
        assert np.array_equal(dm.values, dm.values.T)
        assert np.all(np.diag(dm.values) == 0.0)
        assert dm.values[0, 1] == pytest.approx(
            geodesic_distance(pts[0], pts[1]), abs=1e-12)

    def test_thread_count_invariant(self):
        pts = [random_grassmann_point(4, 2, rng=s) for s in range(5)]
        serial = distance_matrix(pts, threads=1)
        parallel = distance_matrix(pts, threads=4)
        assert np.array_equal(serial.values, parallel.values)

    def test_mixed_dimensions(self):
        pts = [random_grassmann_point(4, 2, rng=1),
               random_grassmann_point(5, 2, rng=2)]
        with pytest.raises(MixedDimensions):
            distance_matrix(pts)

    def test_custom_labels(self):
        pts = [random_grassmann_point(4, 2, rng=s) for s in range(2)]
        dm = distance_matrix(pts, labels=["a", "b"])
        assert dm.labels == ["a", "b"]
        with pytest.raises(DimensionMismatch):
            distance_matrix(pts, labels=["a"])


class TestSampling:
    def test_frame_is_orthonormal(self):
        x = random_frame(6, 3, rng=17)
        assert (x.adjoint() @ x - QuatMatrix.eye(3)).norm() <= 1e-12

    def test_point_reproducible(self):
        a = random_grassmann_point(5, 2, rng=18)
        b = random_grassmann_point(5, 2, rng=18)
        assert np.array_equal(a.projector.ca, b.projector.ca)
