import numpy as np
import pytest

from steermub.errors import NotUnbiased, ZeroVector
from steermub.mub import (
    MubPair,
    QubitBasis,
    basis_from_direction,
    frame_from_angles,
    is_mutually_unbiased,
    rotation_zyz,
    unbiasedness_overlap,
)

INV_SQRT2 = 1 / np.sqrt(2)


def test_z_basis():
    plus, minus = basis_from_direction([0, 0, 1]).projectors
    np.testing.assert_allclose(plus, np.diag([1, 0]))
    np.testing.assert_allclose(minus, np.diag([0, 1]))


def test_x_basis():
    plus, minus = basis_from_direction([1, 0, 0]).projectors
    ket = np.array([1, 1]) / np.sqrt(2)
    np.testing.assert_allclose(plus, np.outer(ket, ket))
    np.testing.assert_allclose(plus @ ket, ket, atol=1e-15)


def test_normalisation():
    a, b = basis_from_direction([0, 0, 2]), basis_from_direction([0, 0, 1])
    np.testing.assert_array_equal(a.direction, b.direction)


def test_zero_vector():
    with pytest.raises(ZeroVector):
        basis_from_direction([0, 0, 0])


def test_projector_algebra(rng):
    for _ in range(20):
        p, m = basis_from_direction(rng.normal(size=3)).projectors
        np.testing.assert_allclose(p + m, np.eye(2), atol=1e-12)
        np.testing.assert_allclose(p @ p, p, atol=1e-12)
        np.testing.assert_allclose(m @ m, m, atol=1e-12)


def test_overlap_canonical_pair():
    ov = unbiasedness_overlap(basis_from_direction([0, 0, 1]), basis_from_direction([1, 0, 0]))
    np.testing.assert_allclose(ov, INV_SQRT2, atol=1e-12)


def test_overlap_identical():
    z = basis_from_direction([0, 0, 1])
    np.testing.assert_allclose(unbiasedness_overlap(z, z), np.eye(2), atol=1e-12)


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.0, 2.9])
def test_overlap_polar_angle(theta):
    n = [np.sin(theta), 0, np.cos(theta)]
    ov = unbiasedness_overlap(basis_from_direction([0, 0, 1]), basis_from_direction(n))
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    np.testing.assert_allclose(ov, [[c, s], [s, c]], atol=1e-12)


def test_identity_frame():
    t = frame_from_angles(0, 0, 0)
    np.testing.assert_allclose([b.direction for b in t.bases], np.eye(3), atol=1e-15)


def test_quarter_turn():
    t = frame_from_angles(0, np.pi / 2, 0)
    np.testing.assert_allclose(t.first.direction, [0, 0, -1], atol=1e-15)


def test_random_frames_orthonormal(rng):
    for ang in rng.uniform(-10, 10, size=(100, 3)):
        t = frame_from_angles(*ang)
        D = np.array([b.direction for b in t.bases])
        np.testing.assert_allclose(D @ D.T, np.eye(3), atol=1e-12)
        for i in range(3):
            for j in range(i + 1, 3):
                assert is_mutually_unbiased(t.bases[i], t.bases[j])
        assert np.linalg.det(rotation_zyz(*ang)) == pytest.approx(1)


def test_frames_cover_rotations(rng):
    # any rotation matrix is reproduced by some ZYZ angles
    from scipy.spatial.transform import Rotation

    for R in Rotation.random(20, random_state=1).as_matrix():
        a, b, g = Rotation.from_matrix(R).as_euler("ZYZ")
        np.testing.assert_allclose(rotation_zyz(a, b, g), R, atol=1e-12)


def test_pair_requires_orthogonal():
    with pytest.raises(NotUnbiased):
        MubPair(basis_from_direction([0, 0, 1]), basis_from_direction([1, 0, 1]))
    MubPair(basis_from_direction([0, 0, 1]), basis_from_direction([0, 1, 0]))


def test_basis_requires_unit():
    with pytest.raises(ValueError):
        QubitBasis(np.array([0, 0, 2.0]))
