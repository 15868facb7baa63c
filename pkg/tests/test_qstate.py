import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steermub.errors import NotHermitian, NotPositiveSemidefinite, OutOfRange, TraceNotOne
from steermub.qstate import (
    CorrelationVector,
    PAULIS,
    assemble,
    bell_diagonal_from_c,
    bloch_decompose,
    canonical_form,
    local_unitary,
    phi_plus,
    product_state,
    sample_tetrahedron,
    singlet,
    validate_density_matrix,
    werner,
)

from conftest import I2, pauli_trace, random_ket, random_unitary


class TestValidate:
    def test_maximally_mixed(self):
        rho = validate_density_matrix(np.eye(4) / 4)
        np.testing.assert_allclose(rho.eigenvalues(), [0.25] * 4, atol=1e-14)

    def test_pure_bell(self):
        rho = validate_density_matrix(phi_plus())
        np.testing.assert_allclose(sorted(rho.eigenvalues()), [0, 0, 0, 1], atol=1e-14)

    def test_negative_eigenvalue(self):
        with pytest.raises(NotPositiveSemidefinite) as exc:
            validate_density_matrix(np.diag([0.5, 0.6, -0.05, -0.05]))
        assert exc.value.magnitude == pytest.approx(0.05)

    def test_not_hermitian(self):
        M = np.eye(4, dtype=complex) / 4
        M[0, 1] = 0.1
        with pytest.raises(NotHermitian) as exc:
            validate_density_matrix(M)
        assert exc.value.magnitude == pytest.approx(0.1)

    def test_trace(self):
        with pytest.raises(TraceNotOne) as exc:
            validate_density_matrix(np.eye(4) / 2)
        assert exc.value.magnitude == pytest.approx(1.0)

    def test_tolerances(self):
        M = np.eye(4, dtype=complex) / 4
        M[0, 0] += 5e-11
        validate_density_matrix(M)
        M[0, 0] += 1e-9
        with pytest.raises(TraceNotOne):
            validate_density_matrix(M)

    def test_read_only(self):
        rho = validate_density_matrix(np.eye(4) / 4)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 1


class TestBellDiagonal:
    def test_vertex_is_phi_plus(self):
        np.testing.assert_allclose(bell_diagonal_from_c((1, -1, 1)).matrix, phi_plus(), atol=1e-15)

    def test_origin(self):
        np.testing.assert_allclose(bell_diagonal_from_c((0, 0, 0)).matrix, np.eye(4) / 4)

    def test_outside_tetrahedron(self):
        # oracle: eigensolver on the raw assembled matrix
        M = assemble(np.zeros(3), np.zeros(3), np.diag([0.9, 0.9, 0.9]))
        assert np.linalg.eigvalsh(M).min() == pytest.approx((1 - 2.7) / 4)
        with pytest.raises(NotPositiveSemidefinite):
            bell_diagonal_from_c((0.9, 0.9, 0.9))

    def test_component_range(self):
        with pytest.raises(OutOfRange):
            CorrelationVector(1.5, 0, 0)

    def test_eigenvalue_formulas_match_eigensolver(self, rng):
        for c in sample_tetrahedron(rng, 200):
            cv = CorrelationVector(*c)
            lam = np.linalg.eigvalsh(bell_diagonal_from_c(cv).matrix)
            np.testing.assert_allclose(np.sort(cv.tetrahedron_eigenvalues()), lam, atol=1e-10)

    def test_admissibility_agrees_with_eigensolver(self, rng):
        for c in rng.uniform(-1, 1, size=(300, 3)):
            cv = CorrelationVector(*c)
            M = assemble(np.zeros(3), np.zeros(3), np.diag(c))
            assert cv.is_bell_admissible() == (np.linalg.eigvalsh(M).min() >= -1e-9)

    def test_derived_scalars(self):
        cv = CorrelationVector(0.8, -0.5, 0.3)
        assert cv.norm == pytest.approx(np.sqrt(0.98))
        assert cv.c_min == pytest.approx(0.3)


class TestBloch:
    def test_phi_plus(self):
        rep = bloch_decompose(phi_plus())
        np.testing.assert_allclose(rep.a, 0, atol=1e-15)
        np.testing.assert_allclose(rep.b, 0, atol=1e-15)
        np.testing.assert_allclose(rep.T, np.diag([1, -1, 1]), atol=1e-15)
        # independent oracle without kron
        for i, si in enumerate(PAULIS):
            for j, sj in enumerate(PAULIS):
                assert rep.T[i, j] == pytest.approx(pauli_trace(phi_plus(), si, sj), abs=1e-15)

    def test_maximally_mixed(self):
        rep = bloch_decompose(np.eye(4) / 4)
        assert np.allclose(rep.a, 0) and np.allclose(rep.b, 0) and np.allclose(rep.T, 0)

    def test_ket_01(self):
        M = np.zeros((4, 4))
        M[1, 1] = 1
        rep = bloch_decompose(M)
        np.testing.assert_allclose(rep.a, [0, 0, 1])
        np.testing.assert_allclose(rep.b, [0, 0, -1])
        np.testing.assert_allclose(rep.T, np.diag([0, 0, -1]))
        for i, si in enumerate(PAULIS):
            assert rep.a[i] == pytest.approx(pauli_trace(M, si, I2))
            assert rep.b[i] == pytest.approx(pauli_trace(M, I2, si))

    def test_round_trip_random_states(self, rng):
        for _ in range(50):
            G = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            M = G @ G.conj().T
            M /= np.trace(M)
            rep = bloch_decompose(M)
            np.testing.assert_allclose(rep.to_matrix(), M, atol=1e-10)
            assert np.linalg.norm(rep.a) <= 1 + 1e-9 and np.linalg.norm(rep.b) <= 1 + 1e-9
            assert np.abs(rep.T).max() <= 1 + 1e-9

    def test_bell_diagonal_round_trip(self, rng):
        for c in sample_tetrahedron(rng, 100):
            rep = bloch_decompose(bell_diagonal_from_c(c))
            np.testing.assert_allclose(rep.a, 0, atol=1e-10)
            np.testing.assert_allclose(rep.b, 0, atol=1e-10)
            np.testing.assert_allclose(rep.T, np.diag(c), atol=1e-10)


class TestCanonical:
    def test_already_diagonal(self):
        _, _, c = canonical_form(bell_diagonal_from_c((0.5, -0.3, 0.1)))
        np.testing.assert_allclose(np.abs(c.as_array()), [0.5, 0.3, 0.1], atol=1e-12)
        # proper rotations only: the sign of the product is preserved
        assert np.prod(c.as_array()) == pytest.approx(0.5 * -0.3 * 0.1)

    def test_local_unitary_invariance(self, rng):
        for c in sample_tetrahedron(rng, 100):
            tau = bell_diagonal_from_c(c)
            rho = local_unitary(tau, random_unitary(rng), random_unitary(rng))
            _, _, c2 = canonical_form(rho)
            np.testing.assert_allclose(np.sort(np.abs(c2.as_array())), np.sort(np.abs(c)), atol=1e-8)

    def test_general_state_invariance(self, rng):
        for _ in range(100):
            G = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            M = G @ G.conj().T
            M /= np.trace(M)
            a1, b1, c1 = canonical_form(M)
            a2, b2, c2 = canonical_form(local_unitary(M, random_unitary(rng), random_unitary(rng)))
            np.testing.assert_allclose(np.abs(c1.as_array()), np.abs(c2.as_array()), atol=1e-8)
            assert np.linalg.norm(a1) == pytest.approx(np.linalg.norm(a2), abs=1e-8)

    def test_rotated_state_is_diagonal(self, rng):
        G = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        M = G @ G.conj().T
        M /= np.trace(M)
        a, b, c = canonical_form(M)
        rep = bloch_decompose(M)
        U, s, Vt = np.linalg.svd(rep.T)
        assert np.abs(c.as_array()) == pytest.approx(s)
        assert np.linalg.norm(a) == pytest.approx(np.linalg.norm(rep.a))
        assert np.linalg.norm(b) == pytest.approx(np.linalg.norm(rep.b))

    def test_product_state_rank_one(self):
        plus = np.array([1, 1]) / np.sqrt(2)
        rho = product_state(plus, [1, 0])
        rep = bloch_decompose(rho)
        np.testing.assert_allclose(rep.T, np.outer(rep.a, rep.b), atol=1e-14)
        _, _, c = canonical_form(rho)
        np.testing.assert_allclose(np.abs(c.as_array()), [1, 0, 0], atol=1e-12)

    def test_sorted_descending(self, rng):
        for c in sample_tetrahedron(rng, 20):
            _, _, cv = canonical_form(bell_diagonal_from_c(c))
            mags = np.abs(cv.as_array())
            assert mags[0] >= mags[1] >= mags[2]


class TestWerner:
    def test_endpoints(self):
        np.testing.assert_allclose(werner(0).matrix, np.eye(4) / 4)
        np.testing.assert_allclose(werner(1).matrix, singlet())
        np.testing.assert_allclose(np.diag(bloch_decompose(werner(1)).T), [-1, -1, -1], atol=1e-14)

    def test_half(self):
        T = bloch_decompose(werner(0.5)).T
        np.testing.assert_allclose(T, np.diag([-0.5] * 3), atol=1e-14)
        assert pauli_trace(werner(0.5).matrix, PAULIS[1], PAULIS[1]) == pytest.approx(-0.5)

    @pytest.mark.parametrize("p", [-0.1, 1.2])
    def test_range(self, p):
        with pytest.raises(OutOfRange):
            werner(p)

    def test_canonical_vector(self):
        # (-p, -p, -p) up to a sign-pair flip (a local pi rotation)
        _, _, c = canonical_form(werner(0.3))
        np.testing.assert_allclose(np.abs(c.as_array()), [0.3] * 3, atol=1e-12)
        assert np.prod(c.as_array()) == pytest.approx(-0.027)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=3, max_size=3))
def test_tetrahedron_membership_property(c):
    cv = CorrelationVector(*c)
    if cv.is_bell_admissible(tol=0.0):
        rho = bell_diagonal_from_c(cv)
        assert np.linalg.eigvalsh(rho.matrix).min() >= -1e-9
        assert cv.norm**2 <= 3 + 1e-12


def test_sampler_deterministic_and_admissible():
    a = sample_tetrahedron(np.random.default_rng(0), 500)
    b = sample_tetrahedron(np.random.default_rng(0), 500)
    assert np.array_equal(a, b)
    assert all(CorrelationVector(*c).is_bell_admissible(0.0) for c in a)
    # uniform over the tetrahedron: the centroid sits at the origin
    np.testing.assert_allclose(a.mean(axis=0), 0, atol=0.06)


def test_product_pure_state_is_product(rng):
    rho = product_state(random_ket(rng), random_ket(rng))
    rep = bloch_decompose(rho)
    np.testing.assert_allclose(rep.T, np.outer(rep.a, rep.b), atol=1e-12)
