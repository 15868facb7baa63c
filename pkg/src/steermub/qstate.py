"""Two-qubit density matrices: validation, Bloch decomposition and the
Bell-diagonal family.

Matrices live in the computational product basis |00>, |01>, |10>, |11>
with Alice as the first tensor factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotHermitian, NotPositiveSemidefinite, OutOfRange, TraceNotOne

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

# Bell-diagonal vertices of the admissible tetrahedron
TETRAHEDRON_VERTICES = np.array(
    [[1, -1, 1], [-1, 1, 1], [1, 1, -1], [-1, -1, -1]], dtype=float
)


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix (qubit or two-qubit).

    Build instances through :func:`validate_density_matrix`; the stored
    array is read-only.
    """

    matrix: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)


@dataclass(frozen=True)
class BlochRepresentation:
    a: np.ndarray
    b: np.ndarray
    T: np.ndarray

    def to_matrix(self) -> np.ndarray:
        return assemble(self.a, self.b, self.T)


@dataclass(frozen=True)
class CorrelationVector:
    """Diagonal correlations (c1, c2, c3) of a canonical two-qubit state."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            v = float(getattr(self, name))
            if not np.isfinite(v) or abs(v) > 1 + 1e-12:
                raise OutOfRange(f"{name}={v} outside [-1, 1]")
            object.__setattr__(self, name, v)

    @classmethod
    def from_any(cls, c) -> CorrelationVector:
        if isinstance(c, cls):
            return c
        arr = np.asarray(c, dtype=float).ravel()
        if arr.shape != (3,):
            raise OutOfRange(f"correlation vector needs 3 components, got {arr.shape}")
        return cls(*arr)

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3])

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.c1**2 + self.c2**2 + self.c3**2))

    @property
    def c_min(self) -> float:
        return min(abs(self.c1), abs(self.c2), abs(self.c3))

    def tetrahedron_eigenvalues(self) -> np.ndarray:
        """Eigenvalues of the Bell-diagonal state with these correlations."""
        c1, c2, c3 = self.c1, self.c2, self.c3
        return np.array(
            [
                (1 - c1 - c2 - c3) / 4,
                (1 - c1 + c2 + c3) / 4,
                (1 + c1 - c2 + c3) / 4,
                (1 + c1 + c2 - c3) / 4,
            ]
        )

    def is_bell_admissible(self, tol: float = PSD_TOL) -> bool:
        return bool(self.tetrahedron_eigenvalues().min() >= -tol)


def validate_density_matrix(M) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity; return a frozen copy.

    Accepts 2x2 and 4x4 complex matrices.

    Raises
    ------
    NotHermitian, TraceNotOne, NotPositiveSemidefinite
    """
    if isinstance(M, DensityMatrix):
        return M
    arr = np.array(M, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] not in (2, 4):
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {arr.shape}")
    herm = float(np.max(np.abs(arr - arr.conj().T)))
    if herm > HERMITIAN_TOL:
        raise NotHermitian(herm)
    tr = abs(np.trace(arr) - 1)
    if tr > TRACE_TOL:
        raise TraceNotOne(tr)
    arr = (arr + arr.conj().T) / 2
    lam_min = float(np.linalg.eigvalsh(arr)[0])
    if lam_min < -PSD_TOL:
        raise NotPositiveSemidefinite(-lam_min, f"smallest eigenvalue {lam_min:.6g}")
    arr.setflags(write=False)
    return DensityMatrix(arr)


def as_density_matrix(rho) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else validate_density_matrix(rho)


def assemble(a, b, T) -> np.ndarray:
    """Inverse of :func:`bloch_decompose` (no validation)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    T = np.asarray(T, dtype=float)
    M = np.kron(I2, I2).astype(complex)
    for i in range(3):
        M += a[i] * np.kron(PAULIS[i], I2)
        M += b[i] * np.kron(I2, PAULIS[i])
        for j in range(3):
            M += T[i, j] * np.kron(PAULIS[i], PAULIS[j])
    return M / 4


def bell_diagonal_from_c(c) -> DensityMatrix:
    """Bell-diagonal state 1/4 (I + sum_i c_i s_i x s_i)."""
    cv = CorrelationVector.from_any(c)
    return validate_density_matrix(assemble(np.zeros(3), np.zeros(3), np.diag(cv.as_array())))


def bloch_decompose(rho) -> BlochRepresentation:
    M = as_density_matrix(rho).matrix
    if M.shape != (4, 4):
        raise ValueError("bloch_decompose needs a two-qubit state")
    a = np.array([np.trace(M @ np.kron(s, I2)).real for s in PAULIS])
    b = np.array([np.trace(M @ np.kron(I2, s)).real for s in PAULIS])
    T = np.array([[np.trace(M @ np.kron(si, sj)).real for sj in PAULIS] for si in PAULIS])
    return BlochRepresentation(a, b, T)


def canonical_form(rho):
    """Rotate locally so the correlation matrix becomes diagonal.

    Returns ``(a', b', c)``. Singular values come out sorted by magnitude
    (descending); an improper rotation is absorbed by flipping the sign of
    the smallest component.
    """
    rep = bloch_decompose(rho)
    U, s, Vt = np.linalg.svd(rep.T)
    V = Vt.T
    s = s.copy()
    if np.linalg.det(U) < 0:
        U[:, 2] *= -1
        s[2] *= -1
    if np.linalg.det(V) < 0:
        V[:, 2] *= -1
        s[2] *= -1
    a_rot = U.T @ rep.a
    b_rot = V.T @ rep.b
    return a_rot, b_rot, CorrelationVector(*np.clip(s, -1.0, 1.0))


def is_bell_diagonal(rho, tol: float = 1e-9) -> bool:
    rep = bloch_decompose(rho)
    off = rep.T - np.diag(np.diag(rep.T))
    return bool(
        np.max(np.abs(rep.a)) <= tol
        and np.max(np.abs(rep.b)) <= tol
        and np.max(np.abs(off)) <= tol
    )


def singlet() -> np.ndarray:
    psi = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
    return np.outer(psi, psi.conj())


def phi_plus() -> np.ndarray:
    psi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return np.outer(psi, psi.conj())


def werner(p: float) -> DensityMatrix:
    """p |psi-><psi-| + (1-p) I/4; correlation vector (-p, -p, -p)."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"Werner weight p={p} outside [0, 1]")
    return validate_density_matrix(p * singlet() + (1 - p) * np.eye(4) / 4)


def product_state(psi_a, psi_b) -> DensityMatrix:
    psi = np.kron(np.asarray(psi_a, dtype=complex), np.asarray(psi_b, dtype=complex))
    psi = psi / np.linalg.norm(psi)
    return validate_density_matrix(np.outer(psi, psi.conj()))


def local_unitary(rho, U_A, U_B) -> DensityMatrix:
    U = np.kron(U_A, U_B)
    M = U @ as_density_matrix(rho).matrix @ U.conj().T
    return validate_density_matrix((M + M.conj().T) / 2)


def sample_tetrahedron(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform draws of Bell-diagonal correlation vectors, shape (n, 3).

    Rejection sampling from [-1, 1]^3 against the four eigenvalue
    inequalities; the output order depends only on ``rng``.
    """
    out = np.empty((0, 3))
    while len(out) < n:
        cand = rng.uniform(-1.0, 1.0, size=(max(2 * (n - len(out)), 16), 3))
        c1, c2, c3 = cand.T
        ok = (
            (1 - c1 - c2 - c3 >= 0)
            & (1 - c1 + c2 + c3 >= 0)
            & (1 + c1 - c2 + c3 >= 0)
            & (1 + c1 + c2 - c3 >= 0)
        )
        out = np.vstack([out, cand[ok]])
    return out[:n]
