"""Qubit measurement bases and mutually unbiased pairs/triads.

A qubit basis is fully described by a Bloch direction; two bases are
mutually unbiased exactly when their directions are orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotUnbiased, ZeroVector
from .qstate import I2, PAULIS

UNIT_TOL = 1e-12
ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class QubitBasis:
    direction: np.ndarray

    def __post_init__(self):
        n = np.asarray(self.direction, dtype=float)
        if abs(np.linalg.norm(n) - 1) > UNIT_TOL:
            raise ValueError("basis direction must be a unit vector; use basis_from_direction")
        n = n.copy()
        n.setflags(write=False)
        object.__setattr__(self, "direction", n)

    @property
    def projectors(self):
        """(Pi+, Pi-) = (I +/- n.sigma) / 2."""
        ns = sum(self.direction[i] * PAULIS[i] for i in range(3))
        return (I2 + ns) / 2, (I2 - ns) / 2

    def kets(self):
        """Eigenvectors of n.sigma for eigenvalues +1 and -1."""
        ns = sum(self.direction[i] * PAULIS[i] for i in range(3))
        w, v = np.linalg.eigh(ns)
        return v[:, 1], v[:, 0]


def _check_orthogonal(bases):
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            d = abs(float(bases[i].direction @ bases[j].direction))
            if d > ORTHO_TOL:
                raise NotUnbiased(f"bases {i} and {j} overlap: n_i.n_j = {d:.3e}")


@dataclass(frozen=True)
class MubPair:
    first: QubitBasis
    second: QubitBasis

    def __post_init__(self):
        _check_orthogonal(self.bases)

    @property
    def bases(self):
        return (self.first, self.second)


@dataclass(frozen=True)
class MubTriad:
    first: QubitBasis
    second: QubitBasis
    third: QubitBasis

    def __post_init__(self):
        _check_orthogonal(self.bases)

    @property
    def bases(self):
        return (self.first, self.second, self.third)

    def pair(self) -> MubPair:
        return MubPair(self.first, self.second)


def basis_from_direction(n) -> QubitBasis:
    n = np.asarray(n, dtype=float)
    norm = np.linalg.norm(n)
    if norm == 0 or not np.isfinite(norm):
        raise ZeroVector("basis direction has zero length")
    return QubitBasis(n / norm)


def unbiasedness_overlap(b1: QubitBasis, b2: QubitBasis) -> np.ndarray:
    """Matrix of |<a_i|b_j>| over the kets of both bases."""
    k1, k2 = b1.kets(), b2.kets()
    return np.array([[abs(np.vdot(u, v)) for v in k2] for u in k1])


def is_mutually_unbiased(b1: QubitBasis, b2: QubitBasis, tol: float = 1e-10) -> bool:
    return bool(np.all(np.abs(unbiasedness_overlap(b1, b2) - 1 / np.sqrt(2)) <= tol))


def rotation_zyz(alpha: float, beta: float, gamma: float) -> np.ndarray:
    def rz(t):
        c, s = np.cos(t), np.sin(t)
        return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])

    c, s = np.cos(beta), np.sin(beta)
    ry = np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
    return rz(alpha) @ ry @ rz(gamma)


def frame_from_angles(alpha: float, beta: float, gamma: float) -> MubTriad:
    """The rotated (x, y, z) frame R_z(alpha) R_y(beta) R_z(gamma) as a triad."""
    R = rotation_zyz(alpha, beta, gamma)
    return MubTriad(*(QubitBasis(R[:, k]) for k in range(3)))


def direction_from_sphere(theta: float, phi: float) -> np.ndarray:
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
