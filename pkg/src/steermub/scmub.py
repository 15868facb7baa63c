"""Simultaneous correlations in mutually unbiased bases (C1, C2, C3).

Numeric versions optimise Alice's basis/frame for any two-qubit state;
closed forms cover Bell-diagonal states only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._optim import maximize_kernel
from .errors import DomainError, NotPositiveSemidefinite
from .infotheory import binary_entropy, holevo
from .mub import basis_from_direction, direction_from_sphere, frame_from_angles
from .qstate import CorrelationVector, bloch_decompose


@dataclass(frozen=True)
class ScmubReport:
    value: float
    optimizing_frame: tuple
    per_basis_holevo: tuple


def _bloch_arrays(rho):
    rep = bloch_decompose(rho)
    return (
        np.ascontiguousarray(rep.a),
        np.ascontiguousarray(rep.b),
        np.ascontiguousarray(rep.T),
    )


def c1_numeric(rho, restarts: int = 32, seed: int = 0) -> ScmubReport:
    a, b, T = _bloch_arrays(rho)
    res = maximize_kernel("sphere", a, b, T, 1, restarts, seed)
    n = direction_from_sphere(*res.x)
    chi = holevo(rho, basis_from_direction(n))
    return ScmubReport(chi, tuple(n), (chi,))


def _frame_measure(rho, m, restarts, seed):
    a, b, T = _bloch_arrays(rho)
    res = maximize_kernel("frame", a, b, T, m, restarts, seed)
    triad = frame_from_angles(*res.x)
    chis = tuple(holevo(rho, basis) for basis in triad.bases[:m])
    return ScmubReport(min(chis), tuple(float(t) for t in res.x), chis)


def c2_numeric(rho, restarts: int = 64, seed: int = 0) -> ScmubReport:
    """Max over MUB pairs of the smaller Holevo quantity."""
    return _frame_measure(rho, 2, restarts, seed)


def c3_numeric(rho, restarts: int = 64, seed: int = 0) -> ScmubReport:
    """Max over MUB triads of the smallest Holevo quantity."""
    return _frame_measure(rho, 3, restarts, seed)


def _admissible(c) -> CorrelationVector:
    cv = CorrelationVector.from_any(c)
    lam = cv.tetrahedron_eigenvalues().min()
    if lam < -1e-9:
        raise NotPositiveSemidefinite(-lam, "correlation vector outside the Bell-diagonal tetrahedron")
    return cv


def c2_closed(c) -> float:
    cv = _admissible(c)
    arg = cv.norm**2 - cv.c_min**2
    if arg < -1e-12:
        raise DomainError(f"negative radicand {arg}")
    r = np.sqrt(max(arg, 0.0) / 2)
    return 1.0 - binary_entropy(min((1 + r) / 2, 1.0))


def c3_closed(c) -> float:
    cv = _admissible(c)
    return 1.0 - binary_entropy(min((1 + cv.norm / np.sqrt(3)) / 2, 1.0))
