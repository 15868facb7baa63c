"""CJWR linear steering functional and the normalised steering measures S_2, S_3.

Bob's n measurements are mutually orthogonal Pauli-type observables, as
in the CJWR construction; Alice's are arbitrary unit-vector observables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._optim import maximize_kernel
from .mub import rotation_zyz
from .qstate import CorrelationVector, bloch_decompose

F_MAX = {2: np.sqrt(2.0), 3: np.sqrt(3.0)}
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementSettings:
    n: int
    alice_dirs: np.ndarray
    bob_dirs: np.ndarray

    def __post_init__(self):
        if self.n not in (2, 3):
            raise ValueError(f"setting count must be 2 or 3, got {self.n}")
        for name in ("alice_dirs", "bob_dirs"):
            d = np.asarray(getattr(self, name), dtype=float)
            if d.shape != (self.n, 3):
                raise ValueError(f"{name} must have shape ({self.n}, 3)")
            if np.max(np.abs(np.linalg.norm(d, axis=1) - 1)) > UNIT_TOL:
                raise ValueError(f"{name} must be unit vectors")
            object.__setattr__(self, name, d)


@dataclass(frozen=True)
class SteeringReport:
    F_value: float
    S_value: float
    n: int
    optimal_settings: Optional[MeasurementSettings] = None


def _check_n(n):
    if n not in (2, 3):
        raise ValueError(f"setting count must be 2 or 3, got {n}")


def cjwr_value(rho, settings: MeasurementSettings) -> float:
    """(1/sqrt n) |sum_k <A_k x B_k>| for the given settings."""
    T = bloch_decompose(rho).T
    s = sum(settings.alice_dirs[k] @ T @ settings.bob_dirs[k] for k in range(settings.n))
    return float(abs(s) / np.sqrt(settings.n))


def cjwr_maximize(rho, n: int, restarts: int = 32, seed: int = 0) -> SteeringReport:
    """Numerical maximum of the CJWR functional over measurement settings.

    Bob's orthonormal directions are searched over ZYZ frames; for each
    frame Alice's best directions follow from Cauchy-Schwarz (a_k parallel
    to T b_k), so the search space is three angles.
    """
    _check_n(n)
    T = np.ascontiguousarray(bloch_decompose(rho).T)
    zeros = np.zeros(3)
    res = maximize_kernel("cjwr", zeros, zeros, T, n, restarts, seed)
    bob = rotation_zyz(*res.x)[:, :n].T
    alice = []
    for k in range(n):
        u = T @ bob[k]
        norm = np.linalg.norm(u)
        alice.append(u / norm if norm > 1e-15 else bob[k])
    settings = MeasurementSettings(n, np.array(alice), bob)
    F = cjwr_value(rho, settings)
    return SteeringReport(F, steering_measure(F, n), n, settings)


def f2_closed(c) -> float:
    cv = CorrelationVector.from_any(c)
    return float(np.sqrt(max(cv.norm**2 - cv.c_min**2, 0.0)))


def f3_closed(c) -> float:
    return CorrelationVector.from_any(c).norm


def steering_measure(F: float, n: int) -> float:
    """max{0, (F - 1) / (F_max - 1)}."""
    _check_n(n)
    if F < 0:
        raise ValueError(f"F must be non-negative, got {F}")
    return float(max(0.0, (F - 1.0) / (F_MAX[n] - 1.0)))


def steering_closed(c, n: int) -> SteeringReport:
    _check_n(n)
    F = f2_closed(c) if n == 2 else f3_closed(c)
    return SteeringReport(F, steering_measure(F, n), n)
