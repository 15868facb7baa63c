"""Entropies and the Holevo quantity of Bob's conditional ensemble.

All logarithms are base 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomain
from .qstate import DensityMatrix, as_density_matrix, validate_density_matrix

CLAMP_TOL = 1e-10
P_TINY = 1e-12


@dataclass(frozen=True)
class ConditionalEnsemble:
    probabilities: tuple
    states: tuple  # DensityMatrix per outcome

    def __iter__(self):
        return iter(zip(self.probabilities, self.states))

    def average_state(self) -> np.ndarray:
        return sum(p * s.matrix for p, s in self)


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0."""
    x = float(x)
    if x < -1e-12 or x > 1 + 1e-12 or not np.isfinite(x):
        raise OutOfDomain(f"binary entropy argument {x} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1 - x) * np.log2(1 - x))


def von_neumann_entropy(rho) -> float:
    lam = as_density_matrix(rho).eigenvalues()
    lam = np.where((lam < 0) & (lam >= -CLAMP_TOL), 0.0, lam)
    lam = np.clip(lam, 0.0, 1.0)
    nz = lam[lam > 0]
    return float(-np.sum(nz * np.log2(nz))) + 0.0


def conditional_ensemble(rho_ab, basis) -> ConditionalEnsemble:
    """Bob's states after Alice measures in ``basis``.

    An outcome with probability below 1e-12 is reported with the maximally
    mixed state.
    """
    M = as_density_matrix(rho_ab).matrix
    probs, states = [], []
    for proj in basis.projectors:
        # <a_i| rho |a_i> traced over Alice, via (Pi x I) rho
        block = np.kron(proj, np.eye(2)) @ M
        unnorm = block.reshape(2, 2, 2, 2).trace(axis1=0, axis2=2)
        p = float(np.trace(unnorm).real)
        if p < P_TINY:
            states.append(validate_density_matrix(np.eye(2) / 2))
            probs.append(max(p, 0.0))
            continue
        cond = unnorm / p
        states.append(validate_density_matrix((cond + cond.conj().T) / 2))
        probs.append(p)
    return ConditionalEnsemble(tuple(probs), tuple(states))


def holevo_of_ensemble(ens: ConditionalEnsemble) -> float:
    avg = validate_density_matrix(ens.average_state())
    chi = von_neumann_entropy(avg)
    for p, state in ens:
        if p >= P_TINY:
            chi -= p * von_neumann_entropy(state)
    return max(chi, 0.0)


def holevo(rho_ab, basis) -> float:
    """Holevo quantity of Bob's ensemble for Alice's projective ``basis``."""
    return holevo_of_ensemble(conditional_ensemble(rho_ab, basis))


def reduced_state_b(rho_ab) -> DensityMatrix:
    M = as_density_matrix(rho_ab).matrix
    return validate_density_matrix(M.reshape(2, 2, 2, 2).trace(axis1=0, axis2=2))
