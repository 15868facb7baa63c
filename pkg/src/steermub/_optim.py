"""Seeded multi-start Nelder-Mead maximisation shared by the numeric measures."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from ._kernels_py import nelder_mead
from .errors import ConvergenceFailure

SPREAD_TOL = 1e-5
XATOL = 1e-10
FATOL = 1e-12
MAXITER = 4000


@dataclass
class MultiStartResult:
    x: np.ndarray
    value: float
    values: np.ndarray  # best value reached by each restart, after polishing


def _starts(dim, restarts, seed):
    rng = np.random.default_rng(seed)
    return np.ascontiguousarray(rng.uniform(0.0, 2 * np.pi, size=(restarts, dim)))


def _finish(xs, vals, check):
    vals = np.asarray(vals, dtype=float)
    best = int(np.argmax(vals))
    if check and len(vals) > 1:
        close = np.count_nonzero(vals >= vals[best] - SPREAD_TOL)
        if close < 2:
            raise ConvergenceFailure(
                f"best value {vals[best]:.10g} reached by a single restart", vals[best], vals
            )
    return MultiStartResult(np.asarray(xs[best], dtype=float), float(vals[best]), vals)


def maximize_kernel(kind, a, b, T, m, restarts, seed, check=True):
    """Multi-start maximisation of a built-in objective ("sphere", "frame", "cjwr").

    Restarts are uniform angle vectors drawn from ``seed``. Each run is
    polished by a second simplex from its end point, which unsticks
    simplices collapsed on a kink of a min-of-Holevo objective. Raises
    ConvergenceFailure when no second restart lands within 1e-5 of the best.
    """
    dim = 2 if kind == "sphere" else 3
    xs, vals = kernels.multistart_maximize(
        kind, _starts(dim, restarts, seed), a, b, T, m, XATOL, FATOL, MAXITER
    )
    return _finish(xs, vals, check)


def maximize(func, dim, restarts, seed, check=True):
    """Same protocol for an arbitrary Python callable (pure-Python simplex)."""
    xs, vals = [], []
    for x0 in _starts(dim, restarts, seed):
        x, _ = nelder_mead(func, list(x0), XATOL, FATOL, MAXITER)
        x, v = nelder_mead(func, x, XATOL, FATOL, MAXITER)
        xs.append(x)
        vals.append(v)
    return _finish(xs, vals, check)
