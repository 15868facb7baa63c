"""Sweeps over Bell-diagonal states checking the steering/SCMUB relations
and their monotonicity."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import MonotonicityViolation, OutOfDomain
from .infotheory import binary_entropy
from .qstate import CorrelationVector, sample_tetrahedron
from .scmub import c2_closed, c3_closed
from .steering import f2_closed, f3_closed, steering_measure

IDENTITY_TOL = 1e-12
FD_TOL = 1e-12

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)


@dataclass(frozen=True)
class SweepRecord:
    c1: float
    c2: float
    c3: float
    F2: float
    F3: float
    S2: float
    S3: float
    C2: float
    C3: float
    residual14: float
    residual17: float
    C2_numeric: Optional[float] = None
    C3_numeric: Optional[float] = None

    CSV_FIELDS = ("c1", "c2", "c3", "F2", "F3", "S2", "S3", "C2", "C3",
                  "residual14", "residual17")

    def as_dict(self):
        return asdict(self)


def c2_from_f2(F2: float) -> float:
    """C2 expressed through the two-setting CJWR maximum."""
    if not -1e-12 <= F2 <= SQRT2 + 1e-12:
        raise OutOfDomain(f"F2={F2} outside [0, sqrt 2]")
    return 1.0 - binary_entropy(min(max((1 + F2 / SQRT2) / 2, 0.0), 1.0))


def c3_from_f3(F3: float) -> float:
    if not -1e-12 <= F3 <= SQRT3 + 1e-12:
        raise OutOfDomain(f"F3={F3} outside [0, sqrt 3]")
    return 1.0 - binary_entropy(min(max((1 + F3 / SQRT3) / 2, 0.0), 1.0))


def relation_residuals(c) -> SweepRecord:
    cv = CorrelationVector.from_any(c)
    F2, F3 = f2_closed(cv), f3_closed(cv)
    C2, C3 = c2_closed(cv), c3_closed(cv)
    return SweepRecord(
        cv.c1, cv.c2, cv.c3,
        F2, F3,
        steering_measure(F2, 2), steering_measure(F3, 3),
        C2, C3,
        abs(C2 - c2_from_f2(F2)),
        abs(C3 - c3_from_f3(F3)),
    )


@dataclass
class MonotonicityReport:
    grid_size: int
    min_forward_diff_2: float
    min_forward_diff_3: float
    steerable_pairs_2: int
    steerable_pairs_3: int
    order_violations_2: int
    order_violations_3: int

    @property
    def passed(self) -> bool:
        return (
            self.min_forward_diff_2 >= -FD_TOL
            and self.min_forward_diff_3 >= -FD_TOL
            and self.order_violations_2 == 0
            and self.order_violations_3 == 0
        )


def _order_violations(S, C, F):
    """Count steerable pairs whose S ordering disagrees with C ordering."""
    mask = F > 1
    S, C, F = S[mask], C[mask], F[mask]
    dS = np.sign(S[:, None] - S[None, :])
    dC = np.sign(C[:, None] - C[None, :])
    # exact ties in F leave both orderings undefined
    distinct = np.abs(F[:, None] - F[None, :]) > 1e-12
    iu = np.triu_indices(len(S), 1)
    bad = (dS != dC) & distinct
    return int(distinct[iu].sum()), int(bad[iu].sum())


def monotonicity_scan(grid_size: int = 1000, samples=None, seed: int = 0,
                      raise_on_failure: bool = True) -> MonotonicityReport:
    """Forward differences of C(F) on uniform grids plus S-vs-C order checks.

    ``samples`` is an (N, 3) array of Bell-diagonal correlation vectors; by
    default 1000 are drawn from ``seed``.
    """
    if grid_size < 10:
        raise ValueError("grid_size must be at least 10")
    g2 = np.linspace(0.0, SQRT2, grid_size)
    g3 = np.linspace(0.0, SQRT3, grid_size)
    v2 = np.array([c2_from_f2(f) for f in g2])
    v3 = np.array([c3_from_f3(f) for f in g3])
    d2, d3 = np.diff(v2), np.diff(v3)

    if samples is None:
        samples = sample_tetrahedron(np.random.default_rng(seed), 1000)
    recs = [relation_residuals(c) for c in samples]
    F2 = np.array([r.F2 for r in recs])
    F3 = np.array([r.F3 for r in recs])
    p2, bad2 = _order_violations(np.array([r.S2 for r in recs]), np.array([r.C2 for r in recs]), F2)
    p3, bad3 = _order_violations(np.array([r.S3 for r in recs]), np.array([r.C3 for r in recs]), F3)

    report = MonotonicityReport(grid_size, float(d2.min()), float(d3.min()), p2, p3, bad2, bad3)
    if raise_on_failure and not report.passed:
        pts = [("F2", g2[i]) for i in np.flatnonzero(d2 < -FD_TOL)]
        pts += [("F3", g3[i]) for i in np.flatnonzero(d3 < -FD_TOL)]
        raise MonotonicityViolation(
            f"monotonicity failed: {len(pts)} grid decreases, "
            f"{bad2} + {bad3} steerable order violations",
            pts,
        )
    return report


def s_normalization_ok(samples) -> bool:
    """S_n stays in [0, 1] and reaches 1 at the Bell state."""
    bell = (1.0, -1.0, 1.0)
    if abs(steering_measure(f2_closed(bell), 2) - 1) > IDENTITY_TOL:
        return False
    if abs(steering_measure(f3_closed(bell), 3) - 1) > IDENTITY_TOL:
        return False
    for c in samples:
        for n, F in ((2, f2_closed(c)), (3, f3_closed(c))):
            S = steering_measure(F, n)
            if not 0.0 <= S <= 1.0 + IDENTITY_TOL:
                return False
    return True


@dataclass
class VerifySummary:
    samples: int
    max_residual14: float
    max_residual17: float
    monotonicity: Optional[MonotonicityReport]
    s_normalized: bool
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return (
            self.error is None
            and self.max_residual14 <= IDENTITY_TOL
            and self.max_residual17 <= IDENTITY_TOL
            and self.monotonicity is not None
            and self.monotonicity.passed
            and self.s_normalized
        )


def run_verification(samples: int = 1000, grid_size: int = 1000, seed: int = 0) -> VerifySummary:
    cs = sample_tetrahedron(np.random.default_rng(seed), samples)
    recs = [relation_residuals(c) for c in cs]
    r14 = max(r.residual14 for r in recs)
    r17 = max(r.residual17 for r in recs)
    err = None
    try:
        mono = monotonicity_scan(grid_size, samples=cs)
    except MonotonicityViolation as exc:
        mono, err = monotonicity_scan(grid_size, samples=cs, raise_on_failure=False), str(exc)
    return VerifySummary(samples, r14, r17, mono, s_normalization_ok(cs), err)


def werner_threshold(n: int, step: float = 0.001) -> float:
    """Smallest p on a ``step`` grid with S_n(werner(p)) > 0."""
    for i in range(int(round(1 / step)) + 1):
        p = i * step
        c = (-p, -p, -p)
        F = f2_closed(c) if n == 2 else f3_closed(c)
        if steering_measure(F, n) > 0:
            return p
    return float("nan")
