"""Quantum steering and simultaneous MUB-correlation measures for two-qubit states."""

from .errors import (
    ConvergenceFailure,
    DomainError,
    MonotonicityViolation,
    NotHermitian,
    NotPositiveSemidefinite,
    OutOfDomain,
    OutOfRange,
    ParseError,
    TraceNotOne,
    ZeroVector,
)
from .infotheory import binary_entropy, conditional_ensemble, holevo, von_neumann_entropy
from .kernels import BACKEND
from .mub import basis_from_direction, frame_from_angles, unbiasedness_overlap
from .qstate import (
    CorrelationVector,
    DensityMatrix,
    bell_diagonal_from_c,
    bloch_decompose,
    canonical_form,
    validate_density_matrix,
    werner,
)
from .scmub import c1_numeric, c2_closed, c2_numeric, c3_closed, c3_numeric
from .steering import (
    MeasurementSettings,
    cjwr_maximize,
    cjwr_value,
    f2_closed,
    f3_closed,
    steering_measure,
)

__version__ = "0.1.0"
