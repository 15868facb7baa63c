import numpy as np
import pytest
from scipy.stats import unitary_group

from steermub.qstate import PAULIS


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_unitary(rng):
    return unitary_group.rvs(2, random_state=rng)


def random_ket(rng, dim=2):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def pauli_trace(M, A, B):
    """Tr(M (A x B)) computed entry by entry, no kron."""
    total = 0j
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    total += M[2 * i + j, 2 * k + l] * A[k, i] * B[l, j]
    return total.real


I2 = np.eye(2)
SX, SY, SZ = PAULIS


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {name}: {detail}")
