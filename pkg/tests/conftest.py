import pytest

from binomdet.combinatorics import Partition, TriangularSequence
from binomdet.lattice import PointConfiguration

LAM = Partition((3, 3, 3))
MU = Partition((2, 2, 1))


@pytest.fixture
def worked_config():
    """The lambda=(3,3,3), mu=(2,2,1) point configuration for a given (i, j, k)."""
    def make(i, j, k):
        return PointConfiguration.from_partitions(LAM, MU, TriangularSequence.from_ijk(i, j, k))
    return make


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(n, ok, detail)."""
    def record(n: int, ok: bool, detail: str):
        ACCEPTANCE[n] = (ok, detail)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
