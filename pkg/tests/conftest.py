import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rankin import MeasureSpace, VectorFamily, counting_family  # noqa: E402

DEFAULT_SEED = 20240601


def pytest_addoption(parser):
    parser.addoption("--rankin-seed", type=int, default=DEFAULT_SEED,
                     help="seed for the randomized property suites")


@pytest.fixture
def seed(request):
    return request.config.getoption("--rankin-seed")


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)


@pytest.fixture
def triple():
    """Three plane vectors at 0, 120 and 240 degrees."""
    angles = 2 * math.pi * np.arange(3) / 3
    return counting_family(np.column_stack((np.cos(angles), np.sin(angles))))


@pytest.fixture
def antipodal():
    return counting_family([[1.0, 0.0], [-1.0, 0.0]])


@pytest.fixture
def basis3():
    return counting_family(np.eye(3))


@pytest.fixture
def weighted_112():
    """Weights (1, 1, 2) carrying e1, e1, e2."""
    return VectorFamily(MeasureSpace([1.0, 1.0, 2.0]), [[1, 0], [1, 0], [0, 1]])


ACCEPTANCE_LINES = []


def record_criterion(label, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
