import numpy as np
import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20170614)


def random_complex(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_alphabet(rng, m, min_sep=0.1):
    """``m`` points in the unit disk, pairwise at least ``min_sep`` apart."""
    values = []
    while len(values) < m:
        r = np.sqrt(rng.uniform())
        z = r * np.exp(2j * np.pi * rng.uniform())
        if all(abs(z - v) >= min_sep for v in values):
            values.append(complex(z))
    return tuple(values)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
