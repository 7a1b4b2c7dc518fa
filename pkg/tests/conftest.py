import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, gammaln

from supercoherent.superstate import SuperState


def laguerre_element(m: int, n: int, alpha: complex) -> complex:
    """<m|D(alpha)|n> from the associated-Laguerre closed form."""
    x = abs(alpha) ** 2
    if m >= n:
        pref = math.exp(0.5 * (gammaln(n + 1) - gammaln(m + 1))) * alpha ** (m - n)
        return pref * math.exp(-x / 2) * eval_genlaguerre(n, m - n, x)
    pref = math.exp(0.5 * (gammaln(m + 1) - gammaln(n + 1))) * (-np.conj(alpha)) ** (n - m)
    return pref * math.exp(-x / 2) * eval_genlaguerre(m, n - m, x)


def random_state(rng: np.random.Generator, dim: int, levels: int = 12) -> SuperState:
    k = min(levels, dim)
    v = np.zeros((2, dim), dtype=complex)
    v[:, :k] = rng.normal(size=(2, k)) + 1j * rng.normal(size=(2, k))
    v /= np.linalg.norm(v)
    return SuperState(v[0], v[1])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
