"""Free evolution under ``H = omega * N_super``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.linalg import expm

from .entanglement import _require_normalized, concurrence_gram
from .superstate import SuperOperator, SuperState, super_number_operator
from .tolerances import CMP_TOL


@dataclass(frozen=True)
class EvolutionParams:
    omega: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.omega) and math.isfinite(self.t)):
            raise ValueError("omega and t must be finite")

    @property
    def angle(self) -> float:
        return self.omega * self.t


def _phases(dim: int, angle: float) -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(dim)
    return np.exp(-1j * angle * n), np.exp(-1j * angle * (n + 1))


def evolve(state: SuperState, params: EvolutionParams) -> SuperState:
    """Multiply level ``n`` by ``e^{-i w t n}`` on the fermion-0 branch and by
    ``e^{-i w t (n+1)}`` on the fermion-1 branch."""
    _require_normalized(state)
    f0, f1 = _phases(state.dim, params.angle)
    return SuperState(f0 * state.psi0, f1 * state.psi1)


def evolution_operator(params: EvolutionParams, dim: int) -> SuperOperator:
    """Block-diagonal ``diag(e^{-i w t N}, e^{-i w t (N+1)})``."""
    f0, f1 = _phases(dim, params.angle)
    return SuperOperator.diagonal(np.diag(f0), np.diag(f1))


def literal_exponent_operator(params: EvolutionParams, dim: int) -> SuperOperator:
    """``exp(-i omega H t)`` with ``H = omega N_super`` taken at face value.

    This squares omega and differs from :func:`evolution_operator` unless
    ``omega`` is 0 or 1.
    """
    h = params.omega * super_number_operator(dim).matrix
    return _from_full(expm(-1j * params.omega * h * params.t))


def _from_full(m: np.ndarray) -> SuperOperator:
    d = m.shape[0] // 2
    return SuperOperator(m[:d, :d], m[:d, d:], m[d:, :d], m[d:, d:])


def time_dependent_gram(state: SuperState, omega: float, t: float) -> np.ndarray:
    """Gram matrix of the branches after evolving each by ``e^{-i w t N}``,
    with the fermion phase ``e^{-+i w t}`` on the off-diagonal entries."""
    f0, _ = _phases(state.dim, omega * t)
    p0, p1 = f0 * state.psi0, f0 * state.psi1
    ph = np.exp(-1j * omega * t)
    return np.array([
        [np.vdot(p0, p0), np.vdot(p0, p1) * ph],
        [np.vdot(p1, p0) * np.conj(ph), np.vdot(p1, p1)],
    ])


def entanglement_constancy(
    state: SuperState, omega: float, times: Iterable[float], tol: float = CMP_TOL
) -> dict:
    base = concurrence_gram(state)
    times = list(times)
    values = [concurrence_gram(evolve(state, EvolutionParams(omega, t))) for t in times]
    deviation = max((abs(v - base) for v in values), default=0.0)
    return {
        "concurrence": base,
        "times": times,
        "concurrences": values,
        "max_deviation": deviation,
        "tolerance": tol,
        "passed": deviation <= tol,
    }
