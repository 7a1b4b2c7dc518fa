"""Fibonacci structure of the uncertainty sequence at phi = pi/4."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np

from .errors import FibonacciOverflow, InvalidIndex
from .superstate import BellLabel, SuperState, super_coherent

PHI = (1 + math.sqrt(5)) / 2
GOLDEN_CONCURRENCE = PHI ** -1.5
GOLDEN_PHASE = math.pi / 4
MAX_N = 90  # public bound; sequences read up to F_{MAX_N + 2} < 2**63


@dataclass(frozen=True)
class FibSequence:
    """``values[k]`` holds ``F_{k-1}``, so index 0 is the extended ``F_{-1} = 1``."""

    values: tuple[int, ...]
    max_n: int

    def __getitem__(self, n: int) -> int:
        if not -1 <= n <= self.max_n:
            raise InvalidIndex(f"F_{n} outside stored range [-1, {self.max_n}]")
        return self.values[n + 1]

    def ratio(self, n: int) -> Fraction:
        """``F_{n+1} / F_n``."""
        return Fraction(self[n + 1], self[n])


@dataclass(frozen=True)
class GoldenRecord:
    n: int
    c_n: float
    uncertainty_n: float
    ratio_n: float


def fibonacci(max_n: int) -> FibSequence:
    if max_n < 2:
        raise InvalidIndex(f"max_n must be >= 2, got {max_n}")
    if max_n > MAX_N + 2:
        raise FibonacciOverflow(f"max_n={max_n} exceeds the exact 64-bit range (<= {MAX_N + 2})")
    vals = [1, 0]
    while len(vals) < max_n + 2:
        vals.append(vals[-1] + vals[-2])
    return FibSequence(tuple(vals), max_n)


def concurrence_squared(n: int) -> Fraction:
    """``C_n^2 = F_{n-2} / F_{n+1}`` as an exact rational."""
    if n < 1:
        raise InvalidIndex(f"n must be >= 1, got {n}")
    if n > MAX_N:
        raise FibonacciOverflow(f"n={n} exceeds {MAX_N}")
    f = fibonacci(n + 1)
    return Fraction(f[n - 2], f[n + 1])


def concurrence_sequence(n: int) -> GoldenRecord:
    c2 = concurrence_squared(n)
    f = fibonacci(n + 1)
    ratio = f.ratio(n) if f[n] else math.inf
    return GoldenRecord(n, math.sqrt(c2), float(Fraction(f[n], f[n + 1])), float(ratio))


@dataclass(frozen=True)
class GoldenLimits:
    n_max: int
    ratio_error: list[float]
    concurrence_error: list[float]
    uncertainty_error: list[float]
    dispersion_ratio: list[float]
    decay_constant: float


def golden_limits(n_max: int, precision: int = 60) -> GoldenLimits:
    """Errors of the three sequences against their limits for ``n = 1..n_max``.

    Evaluated in ``precision``-digit decimal arithmetic, so errors well below
    double epsilon are still resolved.  ``decay_constant`` is the smallest
    ``c`` with ``|F_{n+1}/F_n - phi| <= phi^(-2n + c)`` on ``n = 1..n_max``.
    ``dispersion_ratio[n-1]`` is ``dX_{n+1} / dX_n``, which tends to 1 (the
    ratio of successive uncertainties, not of successive ratios).
    """
    if n_max < 10:
        raise InvalidIndex(f"n_max must be >= 10, got {n_max}")
    f = fibonacci(n_max + 2)
    with localcontext() as ctx:
        ctx.prec = precision
        phi = (1 + Decimal(5).sqrt()) / 2
        c_inf = 1 / (phi * phi.sqrt())
        ratio_err, c_err, u_err, disp, cs = [], [], [], [], []
        for n in range(1, n_max + 1):
            r = abs(Decimal(f[n + 1]) / Decimal(f[n]) - phi)
            ratio_err.append(float(r))
            c_n = (Decimal(f[n - 2]) / Decimal(f[n + 1])).sqrt()
            c_err.append(float(abs(c_n - c_inf)))
            u_err.append(float(abs(Decimal(f[n]) / Decimal(f[n + 1]) - 1 / phi)))
            # dX_n^2 = F_n/F_{n+1}, so (dX_{n+1}/dX_n)^2 = F_{n+1}^2 / (F_n F_{n+2}) -> 1
            disp.append(float((Decimal(f[n + 1]) ** 2 / (Decimal(f[n]) * Decimal(f[n + 2]))).sqrt()))
            cs.append(float(r.ln() / phi.ln() + 2 * n))
    return GoldenLimits(n_max, ratio_err, c_err, u_err, disp, max(cs))


def golden_state(alpha: complex, sign: int = 1, dim: int | None = None) -> SuperState:
    """Super-coherent L-state at ``C = phi^(-3/2)``, ``phi = pi/4``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    label = BellLabel.L_PLUS if sign > 0 else BellLabel.L_MINUS
    return super_coherent(label, alpha, GOLDEN_CONCURRENCE, GOLDEN_PHASE, dim)


def fibonacci_array(max_n: int) -> np.ndarray:
    """``F_1..F_max_n`` as an int64 array."""
    f = fibonacci(max_n)
    return np.array([f[n] for n in range(1, max_n + 1)], dtype=np.int64)
