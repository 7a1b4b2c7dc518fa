"""Truncated bosonic Fock space.

Vectors and operators are plain complex numpy arrays of length ``dim`` and
shape ``(dim, dim)``.  Every function returns a fresh array, so callers may
mutate results freely.
"""

from __future__ import annotations

import functools
import math

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import expm
from scipy.special import gammainc

from .errors import InvalidDimension, InvalidIndex, TruncationError
from .tolerances import TAIL_TOL

FockVector = NDArray[np.complex128]
FockOperator = NDArray[np.complex128]

# Extra distance (in units of sqrt(occupation)) kept between the semiclassical
# support of D(alpha)|j> and the cutoff before column j is trusted.
_BLOCK_MARGIN = 3.0


def default_dim(alpha: complex = 0.0) -> int:
    """Cutoff used when the caller does not supply one."""
    r = abs(alpha)
    return max(64, math.ceil(r * r + 8 * r + 16))


def trusted_dim(dim: int, alpha: complex = 0.0) -> int:
    """Number of low levels of a displaced *state* vector considered exact.

    Truncation corrupts the top rows first; residuals and occupation guards
    ignore everything at or above this index.
    """
    return dim - math.ceil(4 * abs(alpha) + 4)


def reliable_block(dim: int, radius: float = 0.0) -> int:
    """Size of the low block on which products of displacement matrices of
    total amplitude ``radius`` agree with the untruncated operators.

    ``D(alpha)|j>`` is supported up to occupation ``(sqrt(j) + |alpha|)**2``,
    so column ``j`` is reliable only while that stays clear of the cutoff.
    """
    edge = math.sqrt(dim) - abs(radius) - _BLOCK_MARGIN
    if edge <= 0:
        return 0
    return min(dim, int(math.floor(edge * edge)) + 1)


def poisson_tail(mean: float, k: int) -> float:
    """P(N >= k) for N ~ Poisson(mean): the coherent-state mass beyond level k-1."""
    if k <= 0:
        return 1.0
    if mean == 0:
        return 0.0
    return float(gammainc(k, mean))


def required_dim(alpha: complex, tail_tol: float = TAIL_TOL, max_level: int = 0) -> int:
    """Smallest cutoff whose coherent tail mass is below ``tail_tol``."""
    mean = abs(alpha) ** 2
    k = 1
    while poisson_tail(mean, k) > tail_tol:
        k += 1
    return k + max_level


def check_truncation(
    alpha: complex, dim: int, *, max_level: int = 0, tail_tol: float = TAIL_TOL
) -> None:
    """Raise :class:`TruncationError` unless displacing levels ``<= max_level``
    by ``alpha`` leaves at most ``tail_tol`` of mass beyond the cutoff."""
    tail = poisson_tail(abs(alpha) ** 2, dim - max_level)
    if tail > tail_tol:
        need = required_dim(alpha, tail_tol, max_level)
        raise TruncationError(
            f"dim={dim} too small for |alpha|={abs(alpha):.4g}: tail mass "
            f"{tail:.3e} > {tail_tol:.1e}; need dim >= {need}",
            required_dim=need,
        )


def _check_dim(dim: int, minimum: int) -> None:
    if not isinstance(dim, (int, np.integer)) or dim < minimum:
        raise InvalidDimension(f"dim must be an integer >= {minimum}, got {dim!r}")


def basis(n: int, dim: int) -> FockVector:
    """Number state |n>."""
    _check_dim(dim, 1)
    if not 0 <= n < dim:
        raise InvalidIndex(f"level {n} outside 0..{dim - 1}")
    v = np.zeros(dim, dtype=complex)
    v[n] = 1.0
    return v


def annihilation(dim: int) -> FockOperator:
    _check_dim(dim, 2)
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1).astype(complex)


def creation(dim: int) -> FockOperator:
    return annihilation(dim).T.copy()


def number_operator(dim: int) -> FockOperator:
    _check_dim(dim, 1)
    return np.diag(np.arange(dim, dtype=float)).astype(complex)


def quadratures(dim: int) -> tuple[FockOperator, FockOperator]:
    """Coordinate ``(a + a^dag)/sqrt(2)`` and momentum ``i(a^dag - a)/sqrt(2)``."""
    a = annihilation(dim)
    ad = a.T
    x = (a + ad) / math.sqrt(2)
    p = 1j * (ad - a) / math.sqrt(2)
    return x, p


def coherent_state(
    alpha: complex, dim: int | None = None, *, tail_tol: float = TAIL_TOL
) -> FockVector:
    """Normalized Glauber state ``D(alpha)|0>`` truncated to ``dim`` levels.

    Amplitudes are built by the recursion ``c_n = c_{n-1} alpha / sqrt(n)`` so
    no factorial is ever formed.
    """
    dim = default_dim(alpha) if dim is None else dim
    _check_dim(dim, 1)
    check_truncation(alpha, dim, tail_tol=tail_tol)
    amps = np.empty(dim, dtype=complex)
    amps[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, dim):
        amps[n] = amps[n - 1] * alpha / math.sqrt(n)
    return amps


@functools.lru_cache(maxsize=128)
def _displacement_cached(alpha: complex, dim: int) -> FockOperator:
    a = annihilation(dim)
    generator = alpha * a.T - np.conj(alpha) * a
    out = expm(generator)
    out.flags.writeable = False
    return out


def displacement(
    alpha: complex, dim: int | None = None, *, tail_tol: float = TAIL_TOL
) -> FockOperator:
    """Matrix exponential of ``alpha a^dag - conj(alpha) a`` on the truncated space."""
    dim = default_dim(alpha) if dim is None else dim
    _check_dim(dim, 2)
    check_truncation(alpha, dim, tail_tol=tail_tol)
    return _displacement_cached(complex(alpha), int(dim)).copy()


def displaced_fock(
    n: int, alpha: complex, dim: int | None = None, *, tail_tol: float = TAIL_TOL
) -> FockVector:
    """Displaced number state ``D(alpha)|n>``."""
    dim = default_dim(alpha) if dim is None else dim
    _check_dim(dim, 2)
    if not 0 <= n < trusted_dim(dim, alpha):
        raise InvalidIndex(
            f"level {n} outside the trusted range 0..{trusted_dim(dim, alpha) - 1} "
            f"for dim={dim}, |alpha|={abs(alpha):.4g}"
        )
    check_truncation(alpha, dim, max_level=n, tail_tol=tail_tol)
    return _displacement_cached(complex(alpha), int(dim))[:, n].copy()


def apply_generator(alpha: complex, v: FockVector) -> FockVector:
    """``(alpha a^dag - conj(alpha) a) v`` by index arithmetic, without matrices."""
    out = np.zeros_like(v, dtype=complex)
    s = np.sqrt(np.arange(1, len(v), dtype=float))
    out[1:] += alpha * s * v[:-1]
    out[:-1] -= np.conj(alpha) * s * v[1:]
    return out


def displacement_series_column(
    alpha: complex, n: int, dim: int, *, max_terms: int = 4000
) -> FockVector:
    """Column ``n`` of ``D(alpha)`` from the Taylor series of the exponential.

    Terms are summed until they stop changing the result in double precision.
    Serves as a check on :func:`displacement`, which uses scaling and squaring.
    """
    total = basis(n, dim)
    term = total.copy()
    for k in range(1, max_terms):
        term = apply_generator(alpha, term) / k
        total += term
        if k > abs(alpha) ** 2 and np.linalg.norm(term) < 1e-18 * np.linalg.norm(total):
            return total
    raise ArithmeticError(f"series for D({alpha}) column {n} did not converge")


def expectation(op: FockOperator, v: FockVector) -> complex:
    return complex(np.vdot(v, op @ v))
