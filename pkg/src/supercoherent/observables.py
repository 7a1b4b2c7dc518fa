"""Quadrature statistics, squeezing analysis and Mandel Q (hbar = 1)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .errors import InvalidConcurrence, TruncationError, UndefinedQuantity
from .superstate import BellLabel, SuperOperator, SuperState, super_number_operator
from .entanglement import _require_normalized
from .tolerances import CMP_TOL, TAIL_TOL


@dataclass(frozen=True)
class QuadratureStats:
    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    product: float


class Extremum(str, enum.Enum):
    MIN = "min"
    MAX = "max"
    SADDLE = "saddle"


@dataclass(frozen=True)
class SqueezeCriticalPoint:
    c: float
    phi: float
    var_value: float
    hessian_det: float
    classification: Extremum
    quadrature: str = "x"


def _check_c(c) -> None:
    arr = np.asarray(c)
    if not np.all((arr >= 0.0) & (arr <= 1.0)):
        raise InvalidConcurrence(f"concurrence must lie in [0, 1], got {c!r}")


def _guard_levels(state: SuperState, tail_tol: float = TAIL_TOL) -> None:
    # second moments amplify whatever sits next to the cutoff
    start = fock.trusted_dim(state.dim) - 2
    mass = state.top_mass(start)
    if mass > tail_tol:
        raise TruncationError(
            f"occupation {mass:.3e} above level {start} exceeds {tail_tol:.1e}; raise dim"
        )


def quadrature_stats(state: SuperState, *, tail_tol: float = TAIL_TOL) -> QuadratureStats:
    """Means and variances of ``X = I_f (x) X_b`` and ``P = I_f (x) P_b``."""
    _require_normalized(state)
    _guard_levels(state, tail_tol)
    xb, pb = fock.quadratures(state.dim)
    x, p = SuperOperator.from_fock(xb), SuperOperator.from_fock(pb)
    mx = x.expect(state).real
    mp = p.expect(state).real
    vx = SuperOperator.from_fock(xb @ xb).expect(state).real - mx * mx
    vp = SuperOperator.from_fock(pb @ pb).expect(state).real - mp * mp
    return QuadratureStats(mx, mp, vx, vp, math.sqrt(vx * vp))


def ladder_means(state: SuperState) -> tuple[complex, complex]:
    """``<I_f (x) a>`` and ``<I_f (x) a^dag>``."""
    a = fock.annihilation(state.dim)
    return (
        SuperOperator.from_fock(a).expect(state),
        SuperOperator.from_fock(a.T).expect(state),
    )


def mean_closed_form(alpha: complex, c: float, phi: float, label: BellLabel | str = BellLabel.L_PLUS) -> tuple[float, float]:
    """Quadrature means of a super-coherent state.

    The reference-state contribution ``sqrt(C(1-C)) (cos phi, sin phi)``
    changes sign for the B- family only.
    """
    _check_c(c)
    s = -1.0 if BellLabel(label) is BellLabel.B_MINUS else 1.0
    r = s * math.sqrt(c * (1 - c))
    alpha = complex(alpha)
    return (
        math.sqrt(2) * alpha.real + r * math.cos(phi),
        math.sqrt(2) * alpha.imag + r * math.sin(phi),
    )


def annihilation_mean_closed_form(
    alpha: complex, c: float, phi: float, label: BellLabel | str = BellLabel.L_PLUS
) -> complex:
    """``<I_f (x) a>`` of a super-coherent state; same B- sign rule as the quadratures."""
    _check_c(c)
    s = -1.0 if BellLabel(label) is BellLabel.B_MINUS else 1.0
    return complex(alpha) + s * math.sqrt(c * (1 - c) / 2) * complex(math.cos(phi), math.sin(phi))


def dispersion_closed_form(c, phi):
    """``(dX^2, dP^2)``; independent of alpha and identical for all four families.

    Accepts scalars or broadcastable arrays.
    """
    _check_c(c)
    base = 0.5 * (1 + c)
    k = c * (1 - c)
    if np.ndim(c) == 0 and np.ndim(phi) == 0:
        return base - k * math.cos(phi) ** 2, base - k * math.sin(phi) ** 2
    return base - k * np.cos(phi) ** 2, base - k * np.sin(phi) ** 2


def uncertainty_product(c: float, phi: float) -> float:
    """``dX dP = (1/2) sqrt(1 + C^2 + 2C^3 + C^2 (1-C)^2 sin^2(2 phi))``."""
    _check_c(c)
    return 0.5 * math.sqrt(
        1 + c * c + 2 * c**3 + c * c * (1 - c) ** 2 * math.sin(2 * phi) ** 2
    )


def pythagoras_check(c: float, phi: float) -> float:
    """Residual of ``dX^2 + dP^2 = 1 + C^2``."""
    vx, vp = dispersion_closed_form(c, phi)
    return vx + vp - (1 + c * c)


def vanishing_mean_alpha(c: float, phi: float, label: BellLabel | str = BellLabel.L_PLUS) -> complex:
    """Displacement at which both quadrature means vanish."""
    _check_c(c)
    s = -1.0 if BellLabel(label) is BellLabel.B_MINUS else 1.0
    return -s * math.sqrt(c * (1 - c) / 2) * complex(math.cos(phi), math.sin(phi))


def dispersion_x_gradient(c: float, phi: float) -> tuple[float, float]:
    """``(f_C, f_phi)`` for ``f = dX^2``."""
    return 0.5 + (2 * c - 1) * math.cos(phi) ** 2, c * (1 - c) * math.sin(2 * phi)


def dispersion_x_hessian(c: float, phi: float) -> np.ndarray:
    f_cc = 2 * math.cos(phi) ** 2
    f_pp = 2 * c * (1 - c) * math.cos(2 * phi)
    f_cp = (1 - 2 * c) * math.sin(2 * phi)
    return np.array([[f_cc, f_cp], [f_cp, f_pp]])


def _classify(hess: np.ndarray) -> Extremum:
    det = float(np.linalg.det(hess))
    if det < 0:
        return Extremum.SADDLE
    return Extremum.MIN if hess[0, 0] > 0 else Extremum.MAX


def squeeze_critical_points() -> list[SqueezeCriticalPoint]:
    """Interior critical points of ``dX^2(C, phi)`` and their ``dP^2`` mirrors.

    ``f_phi = 0`` with ``0 < C < 1`` forces ``sin 2phi = 0``; ``f_C = 0`` then
    rules out ``phi = pi/2, 3pi/2`` and gives ``C = 1/4`` at ``phi = 0, pi``.
    ``dP^2(C, phi) = dX^2(C, phi - pi/2)`` maps these to ``phi = pi/2, 3pi/2``.
    """
    points = []
    c = 0.25
    for phi in (0.0, math.pi):
        hess = dispersion_x_hessian(c, phi)
        points.append(SqueezeCriticalPoint(
            c, phi, dispersion_closed_form(c, phi)[0], float(np.linalg.det(hess)), _classify(hess), "x"
        ))
    for phi in (math.pi / 2, 3 * math.pi / 2):
        hess = dispersion_x_hessian(c, phi - math.pi / 2)
        points.append(SqueezeCriticalPoint(
            c, phi, dispersion_closed_form(c, phi)[1], float(np.linalg.det(hess)), _classify(hess), "p"
        ))
    return points


def mandel_q(state: SuperState, *, tail_tol: float = TAIL_TOL) -> float:
    """``(<N^2> - <N>^2)/<N> - 1`` for the super-number operator."""
    _require_normalized(state)
    _guard_levels(state, tail_tol)
    n_op = super_number_operator(state.dim)
    mean = n_op.expect(state).real
    if mean <= CMP_TOL:
        raise UndefinedQuantity("Mandel Q undefined: <N> vanishes")
    second = (n_op @ n_op).expect(state).real
    return (second - mean * mean) / mean - 1.0
