"""Overlaps of super-coherent states sharing a super-Bloch point, and the
families of displacements that make them orthogonal."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from . import fock
from .errors import InvalidConcurrence, NoOrthogonalStates
from .superstate import BellLabel, concurrence_from_theta, super_coherent
from .tolerances import ORTHO_TOL

SQRT2 = math.sqrt(2)


class OrthoKind(str, enum.Enum):
    ANTIPODAL_PAIR = "antipodal_pair"
    CIRCLE = "circle"
    TRIANGLE = "triangle"


@dataclass(frozen=True)
class OrthoSolution:
    kind: OrthoKind
    base_alpha: complex
    members: tuple[complex, ...]
    c: float
    phi: float
    overlaps: tuple[float, ...] = ()

    @property
    def max_overlap(self) -> float:
        return max(self.overlaps, default=0.0)


def inner_product_closed_form(
    alpha: complex, beta: complex, theta: float, phi: float, label: BellLabel | str = BellLabel.L_PLUS
) -> complex:
    """``<beta, theta, phi | alpha, theta, phi>`` for two super-coherent states.

    For L+, L- and B+ this is

        e^{-i Im(beta conj(alpha))} e^{-|alpha-beta|^2/2}
          * (1 - sin(theta)/(2 sqrt2) (conj(g) e^{i phi} - g e^{-i phi})
               - |g|^2/2 sin^2(theta/2)),      g = alpha - beta;

    B- flips the sign of the middle term.
    """
    label = BellLabel(label)
    g = complex(alpha) - complex(beta)
    s = -1.0 if label is BellLabel.B_MINUS else 1.0
    e = cmath.exp(1j * phi)
    phase = cmath.exp(-1j * (complex(beta) * complex(alpha).conjugate()).imag)
    bracket = (
        1
        - s * math.sin(theta) / (2 * SQRT2) * (g.conjugate() * e - g / e)
        - abs(g) ** 2 / 2 * math.sin(theta / 2) ** 2
    )
    return phase * math.exp(-0.5 * abs(g) ** 2) * bracket


def overlap_dim(*points: complex) -> int:
    """Cutoff large enough to resolve overlaps between the given displacements."""
    return max(160, max(fock.default_dim(p) for p in points))


def inner_product_numeric(
    alpha: complex,
    beta: complex,
    theta: float,
    phi: float,
    label: BellLabel | str = BellLabel.L_PLUS,
    dim: int | None = None,
) -> complex:
    """Same overlap from explicitly constructed state vectors."""
    dim = overlap_dim(alpha, beta) if dim is None else dim
    c = concurrence_from_theta(theta)
    a_state = super_coherent(label, alpha, c, phi, dim)
    b_state = super_coherent(label, beta, c, phi, dim)
    return b_state.inner(a_state)


def orthogonality_conditions(w: complex, theta: float) -> tuple[float, float]:
    """Residuals of the two real conditions for ``w = (alpha - beta) e^{-i phi}``:
    ``(w - conj w) sin(theta) = 0`` and ``|w|^2 sin^2(theta/2) / 2 = 1``."""
    return (
        abs((w - w.conjugate()) * math.sin(theta)),
        0.5 * abs(w) ** 2 * math.sin(theta / 2) ** 2 - 1.0,
    )


def _overlaps(alpha, members, c, phi, label, dim) -> tuple[float, ...]:
    theta = 2 * math.asin(math.sqrt(c))
    dim = overlap_dim(alpha, *members) if dim is None else dim
    return tuple(abs(inner_product_numeric(alpha, b, theta, phi, label, dim)) for b in members)


def orthogonal_antipodal_pair(
    alpha: complex,
    c: float,
    phi: float,
    *,
    label: BellLabel | str = BellLabel.L_PLUS,
    dim: int | None = None,
) -> OrthoSolution:
    """``beta+- = alpha +- sqrt(2/C) e^{i phi}``."""
    if not 0.0 <= c <= 1.0:
        raise InvalidConcurrence(f"concurrence must lie in [0, 1], got {c!r}")
    if c == 0.0:
        raise NoOrthogonalStates("separable states (C = 0) have no orthogonal partner")
    step = math.sqrt(2 / c) * cmath.exp(1j * phi)
    members = (complex(alpha) + step, complex(alpha) - step)
    return OrthoSolution(
        OrthoKind.ANTIPODAL_PAIR, complex(alpha), members, c, phi,
        _overlaps(alpha, members, c, phi, label, dim),
    )


def orthogonal_circle(
    alpha: complex,
    n_points: int,
    *,
    phi: float = 0.0,
    label: BellLabel | str = BellLabel.L_PLUS,
    dim: int | None = None,
) -> OrthoSolution:
    """Maximally entangled states orthogonal to ``alpha``: ``alpha + sqrt2 e^{it}``."""
    if n_points < 3:
        raise ValueError("n_points must be >= 3")
    members = tuple(
        complex(alpha) + SQRT2 * cmath.exp(2j * math.pi * k / n_points) for k in range(n_points)
    )
    return OrthoSolution(
        OrthoKind.CIRCLE, complex(alpha), members, 1.0, phi,
        _overlaps(alpha, members, 1.0, phi, label, dim),
    )


def orthogonal_triangle(
    alpha: complex,
    t1: float,
    *,
    phi: float = 0.0,
    label: BellLabel | str = BellLabel.L_PLUS,
    dim: int | None = None,
) -> OrthoSolution:
    """Three mutually orthogonal C = 1 states at the vertices of an equilateral
    triangle of side sqrt2; ``members`` lists all three vertices and
    ``overlaps`` the three pairwise overlaps."""
    a = complex(alpha)
    verts = (a, a + SQRT2 * cmath.exp(1j * t1), a + SQRT2 * cmath.exp(1j * (t1 + math.pi / 3)))
    dim = overlap_dim(*verts) if dim is None else dim
    pairs = ((0, 1), (0, 2), (1, 2))
    overlaps = tuple(
        abs(inner_product_numeric(verts[i], verts[j], math.pi, phi, label, dim)) for i, j in pairs
    )
    return OrthoSolution(OrthoKind.TRIANGLE, a, verts, 1.0, phi, overlaps)


def is_orthogonal(solution: OrthoSolution, tol: float = ORTHO_TOL) -> bool:
    return solution.max_overlap <= tol
