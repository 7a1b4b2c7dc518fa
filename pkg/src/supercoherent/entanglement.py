"""Reduced density matrices, concurrence and entropy of pure fermion-boson states."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import fock
from .errors import InvalidState
from .superstate import SuperOperator, SuperState
from .tolerances import CMP_TOL, DET_CLAMP, NORM_TOL, TAIL_TOL


@dataclass(frozen=True)
class EntanglementReport:
    concurrence_gram: float
    concurrence_minors: float
    entropy_bits: float
    purity_f: float
    purity_b: float
    rho_f: np.ndarray


def _require_normalized(state: SuperState, tol: float = NORM_TOL) -> None:
    if not state.is_normalized(tol):
        raise InvalidState(f"state norm^2 = {state.norm() ** 2:.15g}, expected 1")


def gram_matrix(state: SuperState) -> np.ndarray:
    """``g_ij = <psi_i|psi_j>`` for the two fermion branches."""
    p = (state.psi0, state.psi1)
    return np.array([[np.vdot(p[i], p[j]) for j in range(2)] for i in range(2)])


def reduced_fermion(state: SuperState) -> np.ndarray:
    """``rho_f = tr_b |Psi><Psi|``; entry ``(i, j)`` is ``<psi_j|psi_i>``."""
    _require_normalized(state)
    return gram_matrix(state).T


def reduced_boson(state: SuperState) -> np.ndarray:
    """``rho_b = |psi0><psi0| + |psi1><psi1|``."""
    _require_normalized(state)
    return np.outer(state.psi0, state.psi0.conj()) + np.outer(state.psi1, state.psi1.conj())


def purity_fermion(state: SuperState) -> float:
    rho = reduced_fermion(state)
    return float(np.trace(rho @ rho).real)


def purity_boson(state: SuperState) -> float:
    rho = reduced_boson(state)
    # tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(rho) ** 2))


def linear_entropy(state: SuperState) -> float:
    return 1.0 - purity_fermion(state)


def _clamp_det(det: float) -> float:
    if det < 0:
        if det < -DET_CLAMP:
            raise ArithmeticError(f"negative Gram determinant {det:.3e}")
        return 0.0
    return det


def _concurrence_from_det(det: float) -> float:
    c = 2.0 * math.sqrt(_clamp_det(det))
    if 1.0 < c <= 1.0 + CMP_TOL:
        c = 1.0
    return c


def gram_determinant(state: SuperState) -> float:
    """``det g`` evaluated as ``|r00 r11|^2`` from a QR factorization of the
    branch matrix, which avoids the cancellation in ``g00 g11 - |g01|^2``
    when the branches are nearly parallel."""
    r = np.linalg.qr(np.column_stack([state.psi0, state.psi1]), mode="r")
    return float(abs(r[0, 0] * r[1, 1]) ** 2)


def concurrence_gram(state: SuperState) -> float:
    """``2 sqrt(det g)`` from the 2x2 Gram matrix of the branches."""
    _require_normalized(state)
    return _concurrence_from_det(gram_determinant(state))


def minors_sum(state: SuperState, pairwise: bool = True) -> float:
    """``sum_{n<m} |c0n c1m - c0m c1n|^2`` over the truncated coefficient grid.

    The default forms every 2x2 minor explicitly (quadratic in dim, accurate
    down to C ~ 1e-16).  ``pairwise=False`` uses the Lagrange identity
    ``|psi0|^2 |psi1|^2 - |<psi0|psi1>|^2``, which is linear in dim but loses
    about half the digits of small C to cancellation.
    """
    c0, c1 = state.psi0, state.psi1
    if not pairwise:
        n0 = np.vdot(c0, c0).real
        n1 = np.vdot(c1, c1).real
        return float(n0 * n1 - abs(np.vdot(c0, c1)) ** 2)
    outer = np.outer(c0, c1)
    minors = outer - outer.T
    iu = np.triu_indices(len(c0), k=1)
    return float(np.sum(np.abs(minors[iu]) ** 2))


def concurrence_minors(state: SuperState, pairwise: bool = True) -> float:
    """``2 sqrt(sum of |2x2 minors|^2)`` of the coefficient matrix."""
    _require_normalized(state)
    return _concurrence_from_det(minors_sum(state, pairwise=pairwise))


def entropy_from_concurrence(c: float) -> float:
    """Von Neumann entropy in bits of a pure state with concurrence ``c``."""
    if c <= 0.0:
        return 0.0
    root = math.sqrt(max(1.0 - c * c, 0.0))
    lam1 = 0.5 * (1.0 + root)
    lam2 = 0.25 * c * c / lam1  # lam1 * lam2 = C^2 / 4, without cancellation
    return -sum(lam * math.log2(lam) for lam in (lam1, lam2) if lam > 0.0)


def entropy_bits(state: SuperState) -> float:
    """``-tr(rho_f log2 rho_f)`` by diagonalizing ``rho_f``."""
    lam = np.linalg.eigvalsh(reduced_fermion(state))
    lam = lam[lam > 0.0]
    return float(-np.sum(lam * np.log2(lam)))


def is_separable(state: SuperState, tol: float = CMP_TOL) -> bool:
    """True when the two branches are linearly dependent."""
    return concurrence_gram(state) <= tol


def entanglement_report(state: SuperState) -> EntanglementReport:
    return EntanglementReport(
        concurrence_gram=concurrence_gram(state),
        concurrence_minors=concurrence_minors(state),
        entropy_bits=entropy_bits(state),
        purity_f=purity_fermion(state),
        purity_b=purity_boson(state),
        rho_f=reduced_fermion(state),
    )


def highest_level(state: SuperState, tail_tol: float = TAIL_TOL) -> int:
    """Lowest level ``k`` such that all mass above ``k`` is below ``tail_tol``."""
    tail = np.cumsum(state.occupation()[::-1])[::-1]
    above = np.nonzero(tail > tail_tol)[0]
    return int(above[-1]) if len(above) else 0


def displacement_invariance_check(
    state: SuperState, alphas: Iterable[complex], tol: float = CMP_TOL
) -> dict:
    """Compare the concurrence of ``state`` with that of each ``D(alpha) state``."""
    _require_normalized(state)
    alphas = list(alphas)
    top = highest_level(state)
    for alpha in sorted(alphas, key=abs, reverse=True)[:1]:
        fock.check_truncation(alpha, state.dim, max_level=top)
    base = concurrence_gram(state)
    values = []
    for alpha in alphas:
        d = SuperOperator.from_fock(fock._displacement_cached(complex(alpha), state.dim))
        values.append(concurrence_gram(d @ state))
    deviation = max((abs(v - base) for v in values), default=0.0)
    return {
        "concurrence": base,
        "alphas": alphas,
        "concurrences": values,
        "max_deviation": deviation,
        "tolerance": tol,
        "passed": deviation <= tol,
    }
