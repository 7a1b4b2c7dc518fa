"""Fermion (x) boson composite states and operators.

A :class:`SuperState` is the pair ``(psi0, psi1)`` of bosonic vectors that
accompany the fermion in ``|0>_f`` and ``|1>_f``.  A :class:`SuperOperator`
is the matching 2x2 block matrix of bosonic operators.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import fock
from .errors import InvalidAngle, InvalidConcurrence, InvalidDimension, InvalidIndex
from .fock import FockOperator, FockVector
from .tolerances import EIG_TOL, NORM_TOL, TAIL_TOL

TWO_PI = 2.0 * math.pi


class BellLabel(str, enum.Enum):
    L_PLUS = "Lplus"
    L_MINUS = "Lminus"
    B_PLUS = "Bplus"
    B_MINUS = "Bminus"

    @property
    def sign(self) -> int:
        return 1 if self in (BellLabel.L_PLUS, BellLabel.B_PLUS) else -1

    @property
    def is_l(self) -> bool:
        return self in (BellLabel.L_PLUS, BellLabel.L_MINUS)


class Annihilator(str, enum.Enum):
    A0 = "A0"
    A1 = "A1"
    A_MINUS1 = "Am1"
    AT1 = "AT1"
    AT_MINUS1 = "ATm1"


def _frozen(v: np.ndarray) -> np.ndarray:
    out = np.array(v, dtype=complex, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class SuperState:
    psi0: FockVector
    psi1: FockVector

    def __post_init__(self):
        p0, p1 = _frozen(self.psi0), _frozen(self.psi1)
        if p0.ndim != 1 or p0.shape != p1.shape:
            raise InvalidDimension(
                f"branches must be 1-D with equal length, got {p0.shape} and {p1.shape}"
            )
        object.__setattr__(self, "psi0", p0)
        object.__setattr__(self, "psi1", p1)

    @classmethod
    def from_vector(cls, v: np.ndarray) -> "SuperState":
        """Split a length ``2*dim`` vector ordered (fermion 0 block, fermion 1 block)."""
        v = np.asarray(v)
        if v.ndim != 1 or len(v) % 2:
            raise InvalidDimension("vector length must be even")
        half = len(v) // 2
        return cls(v[:half], v[half:])

    @property
    def dim(self) -> int:
        return self.psi0.shape[0]

    @property
    def vector(self) -> np.ndarray:
        return np.concatenate([self.psi0, self.psi1])

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.psi0, self.psi0).real + np.vdot(self.psi1, self.psi1).real))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= tol

    def normalized(self) -> "SuperState":
        return self / self.norm()

    def inner(self, other: "SuperState") -> complex:
        """``<self|other>``, antilinear in ``self``."""
        return complex(np.vdot(self.psi0, other.psi0) + np.vdot(self.psi1, other.psi1))

    def occupation(self) -> np.ndarray:
        """Boson number distribution summed over the fermion."""
        return np.abs(self.psi0) ** 2 + np.abs(self.psi1) ** 2

    def top_mass(self, start: int) -> float:
        """Probability carried by boson levels ``>= start``."""
        return float(self.occupation()[max(start, 0):].sum())

    def allclose(self, other: "SuperState", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.vector, other.vector, rtol=0, atol=atol))

    def __add__(self, other: "SuperState") -> "SuperState":
        return SuperState(self.psi0 + other.psi0, self.psi1 + other.psi1)

    def __sub__(self, other: "SuperState") -> "SuperState":
        return SuperState(self.psi0 - other.psi0, self.psi1 - other.psi1)

    def __mul__(self, c: complex) -> "SuperState":
        return SuperState(c * self.psi0, c * self.psi1)

    __rmul__ = __mul__

    def __truediv__(self, c: complex) -> "SuperState":
        return SuperState(self.psi0 / c, self.psi1 / c)

    def __neg__(self) -> "SuperState":
        return SuperState(-self.psi0, -self.psi1)


@dataclass(frozen=True, eq=False)
class SuperOperator:
    """Block operator ``[[b00, b01], [b10, b11]]`` acting on ``(psi0, psi1)``."""

    b00: FockOperator
    b01: FockOperator
    b10: FockOperator
    b11: FockOperator

    def __post_init__(self):
        blocks = [_frozen(getattr(self, k)) for k in ("b00", "b01", "b10", "b11")]
        shape = blocks[0].shape
        if len(shape) != 2 or shape[0] != shape[1] or any(b.shape != shape for b in blocks):
            raise InvalidDimension("all blocks must be square with a shared dim")
        for k, b in zip(("b00", "b01", "b10", "b11"), blocks):
            object.__setattr__(self, k, b)

    @classmethod
    def diagonal(cls, d0: FockOperator, d1: FockOperator | None = None) -> "SuperOperator":
        d1 = d0 if d1 is None else d1
        z = np.zeros_like(d0, dtype=complex)
        return cls(d0, z, z, d1)

    @classmethod
    def from_fock(cls, op: FockOperator) -> "SuperOperator":
        """``I_f (x) op``."""
        return cls.diagonal(op)

    @classmethod
    def identity(cls, dim: int) -> "SuperOperator":
        return cls.diagonal(np.eye(dim, dtype=complex))

    @property
    def dim(self) -> int:
        return self.b00.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self.b00, self.b01], [self.b10, self.b11]])

    def dag(self) -> "SuperOperator":
        h = lambda m: m.conj().T
        return SuperOperator(h(self.b00), h(self.b10), h(self.b01), h(self.b11))

    def expect(self, state: SuperState) -> complex:
        return state.inner(self @ state)

    def __matmul__(self, other: Union[SuperState, "SuperOperator"]):
        if isinstance(other, SuperState):
            return SuperState(
                self.b00 @ other.psi0 + self.b01 @ other.psi1,
                self.b10 @ other.psi0 + self.b11 @ other.psi1,
            )
        if isinstance(other, SuperOperator):
            return SuperOperator(
                self.b00 @ other.b00 + self.b01 @ other.b10,
                self.b00 @ other.b01 + self.b01 @ other.b11,
                self.b10 @ other.b00 + self.b11 @ other.b10,
                self.b10 @ other.b01 + self.b11 @ other.b11,
            )
        return NotImplemented

    def __add__(self, other: "SuperOperator") -> "SuperOperator":
        return SuperOperator(
            self.b00 + other.b00, self.b01 + other.b01, self.b10 + other.b10, self.b11 + other.b11
        )

    def __sub__(self, other: "SuperOperator") -> "SuperOperator":
        return self + (-1.0) * other

    def __mul__(self, c: complex) -> "SuperOperator":
        return SuperOperator(c * self.b00, c * self.b01, c * self.b10, c * self.b11)

    __rmul__ = __mul__


# -- parameter helpers -------------------------------------------------------


def normalize_phi(phi: float) -> float:
    return float(phi) % TWO_PI


def concurrence_from_theta(theta: float) -> float:
    _check_theta(theta)
    return math.sin(theta / 2) ** 2


def theta_from_concurrence(c: float) -> float:
    _check_concurrence(c)
    return 2.0 * math.asin(math.sqrt(c))


def _check_theta(theta: float, name: str = "theta") -> None:
    if not 0.0 <= theta <= math.pi:
        raise InvalidAngle(f"{name} must lie in [0, pi], got {theta!r}")


def _check_concurrence(c: float) -> None:
    if not 0.0 <= c <= 1.0:
        raise InvalidConcurrence(f"concurrence must lie in [0, 1], got {c!r}")


def _check_small_dim(dim: int) -> None:
    if not isinstance(dim, (int, np.integer)) or dim < 2:
        raise InvalidDimension(f"dim must be an integer >= 2, got {dim!r}")


# -- states --------------------------------------------------------------------


def _pair(dim: int, top: dict[int, complex] | None = None, bottom: dict[int, complex] | None = None) -> SuperState:
    psi0 = np.zeros(dim, dtype=complex)
    psi1 = np.zeros(dim, dtype=complex)
    for n, c in (top or {}).items():
        psi0[n] += c
    for n, c in (bottom or {}).items():
        psi1[n] += c
    return SuperState(psi0, psi1)


def vacuum(dim: int) -> SuperState:
    """``|0>_f |0>_b``."""
    _check_small_dim(dim)
    return _pair(dim, top={0: 1.0})


def one_fermion(dim: int) -> SuperState:
    """``f^dag`` applied to the vacuum: ``|1>_f |0>_b``."""
    _check_small_dim(dim)
    return _pair(dim, bottom={0: 1.0})


def bell(label: BellLabel | str, dim: int) -> SuperState:
    """Fermion-boson Bell states.

    ``L+-`` keep the one-boson amplitude on the fermion-0 branch,
    ``(|1>, +-|0>)/sqrt2``; ``B+-`` are ``(|0>, +-|1>)/sqrt2``.
    """
    label = BellLabel(label)
    _check_small_dim(dim)
    h = 1 / math.sqrt(2)
    if label.is_l:
        return _pair(dim, top={1: h}, bottom={0: label.sign * h})
    return _pair(dim, top={0: h}, bottom={1: label.sign * h})


def _check_level(n: int, dim: int) -> None:
    limit = fock.trusted_dim(dim)
    if not 1 <= n < limit:
        raise InvalidIndex(f"n={n} outside 1..{limit - 1} for dim={dim}")


def generalized_bell(n: int, sign: int, dim: int) -> SuperState:
    """``(|n>, +-|n-1>)/sqrt2``; ``n = 1`` gives the L Bell pair."""
    _check_level(n, dim)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    h = 1 / math.sqrt(2)
    return _pair(dim, top={n: h}, bottom={n - 1: sign * h})


def super_number_state(n: int, theta: float, phi: float, dim: int) -> SuperState:
    """Eigenstate of the super-number operator with eigenvalue ``n``:
    ``cos(theta/2)(|n>, 0) + sin(theta/2) e^{i phi} (0, |n-1>)``."""
    _check_level(n, dim)
    _check_theta(theta)
    phi = normalize_phi(phi)
    return _pair(
        dim,
        top={n: math.cos(theta / 2)},
        bottom={n - 1: math.sin(theta / 2) * np.exp(1j * phi)},
    )


def reference_state(label: BellLabel | str, c: float, phi: float, dim: int) -> SuperState:
    """Super-qubit reference state ``sqrt(1-C) base + sqrt(C) e^{i phi} bell(label)``.

    The base is the vacuum for the L pair and the one-fermion state for the B
    pair; ``C`` is the concurrence of the result.
    """
    label = BellLabel(label)
    _check_concurrence(c)
    phi = normalize_phi(phi)
    base = vacuum(dim) if label.is_l else one_fermion(dim)
    return math.sqrt(1 - c) * base + (math.sqrt(c) * np.exp(1j * phi)) * bell(label, dim)


def reference_state_theta(label: BellLabel | str, theta: float, phi: float, dim: int) -> SuperState:
    """Super-Bloch form of :func:`reference_state`, ``C = sin^2(theta/2)``."""
    return reference_state(label, concurrence_from_theta(theta), phi, dim)


def generic_one_superparticle_reference(
    theta: float, phi: float, theta1: float, phi1: float, dim: int
) -> SuperState:
    """``cos(theta/2) vacuum + sin(theta/2) e^{i phi} |1, theta1, phi1>``.

    Its concurrence is ``sin^2(theta/2) sin(theta1)``.
    """
    _check_theta(theta)
    _check_theta(theta1, "theta1")
    one = super_number_state(1, theta1, phi1, dim)
    return math.cos(theta / 2) * vacuum(dim) + (
        math.sin(theta / 2) * np.exp(1j * normalize_phi(phi))
    ) * one


# -- operators -----------------------------------------------------------------


def super_number_operator(dim: int) -> SuperOperator:
    """``I_f (x) N + N_f (x) I_b`` = diag(N, N + 1)."""
    n = fock.number_operator(dim)
    return SuperOperator.diagonal(n, n + np.eye(dim))


def fermion_projectors(dim: int) -> tuple[SuperOperator, SuperOperator]:
    """``P0 = |0><0| (x) I_b`` and ``P1 = |1><1| (x) I_b``."""
    eye = np.eye(dim, dtype=complex)
    zero = np.zeros_like(eye)
    return SuperOperator.diagonal(eye, zero), SuperOperator.diagonal(zero, eye)


def super_displacement(
    alpha: complex, dim: int | None = None, *, tail_tol: float = TAIL_TOL
) -> SuperOperator:
    """``I_f (x) D(alpha)``."""
    dim = fock.default_dim(alpha) if dim is None else dim
    return SuperOperator.from_fock(fock.displacement(alpha, dim, tail_tol=tail_tol))


def super_coherent(
    label: BellLabel | str,
    alpha: complex,
    c: float,
    phi: float,
    dim: int | None = None,
    *,
    tail_tol: float = TAIL_TOL,
) -> SuperState:
    """Displaced reference state ``D(alpha)|0, C, phi>_label``.

    Built directly from the displaced Fock states ``|0,alpha>`` and
    ``|1,alpha>``, which is what the displacement of the reference state
    reduces to.
    """
    label = BellLabel(label)
    _check_concurrence(c)
    dim = fock.default_dim(alpha) if dim is None else dim
    _check_small_dim(dim)
    fock.check_truncation(alpha, dim, max_level=1, tail_tol=tail_tol)
    d = fock._displacement_cached(complex(alpha), int(dim))
    zero, one = d[:, 0], d[:, 1]
    w = math.sqrt(c) * np.exp(1j * normalize_phi(phi)) / math.sqrt(2)
    base = math.sqrt(1 - c)
    s = label.sign
    if label.is_l:
        return SuperState(base * zero + w * one, s * w * zero)
    return SuperState(w * zero, base * zero + s * w * one)


def super_annihilator(kind: Annihilator | str, dim: int) -> SuperOperator:
    """``A0 = I_f (x) a``; ``A(+-1) = [[a, +-1], [0, a]]``; ``AT(+-1) = [[a, 0], [+-1, a]]``."""
    kind = Annihilator(kind)
    _check_small_dim(dim)
    a = fock.annihilation(dim)
    eye = np.eye(dim, dtype=complex)
    zero = np.zeros_like(eye)
    if kind is Annihilator.A0:
        return SuperOperator(a, zero, zero, a)
    s = 1 if kind in (Annihilator.A1, Annihilator.AT1) else -1
    if kind in (Annihilator.A1, Annihilator.A_MINUS1):
        return SuperOperator(a, s * eye, zero, a)
    return SuperOperator(a, zero, s * eye, a)


_PARTNER = {
    BellLabel.L_PLUS: Annihilator.A_MINUS1,
    BellLabel.L_MINUS: Annihilator.A1,
    BellLabel.B_PLUS: Annihilator.AT_MINUS1,
    BellLabel.B_MINUS: Annihilator.AT1,
}


def partner_annihilator(label: BellLabel | str) -> Annihilator:
    """The operator whose eigenstates are the ``label`` super-coherent states."""
    return _PARTNER[BellLabel(label)]


def eigen_residual(
    op: SuperOperator, state: SuperState, eigenvalue: complex, alpha: complex = 0.0
) -> float:
    """2-norm of ``op|s> - eigenvalue|s>`` on the trusted low levels."""
    r = op @ state - eigenvalue * state
    k = max(fock.trusted_dim(state.dim, alpha), 0)
    return float(np.sqrt(np.sum(np.abs(r.psi0[:k]) ** 2 + np.abs(r.psi1[:k]) ** 2)))


def raise_to_bell(sign: int, dim: int, tol: float = EIG_TOL) -> dict:
    """Check the ladder relations linking the vacuum and one-fermion states to
    the Bell pairs:

        L = A(s)^dag vac / sqrt2,      vac = A(s) L / sqrt2,
        B = s AT(s)^dag f1 / sqrt2,    f1  = s AT(s) B / sqrt2.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    h = 1 / math.sqrt(2)
    a = super_annihilator(Annihilator.A1 if sign > 0 else Annihilator.A_MINUS1, dim)
    at = super_annihilator(Annihilator.AT1 if sign > 0 else Annihilator.AT_MINUS1, dim)
    lab_l = BellLabel.L_PLUS if sign > 0 else BellLabel.L_MINUS
    lab_b = BellLabel.B_PLUS if sign > 0 else BellLabel.B_MINUS
    vac, f1 = vacuum(dim), one_fermion(dim)
    l_state, b_state = bell(lab_l, dim), bell(lab_b, dim)

    def dist(x: SuperState, y: SuperState) -> float:
        return (x - y).norm()

    residuals = {
        "raise_vacuum_to_L": dist(h * (a.dag() @ vac), l_state),
        "lower_L_to_vacuum": dist(h * (a @ l_state), vac),
        "raise_fermion_to_B": dist((sign * h) * (at.dag() @ f1), b_state),
        "lower_B_to_fermion": dist((sign * h) * (at @ b_state), f1),
    }
    return {
        "sign": sign,
        "residuals": residuals,
        "tolerance": tol,
        "passed": all(v <= tol for v in residuals.values()),
    }
