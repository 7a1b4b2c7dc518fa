import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from supercoherent import fock
from supercoherent.errors import InvalidDimension, InvalidIndex, TruncationError

from conftest import laguerre_element

amplitudes = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


def test_annihilation_small():
    assert np.array_equal(fock.annihilation(2), np.array([[0, 1], [0, 0]], dtype=complex))
    assert fock.annihilation(4)[2, 3] == pytest.approx(math.sqrt(3))


def test_annihilation_rejects_dim_one():
    with pytest.raises(InvalidDimension):
        fock.annihilation(1)


def test_commutator_low_block():
    a = fock.annihilation(20)
    comm = a @ a.T - a.T @ a
    assert np.allclose(comm[:19, :19], np.eye(19))


def test_number_operator():
    n = fock.number_operator(7)
    assert np.allclose(np.diag(n), np.arange(7))
    assert np.trace(n).real == 7 * 6 / 2
    assert np.allclose(n @ fock.basis(2, 7), 2 * fock.basis(2, 7))


def test_quadratures_hermitian_and_canonical():
    x, p = fock.quadratures(30)
    assert np.array_equal(x, x.conj().T) and np.array_equal(p, p.conj().T)
    comm = x @ p - p @ x
    assert np.allclose(comm[:29, :29], 1j * np.eye(29))
    vac = fock.basis(0, 30)
    assert fock.expectation(x @ x, vac).real == pytest.approx(0.5)


def test_coherent_vacuum_and_amplitude():
    assert np.allclose(fock.coherent_state(0, 16), fock.basis(0, 16))
    assert fock.coherent_state(1.0, 64)[0].real == pytest.approx(0.6065306597, abs=1e-10)


@pytest.mark.parametrize("alpha", [0.5, 1 + 1j, -2.0, 3j, 2.1 - 2.1j])
def test_coherent_number_mean(alpha):
    v = fock.coherent_state(alpha, 128)
    assert abs(np.linalg.norm(v) - 1) < 1e-10
    assert fock.expectation(fock.number_operator(128), v).real == pytest.approx(abs(alpha) ** 2, abs=1e-10)
    x, _ = fock.quadratures(128)
    assert fock.expectation(x, v).real == pytest.approx(math.sqrt(2) * complex(alpha).real, abs=1e-10)


def test_coherent_large_dim_no_overflow():
    v = fock.coherent_state(3.0, 256)
    assert np.all(np.isfinite(v))


def test_truncation_error_reports_required_dim():
    with pytest.raises(TruncationError) as info:
        fock.coherent_state(3.0, 10)
    need = info.value.required_dim
    assert need > 10
    fock.coherent_state(3.0, need)


def test_displacement_identity_at_zero():
    assert np.allclose(fock.displacement(0, 32), np.eye(32))


def test_displacement_closed_entries():
    d = fock.displacement(1.0, 64)
    assert d[0, 0].real == pytest.approx(math.exp(-0.5), abs=1e-14)
    assert d[0, 1].real == pytest.approx(-math.exp(-0.5), abs=1e-14)


@pytest.mark.parametrize("alpha", [0.3, 1 - 0.5j, 2j, -1.7 + 1.1j])
def test_displacement_against_laguerre(alpha):
    dim = 128
    d = fock.displacement(alpha, dim)
    want = np.array([[laguerre_element(m, n, alpha) for n in range(8)] for m in range(8)])
    assert np.abs(d[:8, :8] - want).max() < 1e-12


@pytest.mark.parametrize("alpha", [0.7 + 0.3j, 2.0, -1.5j])
def test_displacement_against_series(alpha):
    d = fock.displacement(alpha, 128)
    for n in range(5):
        assert np.abs(d[:, n] - fock.displacement_series_column(alpha, n, 128)).max() < 1e-12


def test_matrix_element_d11_oracle():
    # the variant with an extra factor alpha disagrees with the oracle
    alpha = 0.7 + 0.3j
    x = abs(alpha) ** 2
    got = fock.displacement_series_column(alpha, 1, 64)[1]
    assert got == pytest.approx((1 - x) * math.exp(-x / 2), abs=1e-14)
    assert abs(got - (1 - x) * alpha * math.exp(-x / 2)) > 1e-2


@settings(max_examples=25, deadline=None)
@given(amplitudes)
def test_unitarity(alpha):
    d = fock.displacement(alpha, 128)
    assert np.abs(d.conj().T @ d - np.eye(128)).max() < 1e-8


@settings(max_examples=20, deadline=None)
@given(amplitudes, amplitudes)
def test_composition_on_reliable_block(alpha, beta):
    dim = 160
    lhs = fock.displacement(alpha, dim) @ fock.displacement(beta, dim)
    rhs = np.exp(1j * (alpha * np.conj(beta)).imag) * fock.displacement(alpha + beta, dim)
    b = fock.reliable_block(dim, abs(alpha) + abs(beta))
    assert b > 8
    assert np.abs(lhs - rhs)[:b, :b].max() < 1e-8


@pytest.mark.parametrize("alpha", [0.5, 1 + 1j, 2.0, 3j])
def test_displaced_annihilator_shift(alpha):
    dim = 128
    d, a = fock.displacement(alpha, dim), fock.annihilation(dim)
    b = fock.reliable_block(dim, 2 * abs(alpha))
    err = d.conj().T @ a @ d - a - alpha * np.eye(dim)
    assert np.abs(err[:b, :b]).max() < 1e-8


def test_trusted_block_too_large_for_operator_products():
    # the naive dim - ceil(4|alpha| + 4) block is visibly wrong for D^dag a D
    dim, alpha = 128, 3.0
    d, a = fock.displacement(alpha, dim), fock.annihilation(dim)
    k = fock.trusted_dim(dim, alpha)
    err = d.conj().T @ a @ d - a - alpha * np.eye(dim)
    assert np.abs(err[:k, :k]).max() > 1e-3
    assert fock.reliable_block(dim, 2 * alpha) < k


@pytest.mark.parametrize("alpha", [0.0, 1.0, 2 - 1j])
def test_displaced_fock_orthonormal_and_complete(alpha):
    dim = 128
    cols = np.column_stack([fock.displaced_fock(n, alpha, dim) for n in range(5)])
    assert np.abs(cols.conj().T @ cols - np.eye(5)).max() < 1e-8
    d = fock.displacement(alpha, dim)
    b = fock.reliable_block(dim, 2 * abs(alpha))
    assert np.abs((d @ d.conj().T)[:b, :b] - np.eye(b)).max() < 1e-8


def test_displaced_fock_index_guard():
    with pytest.raises(InvalidIndex):
        fock.displaced_fock(126, 1.0, 128)


def test_displacement_returns_fresh_array():
    d = fock.displacement(0.5, 32)
    d[0, 0] = 99
    assert fock.displacement(0.5, 32)[0, 0] != 99


def test_poisson_tail_matches_sum():
    mean = 2.3
    direct = 1 - sum(math.exp(-mean) * mean**k / math.factorial(k) for k in range(10))
    assert fock.poisson_tail(mean, 10) == pytest.approx(direct, rel=1e-10)
