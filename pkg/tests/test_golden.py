import math
from fractions import Fraction

import pytest

from supercoherent import golden
from supercoherent.entanglement import concurrence_gram
from supercoherent.errors import FibonacciOverflow, InvalidIndex
from supercoherent.observables import quadrature_stats, uncertainty_product


def test_fibonacci_values():
    f = golden.fibonacci(13)
    assert (f[-1], f[0], f[1], f[2], f[5], f[6]) == (1, 0, 1, 1, 5, 8)
    for n in range(1, 13):
        assert f[n + 1] == f[n] + f[n - 1]
    assert f.ratio(12) == Fraction(233, 144)
    assert abs(233 / 144 - golden.PHI) < 3e-5


def test_fibonacci_bounds():
    with pytest.raises(InvalidIndex):
        golden.fibonacci(1)
    with pytest.raises(FibonacciOverflow):
        golden.fibonacci(200)
    assert golden.fibonacci_array(90)[-1] < 2**63


@pytest.mark.parametrize("n,c,u", [(1, 1.0, 1.0), (2, 0.0, 0.5), (5, 0.5, 0.625)])
def test_sequence_examples(n, c, u):
    r = golden.concurrence_sequence(n)
    assert r.c_n == pytest.approx(c) and r.uncertainty_n == u


@pytest.mark.parametrize("n", range(1, 41))
def test_sequence_identity(n):
    r = golden.concurrence_sequence(n)
    f = golden.fibonacci(n + 1)
    assert golden.concurrence_squared(n) + 1 == 2 * Fraction(f[n], f[n + 1])
    assert abs(uncertainty_product(r.c_n, math.pi / 4) - r.uncertainty_n) <= 1e-12


def test_invalid_n():
    with pytest.raises(InvalidIndex):
        golden.concurrence_sequence(0)


def test_limits():
    lim = golden.golden_limits(40)
    assert 1 / golden.PHI == pytest.approx(0.6180339887, abs=1e-10)
    assert golden.GOLDEN_CONCURRENCE == pytest.approx(0.4858682718, abs=1e-10)
    assert lim.ratio_error[19] <= 1e-7
    # errors decay geometrically with ratio phi^-2
    for k in range(5, 38):
        assert lim.ratio_error[k + 1] / lim.ratio_error[k] == pytest.approx(golden.PHI**-2, rel=1e-2)
        assert lim.concurrence_error[k + 1] < lim.concurrence_error[k]
    for n, err in enumerate(lim.ratio_error, 1):
        assert err <= golden.PHI ** (-2 * n + lim.decay_constant) * (1 + 1e-12)
    assert lim.dispersion_ratio[-1] == pytest.approx(1.0, abs=1e-12)


def test_even_odd_monotone():
    f = golden.fibonacci(40)
    ratios = [f[n + 1] / f[n] for n in range(1, 40)]
    odd, even = ratios[0::2], ratios[1::2]
    assert all(b > a for a, b in zip(odd, odd[1:]))
    assert all(b < a for a, b in zip(even, even[1:]))


def test_limits_requires_ten():
    with pytest.raises(InvalidIndex):
        golden.golden_limits(9)


@pytest.mark.parametrize("sign", [1, -1])
def test_golden_state(sign):
    s = golden.golden_state(0.4 + 0.3j, sign, 128)
    st = quadrature_stats(s)
    assert abs(uncertainty_product(golden.GOLDEN_CONCURRENCE, math.pi / 4) - 1 / golden.PHI) <= 1e-10
    assert abs(st.product - 1 / golden.PHI) <= 1e-8
    assert st.var_x == pytest.approx(st.var_p, abs=1e-10)
    assert st.var_x == pytest.approx((1 + golden.GOLDEN_CONCURRENCE**2) / 2, abs=1e-10)
    assert concurrence_gram(s) == pytest.approx(golden.GOLDEN_CONCURRENCE, abs=1e-8)
