import math

import numpy as np
import pytest
from scipy.linalg import expm

from supercoherent import entanglement as ent
from supercoherent import evolution as evo
from supercoherent.superstate import super_coherent, super_number_operator, super_number_state

from conftest import random_state


def test_params_validation():
    with pytest.raises(ValueError):
        evo.EvolutionParams(math.nan, 1.0)


@pytest.mark.parametrize("omega,t", [(1.0, 0.3), (2.0, 1.7), (0.5, -4.0)])
def test_operator_matches_expm(omega, t):
    dim = 12
    u = evo.evolution_operator(evo.EvolutionParams(omega, t), dim).matrix
    want = expm(-1j * omega * t * super_number_operator(dim).matrix)
    assert np.allclose(u, want, atol=1e-13)


def test_evolve_matches_operator(rng):
    s = random_state(rng, 20)
    p = evo.EvolutionParams(1.3, 0.8)
    assert evo.evolve(s, p).allclose(evo.evolution_operator(p, 20) @ s, atol=1e-14)


def test_super_number_state_only_acquires_phase():
    s = super_number_state(3, 1.0, 0.2, 16)
    out = evo.evolve(s, evo.EvolutionParams(1.0, 0.9))
    assert out.allclose(np.exp(-3j * 0.9) * s, atol=1e-14)


def test_literal_exponent_differs_unless_unit_frequency():
    dim = 10
    for omega, differs in [(1.0, False), (2.0, True)]:
        p = evo.EvolutionParams(omega, 0.4)
        gap = np.abs(evo.literal_exponent_operator(p, dim).matrix - evo.evolution_operator(p, dim).matrix).max()
        assert bool(gap > 1e-6) is differs


def test_time_dependent_gram_determinant_constant():
    s = super_coherent("Lminus", 1 - 1j, 0.4, 0.5, 96)
    d0 = np.linalg.det(evo.time_dependent_gram(s, 1.1, 0.0)).real
    for t in (0.3, 2.0, 7.5):
        assert np.linalg.det(evo.time_dependent_gram(s, 1.1, t)).real == pytest.approx(d0, abs=1e-13)


def test_entanglement_constant_random(rng):
    times = np.linspace(0, 10, 100)
    for _ in range(20):
        out = evo.entanglement_constancy(random_state(rng, 24), 1.7, times, 1e-10)
        assert out["passed"], out["max_deviation"]


def test_super_coherent_concurrence_constant():
    s = super_coherent("Bplus", 1.5j, 0.7, 0.1, 128)
    for t in (0.5, 3.0):
        assert ent.concurrence_gram(evo.evolve(s, evo.EvolutionParams(2.0, t))) == pytest.approx(0.7, abs=1e-12)


def test_norm_and_group_law(rng):
    s = random_state(rng, 24)
    p1, p2 = evo.EvolutionParams(1.2, 0.7), evo.EvolutionParams(1.2, 2.9)
    once = evo.evolve(s, evo.EvolutionParams(1.2, 3.6))
    twice = evo.evolve(evo.evolve(s, p1), p2)
    assert once.allclose(twice, atol=1e-12)
    assert abs(once.norm() - s.norm()) < 1e-14
