import numpy as np
import pytest

from gasdyn.errors import NonPositiveDensity, NonPositivePressure
from gasdyn.state import (eigenvalues_x, eigenvalues_y, physical_flux_x,
                          physical_flux_y, to_conserved, to_primitive)

from conftest import GAMMA, random_conserved, random_prim


def test_to_primitive_hand_values():
    prim = to_primitive(np.array([1.0, 0.0, 2.5]), GAMMA)
    assert np.allclose(prim, [1.0, 0.0, 1.0], atol=1e-15)
    # 2-D: E = p/(gamma-1) + rho*(u^2+v^2)/2 = 2.5 + 0.745 for p = 1
    prim2 = to_primitive(np.array([1.0, 1.0, -0.7, 3.245]), GAMMA)
    assert np.allclose(prim2, [1.0, 1.0, -0.7, 1.0], atol=1e-14)


def test_to_primitive_zero_internal_energy_flagged():
    with pytest.raises(NonPositivePressure):
        to_primitive(np.array([1.0, 1.0, 0.5]), GAMMA)


def test_to_primitive_negative_density_flagged():
    with pytest.raises(NonPositiveDensity):
        to_primitive(np.array([-1.0, 0.0, 2.5]), GAMMA)


def test_round_trip_identity(rng):
    prim = random_prim(rng, 500, dim=1)
    U = to_conserved(prim, GAMMA)
    back = to_conserved(to_primitive(U, GAMMA), GAMMA)
    assert np.max(np.abs(back - U) / np.abs(U).max()) < 1e-14
    prim = random_prim(rng, 500, dim=2)
    U = to_conserved(prim, GAMMA)
    back = to_conserved(to_primitive(U, GAMMA), GAMMA)
    assert np.max(np.abs(back - U) / np.abs(U).max()) < 1e-14


def test_flux_x_hand_values():
    U = to_conserved(np.array([1.0, 0.0, 1.0]), GAMMA)
    assert np.allclose(physical_flux_x(U, GAMMA), [0.0, 1.0, 0.0], atol=1e-15)
    # (rho,u,p)=(1,1,1): E = 3, F3 = u(E+p) = 4
    U = to_conserved(np.array([1.0, 1.0, 1.0]), GAMMA)
    assert np.allclose(physical_flux_x(U, GAMMA), [1.0, 2.0, 4.0], atol=1e-14)


def test_flux_oracle_consistency(rng):
    import oracles

    for dim in (1, 2):
        U = random_conserved(rng, 300, dim)
        assert np.allclose(physical_flux_x(U, GAMMA),
                           oracles.phys_flux_x(U, GAMMA), rtol=1e-13)


def test_flux_y_swap_symmetry(rng):
    # G(swap(u,v)) is the component permutation of F
    U = random_conserved(rng, 200, dim=2)
    Uswap = U[:, [0, 2, 1, 3]]
    G = physical_flux_y(U, GAMMA)
    F = physical_flux_x(Uswap, GAMMA)
    assert np.allclose(G, F[:, [0, 2, 1, 3]], rtol=1e-14)
    U0 = to_conserved(np.array([1.0, 0.0, 0.0, 1.0]), GAMMA)
    assert np.allclose(physical_flux_y(U0, GAMMA), [0, 0, 1, 0], atol=1e-15)
    U1 = to_conserved(np.array([2.0, 0.75, 0.5, 1.0]), GAMMA)
    E1 = U1[3]
    expect = [2 * 0.5, 2 * 0.75 * 0.5, 2 * 0.25 + 1.0, 0.5 * (E1 + 1.0)]
    assert np.allclose(physical_flux_y(U1, GAMMA), expect, rtol=1e-14)


def test_eigenvalues_ordering(rng):
    U = to_conserved(np.array([1.0, 0.0, 1.0]), GAMMA)
    lam = eigenvalues_x(U, GAMMA)
    c = np.sqrt(1.4)
    assert np.allclose(lam, [-c, 0.0, c], atol=1e-15)
    for dim in (1, 2):
        lam = eigenvalues_x(random_conserved(rng, 300, dim), GAMMA)
        assert np.all(np.diff(lam, axis=-1) >= 0.0)


def test_supersonic_eigenvalues_positive():
    U = to_conserved(np.array([1.0, 5.0, 1.0]), GAMMA)
    assert np.all(eigenvalues_x(U, GAMMA) > 0.0)


def test_2d_x_eigenvalues_independent_of_v():
    Ua = to_conserved(np.array([1.0, 1.0, -0.7, 1.0]), GAMMA)
    Ub = to_conserved(np.array([1.0, 1.0, 0.3, 1.0]), GAMMA)
    assert np.allclose(eigenvalues_x(Ua, GAMMA), eigenvalues_x(Ub, GAMMA),
                       rtol=1e-14)
    lam_y = eigenvalues_y(Ua, GAMMA)
    c = np.sqrt(1.4)
    assert np.allclose(lam_y, [-0.7 - c, -0.7, -0.7, -0.7 + c], rtol=1e-14)
