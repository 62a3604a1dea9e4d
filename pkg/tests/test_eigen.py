import numpy as np
import pytest

from gasdyn.eigen import basis_x, basis_y, project, unproject
from gasdyn.errors import NonPositivePressure
from gasdyn.state import physical_flux_x, physical_flux_y, to_conserved

from conftest import GAMMA, random_conserved


def fd_jacobian(flux_fn, U, h=1e-6):
    d = U.shape[0]
    A = np.empty((d, d))
    for j in range(d):
        dU = np.zeros(d)
        dU[j] = h * max(1.0, abs(U[j]))
        A[:, j] = (flux_fn(U + dU, GAMMA) - flux_fn(U - dU, GAMMA)) / (2 * dU[j])
    return A


def test_rest_state_eigenvalues():
    U = to_conserved(np.array([1.0, 0.0, 1.0]), GAMMA)
    b = basis_x(U, GAMMA)
    c = np.sqrt(1.4)
    assert np.allclose(b.lambdas, [-c, 0.0, c], atol=1e-15)


@pytest.mark.parametrize("dim", [1, 2])
def test_inverse_property(dim, rng):
    for U in random_conserved(rng, 100, dim):
        b = basis_x(U, GAMMA)
        assert np.max(np.abs(b.right @ b.left - np.eye(dim + 2))) < 1e-12


@pytest.mark.parametrize("dim", [1, 2])
def test_diagonalizes_fd_jacobian(dim, rng):
    # oracle: central finite differences of the physical flux
    for U in random_conserved(rng, 30, dim):
        b = basis_x(U, GAMMA)
        A = fd_jacobian(physical_flux_x, U)
        D = b.left @ A @ b.right
        assert np.max(np.abs(D - np.diag(b.lambdas))) < 1e-5
        assert np.all(np.diff(b.lambdas) >= -1e-14)


def test_basis_y_diagonalizes_g_jacobian(rng):
    for U in random_conserved(rng, 30, 2):
        b = basis_y(U, GAMMA)
        B = fd_jacobian(physical_flux_y, U)
        D = b.left @ B @ b.right
        assert np.max(np.abs(D - np.diag(b.lambdas))) < 1e-5
        # repeated middle eigenvalue v
        assert np.isclose(b.lambdas[1], b.lambdas[2], rtol=1e-14)


def test_project_round_trip(rng):
    U = random_conserved(rng, 1, 2)[0]
    b = basis_x(U, GAMMA)
    vals = rng.normal(size=(7, 4))
    back = unproject(b, project(b, vals))
    assert np.max(np.abs(back - vals)) < 1e-12


def test_project_eigenvector_is_unit_field(rng):
    U = random_conserved(rng, 1, 1)[0]
    b = basis_x(U, GAMMA)
    for k in range(3):
        w = project(b, 2.5 * b.right[:, k])
        expect = np.zeros(3)
        expect[k] = 2.5
        assert np.max(np.abs(w - expect)) < 1e-12


def test_contact_jump_is_pure_middle_field():
    # (drho, 0, 0) at a u=0 average state projects onto field 2 only
    avg = to_conserved(np.array([1.2, 0.0, 1.0]), GAMMA)
    b = basis_x(avg, GAMMA)
    w = project(b, np.array([0.4, 0.0, 0.0]))
    assert abs(w[0]) < 1e-14 and abs(w[2]) < 1e-14
    assert np.isclose(w[1], 0.4)


def test_invalid_average_raises():
    with pytest.raises(NonPositivePressure):
        basis_x(np.array([1.0, 1.0, 0.5]), GAMMA)  # zero internal energy
