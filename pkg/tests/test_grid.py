import numpy as np
import pytest

from gasdyn.errors import InvalidPairing
from gasdyn.fluxes import SchemeId
from gasdyn.grid import BoundarySpec, Field, fill_ghosts, make_field
from gasdyn.state import to_conserved

from conftest import GAMMA, random_conserved

import test_fluxes


def _field_1d(n=4, ghost=2):
    f = make_field(((0.0, 1.0),), n, ghost=ghost)
    f.interior()[...] = np.arange(1, n + 1)[:, None] * np.array([1.0, 0.1, 3.0])
    return f


def test_periodic_wrap():
    f = _field_1d()
    fill_ghosts(f, BoundarySpec.periodic(1), GAMMA)
    g, n = f.ghost, f.nx
    # ghost[-1] (the cell just left of the interior) is interior[N-1]
    assert np.array_equal(f.data[g - 1], f.data[g + n - 1])
    assert np.array_equal(f.data[g + n], f.data[g])


def test_free_extrapolation():
    f = _field_1d()
    fill_ghosts(f, BoundarySpec.free(1), GAMMA)
    assert np.array_equal(f.data[0], f.data[f.ghost])
    assert np.array_equal(f.data[-1], f.data[f.ghost + f.nx - 1])


def test_wall_mirror():
    f = _field_1d()
    f.interior()[0] = [1.0, 2.0, 3.0]
    fill_ghosts(f, BoundarySpec("wall", "free"), GAMMA)
    assert np.allclose(f.data[f.ghost - 1], [1.0, -2.0, 3.0])
    # mirror order: second ghost layer mirrors the second interior cell
    assert np.allclose(f.data[f.ghost - 2, 0], f.data[f.ghost + 1, 0])
    # energy and |momentum| preserved exactly
    assert f.data[f.ghost - 1, 2] == f.data[f.ghost, 2]
    assert abs(f.data[f.ghost - 1, 1]) == abs(f.data[f.ghost, 1])


def test_dirichlet_conversion():
    state = (1.0, 0.0, 0.0, 2.5)
    gamma = 5.0 / 3.0
    f = make_field(((0.0, 1.0), (0.0, 1.0)), 4, 4, ghost=2)
    f.interior()[...] = to_conserved(np.array([2.0, 0.1, -0.2, 1.0]), gamma)
    bc = BoundarySpec("wall", "wall", ("dirichlet", (2.0, 0.0, 0.0, 1.0)),
                      ("dirichlet", state))
    fill_ghosts(f, bc, gamma)
    expect = to_conserved(np.asarray(state), gamma)
    assert np.allclose(f.data[:, -1, :], expect)
    assert np.allclose(f.data[:, 0, :],
                       to_conserved(np.array([2.0, 0.0, 0.0, 1.0]), gamma))


def test_idempotent(rng):
    f = make_field(((0.0, 1.0), (0.0, 1.0)), 6, 5, ghost=2)
    f.interior()[...] = random_conserved(rng, 30, 2).reshape(6, 5, 4)
    bc = BoundarySpec("wall", "free", "periodic", "periodic")
    fill_ghosts(f, bc, GAMMA)
    snap = f.data.copy()
    fill_ghosts(f, bc, GAMMA)
    assert np.array_equal(f.data, snap)


def test_periodic_pairing_validation():
    with pytest.raises(InvalidPairing):
        BoundarySpec("periodic", "free")


def test_wall_interface_flux_symmetry(rng):
    # mirror pair at the wall: zero mass and energy flux for every kernel
    prim = np.array([1.3, -0.8, 0.4, 1.2])
    UR = to_conserved(prim, GAMMA)
    UL = UR.copy()
    UL[1] = -UL[1]  # mirrored: normal momentum negated
    for scheme in SchemeId:
        out = test_fluxes.any_flux(scheme, UL, UR)
        assert abs(out[0]) < 1e-13, scheme
        assert abs(out[3]) < 1e-13, scheme


def test_mesh_metadata():
    f = make_field(((-1.0, 1.0), (0.0, 0.5)), 10, 5, ghost=3)
    assert f.dx == 0.2 and f.dy == 0.1
    assert np.isclose(f.centers_x()[0], -0.9)
    assert np.isclose(f.centers_y()[-1], 0.45)
    assert f.cell_volume() == pytest.approx(0.02)
    f.interior()[...] = 1.0
    assert np.allclose(f.integrals(), 2.0 * 0.5)
