"""Registry of the fifteen benchmark problems: domains, initial data,
boundary specs, final times, gammas, exact solutions where available,
and L1 error/rate measurement."""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import MeshMismatch, UnknownProblem
from .fluxes import SchemeId
from .grid import BoundarySpec
from .semidisc import SourceTerm


@dataclass(frozen=True)
class ProblemSpec:
    id: int
    name: str
    dim: int
    domain: tuple                  # ((x0,x1)[, (y0,y1)])
    t_final: float
    gamma: float
    bc: BoundarySpec
    init: Callable                 # primitive field of position
    exact: Optional[Callable] = None   # primitive field of (position, t)
    source: SourceTerm = SourceTerm.NONE
    default_mesh: tuple = (100,)
    reference_mesh: Optional[tuple] = None
    reference_scheme: Optional[SchemeId] = None


@dataclass
class ErrorReport:
    l1_error: np.ndarray                 # per conserved variable
    rate: Optional[np.ndarray] = None
    conservation_drift: Optional[np.ndarray] = None
    wall_clock: float = 0.0

    @property
    def rho_l1(self):
        return float(self.l1_error[0])


def _ex1_init(x):
    rho = 1.0 + 0.2 * np.sin(2.0 * np.pi * x)
    return np.stack([rho, np.ones_like(x), np.ones_like(x)], axis=-1)


def _ex1_exact(x, t):
    rho = 1.0 + 0.2 * np.sin(2.0 * np.pi * (x - t))
    return np.stack([rho, np.ones_like(x), np.ones_like(x)], axis=-1)


def _ex2_init(x):
    rho = np.where(x < 0.5, 1.4, 1.0)
    return np.stack([rho, np.full_like(x, 0.1), np.ones_like(x)], axis=-1)


def _ex2_exact(x, t):
    rho = np.where(x < 0.5 + 0.1 * t, 1.4, 1.0)
    return np.stack([rho, np.full_like(x, 0.1), np.ones_like(x)], axis=-1)


def _ex3_init(x):
    rho = np.ones_like(x)
    u = np.full_like(x, -19.59745)
    p = np.where(x < 0.8, 1000.0, 0.01)
    return np.stack([rho, u, p], axis=-1)


def _ex4_init(x):
    rho = np.where(np.abs(x) < 0.25, 13.1538, np.where(x > 0.75, 1.3333, 1.0))
    u = np.where(x > 0.75, -0.3535, 0.0)
    p = np.where(x > 0.75, 1.5, 1.0)
    return np.stack([rho, u, p], axis=-1)


def _ex5_init(x):
    left = x < -4.0
    rho = np.where(left, 27.0 / 7.0, 1.0 + 0.2 * np.sin(5.0 * x))
    u = np.where(left, 4.0 * math.sqrt(35.0) / 9.0, 0.0)
    p = np.where(left, 31.0 / 3.0, 1.0)
    return np.stack([rho, u, p], axis=-1)


def _ex6_init(x):
    left = x < -4.5
    rho = np.where(left, 1.51695, 1.0 + 0.1 * np.sin(20.0 * x))
    u = np.where(left, 0.523346, 0.0)
    p = np.where(left, 1.805, 1.0)
    return np.stack([rho, u, p], axis=-1)


def _ex7_init(x, y):
    rho = 1.0 + 0.2 * np.sin(np.pi * (x + y))
    one = np.ones_like(x)
    return np.stack([rho, one, -0.7 * one, one], axis=-1)


def _ex7_exact(x, y, t):
    rho = 1.0 + 0.2 * np.sin(np.pi * (x + y - 0.3 * t))
    one = np.ones_like(x)
    return np.stack([rho, one, -0.7 * one, one], axis=-1)


_VORTEX_EPS = 5.0


def _vortex(x, y, gamma=1.4):
    r2 = x * x + y * y
    ex = np.exp(0.5 * (1.0 - r2))
    T = 1.0 - (gamma - 1.0) * _VORTEX_EPS ** 2 / (8.0 * gamma * np.pi ** 2) * ex * ex
    rho = T ** (1.0 / (gamma - 1.0))
    u = 1.0 - _VORTEX_EPS / (2.0 * np.pi) * ex * y
    v = 1.0 + _VORTEX_EPS / (2.0 * np.pi) * ex * x
    p = rho ** gamma
    return np.stack([rho, u, v, p], axis=-1)


def _ex8_init(x, y):
    return _vortex(x, y)


def _ex8_exact(x, y, t):
    # the vortex translates with unit velocity along both axes; wrap it
    # through the periodic box [-5, 5]^2
    xw = np.mod(x - t + 5.0, 10.0) - 5.0
    yw = np.mod(y - t + 5.0, 10.0) - 5.0
    return _vortex(xw, yw)


def _ex9_init(x, y):
    in_d = ((np.abs(x) < 0.1) & (y > 0.0) & (y < 0.02)) \
        | ((np.abs(x) < 0.02) & (y > 0.02) & (y < 0.1)) \
        | ((x + 0.02) ** 2 + (y - 0.02) ** 2 < 0.08 ** 2) \
        | ((x - 0.02) ** 2 + (y - 0.02) ** 2 < 0.08 ** 2)
    rho = np.where(in_d, 1.4, 1.0)
    zero = np.zeros_like(x)
    return np.stack([rho, zero, np.full_like(x, 0.2), np.ones_like(x)], axis=-1)


def _ex10_init(x, y):
    inside = x * x + y * y < 0.16
    rho = np.where(inside, 1.0, 0.125)
    p = np.where(inside, 1.0, 0.1)
    zero = np.zeros_like(x)
    return np.stack([rho, zero, zero, p], axis=-1)


def _ex11_init(x, y):
    inside = np.abs(x) + np.abs(y) < 0.15
    rho = np.where(inside, 0.125, 1.0)
    p = np.where(inside, 0.14, 1.0)
    zero = np.zeros_like(x)
    return np.stack([rho, zero, zero, p], axis=-1)


def _quadrants(x, y, cx, cy, ne, nw, sw, se):
    out = np.empty(x.shape + (4,))
    masks = [
        ((x > cx) & (y > cy), ne),
        ((x < cx) & (y > cy), nw),
        ((x < cx) & (y < cy), sw),
        ((x > cx) & (y < cy), se),
    ]
    # cell centers never sit exactly on the lines for the meshes used,
    # but fall back to the NE state if one does
    out[...] = np.asarray(ne, dtype=np.float64)
    for mask, state in masks:
        out[mask] = np.asarray(state, dtype=np.float64)
    return out


def _ex12_init(x, y):
    return _quadrants(x, y, 1.0, 1.0,
                      (1.5, 0.0, 0.0, 1.5),
                      (0.5323, 1.206, 0.0, 0.3),
                      (0.138, 1.206, 1.206, 0.029),
                      (0.5323, 0.0, 1.206, 0.3))


def _ex13_init(x, y):
    return _quadrants(x, y, 0.5, 0.5,
                      (1.0, 0.75, -0.5, 1.0),
                      (2.0, 0.75, 0.5, 1.0),
                      (1.0, -0.75, 0.5, 1.0),
                      (3.0, -0.75, -0.5, 1.0))


_KH_L = 0.00625


def _ex14_init(x, y):
    L = _KH_L
    rho = np.where(np.abs(y) < 0.25, 2.0, 1.0)
    u = np.where(
        y < -0.25, -0.5 + 0.5 * np.exp((y + 0.25) / L),
        np.where(y < 0.0, 0.5 - 0.5 * np.exp((-y - 0.25) / L),
                 np.where(y < 0.25, 0.5 - 0.5 * np.exp((y - 0.25) / L),
                          -0.5 + 0.5 * np.exp((0.25 - y) / L))))
    v = 0.01 * np.sin(4.0 * np.pi * x)
    p = np.full_like(x, 1.5)
    return np.stack([rho, u, v, p], axis=-1)


def _ex15_init(x, y, gamma=5.0 / 3.0):
    lower = y < 0.5
    rho = np.where(lower, 2.0, 1.0)
    p = np.where(lower, 2.0 * y + 1.0, y + 1.5)
    c = np.sqrt(gamma * p / rho)
    v = -0.025 * c * np.cos(8.0 * np.pi * x)
    zero = np.zeros_like(x)
    return np.stack([rho, zero, v, p], axis=-1)


def build_problem(pid):
    """Fully populated ProblemSpec for benchmark id 1..15."""
    if pid == 1:
        return ProblemSpec(1, "1-D accuracy test", 1, ((-1.0, 1.0),), 0.1, 1.4,
                           BoundarySpec.periodic(1), _ex1_init, _ex1_exact,
                           default_mesh=(100,))
    if pid == 2:
        return ProblemSpec(2, "moving contact wave", 1, ((0.0, 1.0),), 0.2, 1.4,
                           BoundarySpec.free(1), _ex2_init, _ex2_exact,
                           default_mesh=(200,))
    if pid == 3:
        return ProblemSpec(3, "stationary contact, shock, rarefaction", 1,
                           ((-1.0, 1.0),), 0.03, 1.4, BoundarySpec.free(1),
                           _ex3_init, default_mesh=(40,),
                           reference_mesh=(800,), reference_scheme=SchemeId.HLL)
    if pid == 4:
        return ProblemSpec(4, "shock-bubble interaction", 1, ((-1.0, 1.0),), 3.0,
                           1.4, BoundarySpec("wall", "free"), _ex4_init,
                           default_mesh=(200,),
                           reference_mesh=(4000,), reference_scheme=SchemeId.HLL)
    if pid == 5:
        return ProblemSpec(5, "shock-density wave interaction", 1,
                           ((-5.0, 5.0),), 5.0, 1.4, BoundarySpec.free(1),
                           _ex5_init, default_mesh=(400,),
                           reference_mesh=(8000,), reference_scheme=SchemeId.HLL)
    if pid == 6:
        return ProblemSpec(6, "shock-entropy wave interaction", 1,
                           ((-10.0, 5.0),), 5.0, 1.4, BoundarySpec.free(1),
                           _ex6_init, default_mesh=(1200,),
                           reference_mesh=(12000,), reference_scheme=SchemeId.HLL)
    if pid == 7:
        return ProblemSpec(7, "2-D accuracy test", 2,
                           ((-1.0, 1.0), (-1.0, 1.0)), 0.1, 1.4,
                           BoundarySpec.periodic(2), _ex7_init, _ex7_exact,
                           default_mesh=(100, 100))
    if pid == 8:
        return ProblemSpec(8, "2-D vortex evolution", 2,
                           ((-5.0, 5.0), (-5.0, 5.0)), 10.0, 1.4,
                           BoundarySpec.periodic(2), _ex8_init, _ex8_exact,
                           default_mesh=(100, 100))
    if pid == 9:
        return ProblemSpec(9, "2-D moving contact waves", 2,
                           ((-0.2, 0.2), (0.0, 0.8)), 2.0, 1.4,
                           BoundarySpec.free(2), _ex9_init,
                           default_mesh=(160, 320))
    if pid == 10:
        return ProblemSpec(10, "explosion", 2, ((-1.0, 1.0), (-1.0, 1.0)), 3.2,
                           1.4, BoundarySpec.free(2), _ex10_init,
                           default_mesh=(200, 200))
    if pid == 11:
        return ProblemSpec(11, "implosion", 2, ((0.0, 0.3), (0.0, 0.3)), 2.5,
                           1.4, BoundarySpec("wall", "wall", "wall", "wall"),
                           _ex11_init, default_mesh=(400, 400))
    if pid == 12:
        return ProblemSpec(12, "2-D Riemann problem, configuration 3", 2,
                           ((0.0, 1.2), (0.0, 1.2)), 1.0, 1.4,
                           BoundarySpec.free(2), _ex12_init,
                           default_mesh=(600, 600))
    if pid == 13:
        return ProblemSpec(13, "2-D Riemann problem, configuration 6", 2,
                           ((0.0, 1.0), (0.0, 1.0)), 1.0, 1.4,
                           BoundarySpec.free(2), _ex13_init,
                           default_mesh=(600, 600))
    if pid == 14:
        return ProblemSpec(14, "Kelvin-Helmholtz instability", 2,
                           ((-0.5, 0.5), (-0.5, 0.5)), 4.0, 1.4,
                           BoundarySpec.periodic(2), _ex14_init,
                           default_mesh=(256, 256))
    if pid == 15:
        return ProblemSpec(15, "Rayleigh-Taylor instability", 2,
                           ((0.0, 0.25), (0.0, 1.0)), 2.95, 5.0 / 3.0,
                           BoundarySpec("wall", "wall",
                                        ("dirichlet", (2.0, 0.0, 0.0, 1.0)),
                                        ("dirichlet", (1.0, 0.0, 0.0, 2.5))),
                           _ex15_init, source=SourceTerm.GRAVITY_RT,
                           default_mesh=(64, 256))
    raise UnknownProblem(f"no benchmark with id {pid!r}")


def l1_error(computed, truth, dx, dy=None):
    """Per-variable L1 norms: dx (dy) * sum |computed - truth|."""
    computed = np.asarray(computed)
    truth = np.asarray(truth)
    if computed.shape != truth.shape:
        raise MeshMismatch(f"shapes {computed.shape} vs {truth.shape}")
    vol = dx if dy is None else dx * dy
    axes = tuple(range(computed.ndim - 1))
    return vol * np.abs(computed - truth).sum(axis=axes)


def _nearest_indices(ref_centers, target_centers):
    ref_centers = np.asarray(ref_centers)
    idx = np.searchsorted(ref_centers, np.asarray(target_centers))
    idx = np.clip(idx, 1, len(ref_centers) - 1)
    left = ref_centers[idx - 1]
    right = ref_centers[idx]
    idx -= np.abs(target_centers - left) <= np.abs(right - target_centers)
    return idx


def restrict_reference(ref_centers, ref_values, target_centers):
    """Sample a fine-mesh reference at the nearest cell centers of a
    coarser target mesh (nested-mesh restriction/prolongation)."""
    ref_values = np.asarray(ref_values)
    if len(ref_centers) == 2:
        ix = _nearest_indices(ref_centers[0], target_centers[0])
        iy = _nearest_indices(ref_centers[1], target_centers[1])
        return ref_values[np.ix_(ix, iy)]
    idx = _nearest_indices(ref_centers[0], target_centers[0])
    return ref_values[idx]


def convergence_rate(err_coarse, err_fine, refinement=2.0):
    """log_refinement(E_coarse / E_fine)."""
    return np.log(np.asarray(err_coarse) / np.asarray(err_fine)) / np.log(refinement)
