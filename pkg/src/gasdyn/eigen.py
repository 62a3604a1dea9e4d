"""Analytic eigendecomposition of the Euler Jacobians at an average state.

The 2-D repeated eigenvalue (u, u) uses the fixed convention (entropy
field, then shear field) so characteristic projections are reproducible.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NonPositivePressure
from .state import sound_speed, to_primitive

# permutation swapping the two momentum components of a 2-D state
_SWAP_XY = np.array([0, 2, 1, 3])


@dataclass(frozen=True)
class EigenBasis:
    right: np.ndarray    # columns are right eigenvectors
    left: np.ndarray     # rows are left eigenvectors (right^-1)
    lambdas: np.ndarray  # ascending eigenvalues


def basis_x(avg, gamma):
    """Eigenbasis of dF/dU at a conserved average state (1-D or 2-D)."""
    avg = np.asarray(avg, dtype=np.float64)
    prim = to_primitive(avg, gamma)
    rho, u, p = prim[0], prim[1], prim[-1]
    if p <= 0.0:
        raise NonPositivePressure(value=float(p))
    c = sound_speed(rho, p, gamma)
    d = avg.shape[0]
    R = np.empty((d, d))
    L = np.empty((d, d))
    if d == 3:
        _kernels._fill_basis3(rho, u, p, gamma, R, L)
        lam = np.array([u - c, u, u + c])
    else:
        v = prim[2]
        _kernels._fill_basis4(rho, u, v, p, gamma, R, L)
        lam = np.array([u - c, u, u, u + c])
    return EigenBasis(R, L, lam)


def basis_y(avg, gamma):
    """Eigenbasis of dG/dU; built from basis_x via the x<->y swap."""
    avg = np.asarray(avg, dtype=np.float64)
    if avg.shape[0] != 4:
        raise ValueError("basis_y needs a 2-D state (4 components)")
    bx = basis_x(avg[_SWAP_XY], gamma)
    return EigenBasis(bx.right[_SWAP_XY, :], bx.left[:, _SWAP_XY], bx.lambdas)


def project(basis, values):
    """Map state-space vectors into characteristic variables (rows)."""
    values = np.asarray(values, dtype=np.float64)
    return values @ basis.left.T


def unproject(basis, values):
    """Inverse of project."""
    values = np.asarray(values, dtype=np.float64)
    return values @ basis.right.T
