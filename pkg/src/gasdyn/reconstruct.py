"""One-sided interface point values at orders 1, 2, 3, and 5.

Orders 1-2 operate on cell averages (finite-volume side); orders 3 and 5
interpolate point values at interfaces (finite-difference side), on local
characteristic variables when driven from the semidiscretization.  The
functions here are the per-stencil building blocks; the batched solver
paths live in _kernels.
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import WENO3_EPS, _weno3_left, _weno5_left


@dataclass(frozen=True)
class LimiterConfig:
    theta: float = 1.3

    def __post_init__(self):
        if not 1.0 <= self.theta <= 2.0:
            raise ValueError(f"theta must lie in [1, 2], got {self.theta}")


def minmod(values):
    """min if all arguments are positive, max if all negative, else 0."""
    values = [np.asarray(v, dtype=np.float64) for v in values]
    if not values:
        raise ValueError("minmod of an empty list")
    stacked = np.stack(np.broadcast_arrays(*values))
    out = np.where(
        np.all(stacked > 0.0, axis=0),
        np.min(stacked, axis=0),
        np.where(np.all(stacked < 0.0, axis=0), np.max(stacked, axis=0), 0.0),
    )
    return out if out.ndim else float(out)


def slopes_minmod(um, u0, up, dx, cfg=LimiterConfig()):
    """Generalized minmod slope from three consecutive cell averages."""
    um, u0, up = (np.asarray(a, dtype=np.float64) for a in (um, u0, up))
    t = cfg.theta
    return minmod([t * (u0 - um) / dx, (up - um) / (2.0 * dx), t * (up - u0) / dx])


def reconstruct_order2(cells, dx, cfg=LimiterConfig()):
    """Piecewise-linear interface values from a row of cell averages.

    cells: (n, ...) with n >= 4.  Returns (minus, plus) at the n-3
    interfaces j+1/2 for j = 1..n-3 (both slopes computable).
    """
    cells = np.asarray(cells, dtype=np.float64)
    if cells.shape[0] < 4:
        raise ValueError("need at least 4 cells")
    s = slopes_minmod(cells[:-2], cells[1:-1], cells[2:], dx, cfg)
    minus = cells[1:-2] + 0.5 * dx * s[:-1]
    plus = cells[2:-1] - 0.5 * dx * s[1:]
    return minus, plus


def interpolate_weno3(stencil, eps=WENO3_EPS):
    """WENO-Z third-order interface values from 4 scalars.

    stencil = (w_{j-1}, w_j, w_{j+1}, w_{j+2}); returns (minus, plus) at
    the interface j+1/2.  eps floors the Z-weight denominators; the
    default keeps third order at symmetric smooth extrema, where the
    first-difference indicators vanish.
    """
    w = [float(v) for v in stencil]
    if len(w) != 4:
        raise ValueError("third-order interpolation needs 4 values")
    minus = _weno3_left(w[0], w[1], w[2], eps)
    plus = _weno3_left(w[3], w[2], w[1], eps)
    return minus, plus


def interpolate_weno5z(stencil):
    """WENO-Z fifth-order interface values from 6 scalars.

    stencil = (w_{j-2}, ..., w_{j+3}); returns (minus, plus) at j+1/2.
    """
    w = [float(v) for v in stencil]
    if len(w) != 6:
        raise ValueError("fifth-order interpolation needs 6 values")
    minus = _weno5_left(w[0], w[1], w[2], w[3], w[4])
    plus = _weno5_left(w[5], w[4], w[3], w[2], w[1])
    return minus, plus
