"""Spatial right-hand sides.

Orders 1-2 evolve cell averages through the FV flux difference; orders
3 and 5 evolve point values through the A-WENO finite-difference flux,
which is the FV flux plus high-order correction terms.  2-D works
dimension by dimension; each direction runs through one fused kernel
pass (reconstruction, validity checks with positivity fallback, and the
interface flux in a single sweep).
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NonPositivePressure
from .fluxes import EPS0_DEFAULT, SchemeId
from .grid import GHOST_WIDTH

_SCHEME_CODE = {SchemeId.HLL: 0, SchemeId.HLLC: 1, SchemeId.TV: 2,
                SchemeId.LDCU: 3, SchemeId.LCDCU: 4}

# extra interfaces beyond [G, G+n] needed by the flux-based corrections
_HALO = {1: 0, 2: 0, 3: 1, 5: 2}


class SourceTerm(enum.Enum):
    NONE = "none"
    GRAVITY_RT = "gravity_rt"


@dataclass(frozen=True)
class SchemeConfig:
    scheme: SchemeId
    order: int
    theta: float = 1.3
    eps0: float = EPS0_DEFAULT
    correction: str = "flux_based"   # or "point_based"

    def __post_init__(self):
        if self.order not in (1, 2, 3, 5):
            raise ValueError(f"order must be one of 1,2,3,5, got {self.order}")
        if self.correction not in ("flux_based", "point_based"):
            raise ValueError(f"unknown correction variant {self.correction!r}")

    @property
    def ghost(self):
        return GHOST_WIDTH[self.order]


class RhsWorkspace:
    """Reusable flux/rate/transpose buffers for one field shape and order."""

    def __init__(self, field, cfg):
        g = field.ghost
        h = _HALO[cfg.order]
        if field.ndim == 1:
            self.Fx = np.empty((1, field.nx + 1 + 2 * h, 3))
            self.rate = np.empty((field.nx, 3))
        else:
            nxt = field.nx + 2 * g
            self.Wx = np.empty((field.ny, nxt, 4))
            self.Fx = np.empty((field.ny, field.nx + 1 + 2 * h, 4))
            self.Fy = np.empty((field.nx, field.ny + 1 + 2 * h, 4))
            self.rate = np.empty((field.nx, field.ny, 4))


def _point_flux_dir(W, iu, iv, gamma):
    """Physical directional flux of point values W (..., nv)."""
    rho = W[..., 0]
    E = W[..., -1]
    if W.shape[-1] == 3:
        un = W[..., 1] / rho
        p = (gamma - 1.0) * (E - 0.5 * rho * un * un)
        return np.stack([W[..., 1], W[..., 1] * un + p, un * (E + p)], axis=-1)
    un = W[..., iu] / rho
    ut = W[..., iv] / rho
    p = (gamma - 1.0) * (E - 0.5 * rho * (un * un + ut * ut))
    return np.stack(
        [W[..., iu], W[..., iu] * un + p, W[..., iu] * ut, un * (E + p)], axis=-1)


def _assemble_h(F, W, iu, iv, cfg, gamma, n, g, h):
    """Numerical flux H on the central n+1 interfaces from the FV fluxes."""
    if cfg.order in (1, 2):
        return F
    if cfg.correction == "flux_based":
        if cfg.order == 3:
            F0 = F[:, 1:-1]
            return F0 - (F[:, :-2] - 2.0 * F0 + F[:, 2:]) / 24.0
        F0 = F[:, 2:-2]
        Fm2, Fm1 = F[:, :-4], F[:, 1:-3]
        Fp1, Fp2 = F[:, 3:-1], F[:, 4:]
        return (F0
                - (-Fm2 + 16.0 * Fm1 - 30.0 * F0 + 16.0 * Fp1 - Fp2) / 288.0
                + 7.0 / 5760.0 * (Fm2 - 4.0 * Fm1 + 6.0 * F0 - 4.0 * Fp1 + Fp2))
    # point-based corrections from physical fluxes of the point values
    Fc = F[:, h:F.shape[1] - h]
    P = _point_flux_dir(W, iu, iv, gamma)
    if cfg.order == 3:
        return Fc - (P[:, g - 2:g + n - 1] - P[:, g - 1:g + n]
                     - P[:, g:g + n + 1] + P[:, g + 1:g + n + 2]) / 48.0
    Pm3 = P[:, g - 3:g + n - 2]
    Pm2 = P[:, g - 2:g + n - 1]
    Pm1 = P[:, g - 1:g + n]
    P0 = P[:, g:g + n + 1]
    Pp1 = P[:, g + 1:g + n + 2]
    Pp2 = P[:, g + 2:g + n + 3]
    return (Fc
            - (-5.0 * Pm3 + 39.0 * Pm2 - 34.0 * Pm1 - 34.0 * P0
               + 39.0 * Pp1 - 5.0 * Pp2) / 1152.0
            + 7.0 / 11520.0 * (Pm3 - 3.0 * Pm2 + 2.0 * Pm1 + 2.0 * P0
                               - 3.0 * Pp1 + Pp2))


def _run_pass(W, iu, iv, cfg, gamma, n, g, F, axis_name):
    h = _HALO[cfg.order]
    klo, khi = g - h, g + n + h
    scheme = _SCHEME_CODE[cfg.scheme]
    nv = W.shape[2]
    if cfg.order in (1, 2):
        if nv == 3:
            bad = _kernels.pass_fv_3(W, scheme, cfg.order, gamma, cfg.theta,
                                     cfg.eps0, klo, khi, F)
        else:
            bad = _kernels.pass_fv_4(W, iu, iv, scheme, cfg.order, gamma,
                                     cfg.theta, cfg.eps0, klo, khi, F)
    else:
        weps = _kernels.WENO3_EPS if cfg.order == 3 else _kernels.WENO_EPS
        if nv == 3:
            bad = _kernels.pass_weno_3(W, scheme, cfg.order == 5, gamma,
                                       cfg.eps0, weps, klo, khi, F)
        else:
            bad = _kernels.pass_weno_4(W, iu, iv, scheme, cfg.order == 5,
                                       gamma, cfg.eps0, weps, klo, khi, F)
    if bad >= 0:
        line, cell = divmod(int(bad), W.shape[1])
        raise NonPositivePressure(
            where=f"{axis_name}-pass cell {cell - g} of line {line}")
    return _assemble_h(F, W, iu, iv, cfg, gamma, n, g, h)


def apply_source(U_interior, src, rate):
    """Add the Rayleigh-Taylor gravity source (0, 0, rho, rho*v)."""
    if src is SourceTerm.GRAVITY_RT:
        rate[..., 2] += U_interior[..., 0]
        rate[..., 3] += U_interior[..., 2]
    return rate


def rhs(field, cfg, gamma, src=SourceTerm.NONE, ws=None):
    """Spatial rate of change on the interior; ghosts must be filled."""
    g = field.ghost
    if g < cfg.ghost:
        raise ValueError(f"field ghost width {g} < required {cfg.ghost}")
    if ws is None:
        ws = RhsWorkspace(field, cfg)
    if field.ndim == 1:
        W = field.data[np.newaxis, :, :]
        H = _run_pass(W, 1, 1, cfg, gamma, field.nx, g, ws.Fx, "x")[0]
        return -(H[1:] - H[:-1]) / field.dx
    nx, ny = field.nx, field.ny
    rate = ws.rate
    rate[...] = 0.0
    # x-direction: lines are the interior y-rows, copied contiguous so
    # the stencil sweeps stay cache-friendly
    np.copyto(ws.Wx, field.data[:, g:g + ny, :].transpose(1, 0, 2))
    Hx = _run_pass(ws.Wx, 1, 2, cfg, gamma, nx, g, ws.Fx, "x")
    _kernels.rate_x_4(np.ascontiguousarray(Hx), field.dx, rate)
    # y-direction: lines are the interior x-rows (contiguous view)
    Wy = field.data[g:g + nx, :, :]
    Hy = _run_pass(Wy, 2, 1, cfg, gamma, ny, g, ws.Fy, "y")
    _kernels.rate_y_4(np.ascontiguousarray(Hy), field.dy, rate)
    if src is not SourceTerm.NONE:
        apply_source(field.interior(), src, rate)
    return rate


def rhs_fv(field, cfg, gamma, src=SourceTerm.NONE, ws=None):
    """FV semidiscretization (orders 1-2)."""
    if cfg.order not in (1, 2):
        raise ValueError("rhs_fv is the order-1/2 path")
    return rhs(field, cfg, gamma, src, ws)


def rhs_awenofd(field, cfg, gamma, src=SourceTerm.NONE, ws=None):
    """A-WENO FD semidiscretization with correction terms (orders 3/5)."""
    if cfg.order not in (3, 5):
        raise ValueError("rhs_awenofd is the order-3/5 path")
    return rhs(field, cfg, gamma, src, ws)
