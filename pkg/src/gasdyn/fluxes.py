"""The five interface numerical fluxes: HLL, HLLC, TV, LDCU, LCDCU.

Each function maps left/right one-sided conserved interface values to a
numerical flux vector.  Inputs may be single states (shape (3,) or (4,))
or batches (..., nvar).  2-D kernels exist in x- and y-direction form;
the y-direction reuses the x-kernels through the exact momentum swap
G(U) = P F(P U) with P exchanging rho*u and rho*v.
"""

import enum
import logging
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import NonPositiveDensity, NonPositivePressure
from .speeds import SpeedPair

log = logging.getLogger(__name__)

EPS0_DEFAULT = 1e-12

_SWAP_XY = np.array([0, 2, 1, 3])


class SchemeId(enum.Enum):
    HLL = "hll"
    HLLC = "hllc"
    TV = "tv"
    LDCU = "ldcu"
    LCDCU = "lcdcu"

    @classmethod
    def parse(cls, name):
        return cls(str(name).lower())


class TvSplitParts(NamedTuple):
    advect: np.ndarray
    pressure: np.ndarray

    @property
    def total(self):
        return self.advect + self.pressure


_hllc_fallback_logged = False


def _as_batch(left, right, axis):
    left = np.ascontiguousarray(np.asarray(left, dtype=np.float64))
    right = np.ascontiguousarray(np.asarray(right, dtype=np.float64))
    if left.shape != right.shape:
        raise ValueError("left/right shapes differ")
    nv = left.shape[-1]
    if nv not in (3, 4):
        raise ValueError("states must have 3 or 4 components")
    if axis == "y" and nv != 4:
        raise ValueError("y-direction fluxes need 2-D states")
    shape = left.shape
    UL = left.reshape(-1, nv)
    UR = right.reshape(-1, nv)
    if axis == "y":
        UL = np.ascontiguousarray(UL[:, _SWAP_XY])
        UR = np.ascontiguousarray(UR[:, _SWAP_XY])
    return UL, UR, nv, shape


def _check_pair(UL, UR, gamma, nv):
    bad = (_kernels.first_invalid_3 if nv == 3 else _kernels.first_invalid_4)(UL, UR, gamma)
    if bad >= 0:
        raise NonPositivePressure(where=f"interface pair {bad}")


def _restore(out, axis, shape):
    if axis == "y":
        out = out[:, _SWAP_XY]
    return out.reshape(shape)


def _speed_arrays(speeds, M, check_degenerate=False):
    am = np.ascontiguousarray(np.broadcast_to(np.asarray(speeds.a_minus, dtype=np.float64).reshape(-1), (M,)))
    ap = np.ascontiguousarray(np.broadcast_to(np.asarray(speeds.a_plus, dtype=np.float64).reshape(-1), (M,)))
    if check_degenerate and np.any(ap - am <= 0.0):
        # kernels fall back to F(U-) there; the case is unreachable for
        # valid states, so surface it
        log.warning("degenerate speed pair (a+ <= a-) at %d interface(s)",
                    int(np.sum(ap - am <= 0.0)))
    return am, ap


def hll_flux(left, right, speeds, gamma, axis="x"):
    """Three-case HLL flux; speeds from speeds_plain."""
    UL, UR, nv, shape = _as_batch(left, right, axis)
    _check_pair(UL, UR, gamma, nv)
    am, ap = _speed_arrays(speeds, UL.shape[0], check_degenerate=True)
    out = np.empty_like(UL)
    if nv == 3:
        _kernels.hll_batch_3(UL, UR, am, ap, gamma, out)
    else:
        _kernels.hll_batch_4(UL, UR, am, ap, gamma, out)
    return _restore(out, axis, shape)


def hllc_flux(left, right, speeds, gamma, axis="x"):
    """HLLC flux with star states; degenerate star speed falls back to HLL."""
    global _hllc_fallback_logged
    UL, UR, nv, shape = _as_batch(left, right, axis)
    _check_pair(UL, UR, gamma, nv)
    am, ap = _speed_arrays(speeds, UL.shape[0])
    out = np.empty_like(UL)
    if nv == 3:
        nfall = _kernels.hllc_batch_3(UL, UR, am, ap, gamma, out)
    else:
        nfall = _kernels.hllc_batch_4(UL, UR, am, ap, gamma, out)
    if nfall and not _hllc_fallback_logged:
        log.warning("HLLC star speed degenerate at %d interface(s); used HLL", nfall)
        _hllc_fallback_logged = True
    return _restore(out, axis, shape)


def tv_flux(left, right, gamma, axis="x"):
    """TV splitting; returns (advection, pressure) parts, total = sum."""
    UL, UR, nv, shape = _as_batch(left, right, axis)
    _check_pair(UL, UR, gamma, nv)
    outA = np.empty_like(UL)
    outP = np.empty_like(UL)
    if nv == 3:
        _kernels.tv_batch_3(UL, UR, gamma, outA, outP)
    else:
        _kernels.tv_batch_4(UL, UR, gamma, outA, outP)
    return TvSplitParts(_restore(outA, axis, shape), _restore(outP, axis, shape))


def ldcu_flux(left, right, speeds, gamma, axis="x"):
    """Low-dissipation central-upwind flux; speeds from speeds_clamped."""
    UL, UR, nv, shape = _as_batch(left, right, axis)
    _check_pair(UL, UR, gamma, nv)
    am, ap = _speed_arrays(speeds, UL.shape[0], check_degenerate=True)
    out = np.empty_like(UL)
    if nv == 3:
        _kernels.ldcu_batch_3(UL, UR, am, ap, gamma, out)
    else:
        _kernels.ldcu_batch_4(UL, UR, am, ap, gamma, out)
    return _restore(out, axis, shape)


def lcdcu_flux(left, right, avg, gamma, eps0=EPS0_DEFAULT, axis="x"):
    """Local characteristic decomposition-based central-upwind flux.

    avg is the interface state used for the eigenbasis (arithmetic mean
    of the pair in the solver paths).
    """
    UL, UR, nv, shape = _as_batch(left, right, axis)
    Ua, _, _, _ = _as_batch(avg, avg, axis)
    _check_pair(UL, UR, gamma, nv)
    _check_pair(Ua, Ua, gamma, nv)
    out = np.empty_like(UL)
    if nv == 3:
        _kernels.lcdcu_batch_3(UL, UR, Ua, gamma, eps0, out)
    else:
        _kernels.lcdcu_batch_4(UL, UR, Ua, gamma, eps0, out)
    return _restore(out, axis, shape)


# convenience aliases matching the per-direction naming used in the tests
def ldcu_flux_1d(left, right, speeds, gamma):
    return ldcu_flux(left, right, speeds, gamma, axis="x")


def ldcu_flux_2d_x(left, right, speeds, gamma):
    return ldcu_flux(left, right, speeds, gamma, axis="x")


def ldcu_flux_2d_y(left, right, speeds, gamma):
    return ldcu_flux(left, right, speeds, gamma, axis="y")


def fv_flux_batch(scheme, UL, UR, gamma, eps0=EPS0_DEFAULT):
    """Directional FV flux on flat (M, nvar) batches; solver hot path.

    States are in directional component order (2-D y-callers permute).
    Speeds follow the per-scheme choices: plain for HLL/HLLC, clamped
    for LDCU, per-field clamped eigenvalues inside LCDCU, none for TV.
    """
    nv = UL.shape[1]
    M = UL.shape[0]
    out = np.empty_like(UL)
    if scheme in (SchemeId.HLL, SchemeId.HLLC, SchemeId.LDCU):
        am = np.empty(M)
        ap = np.empty(M)
        clamp = scheme is SchemeId.LDCU
        if nv == 3:
            _kernels.speeds_batch_3(UL, UR, gamma, clamp, am, ap)
        else:
            _kernels.speeds_batch_4(UL, UR, gamma, clamp, am, ap)
    if scheme is SchemeId.HLL:
        (_kernels.hll_batch_3 if nv == 3 else _kernels.hll_batch_4)(UL, UR, am, ap, gamma, out)
    elif scheme is SchemeId.HLLC:
        (_kernels.hllc_batch_3 if nv == 3 else _kernels.hllc_batch_4)(UL, UR, am, ap, gamma, out)
    elif scheme is SchemeId.LDCU:
        (_kernels.ldcu_batch_3 if nv == 3 else _kernels.ldcu_batch_4)(UL, UR, am, ap, gamma, out)
    elif scheme is SchemeId.TV:
        outP = np.empty_like(UL)
        (_kernels.tv_batch_3 if nv == 3 else _kernels.tv_batch_4)(UL, UR, gamma, out, outP)
        out += outP
    elif scheme is SchemeId.LCDCU:
        Ua = 0.5 * (UL + UR)
        (_kernels.lcdcu_batch_3 if nv == 3 else _kernels.lcdcu_batch_4)(UL, UR, Ua, gamma, eps0, out)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    return out
