"""One-sided local speed-of-propagation estimates at interfaces."""

from typing import NamedTuple

import numpy as np

from .errors import NonPositiveDensity, NonPositivePressure
from .state import sound_speed


class SpeedPair(NamedTuple):
    a_minus: np.ndarray
    a_plus: np.ndarray


def _unpack(prim, gamma, side):
    prim = np.asarray(prim, dtype=np.float64)
    rho = prim[..., 0]
    un = prim[..., 1]
    p = prim[..., -1]
    if np.any(rho <= 0.0):
        raise NonPositiveDensity(where=side)
    if np.any(p <= 0.0):
        raise NonPositivePressure(where=side)
    return un, sound_speed(rho, p, gamma)


def speeds_plain(left, right, gamma):
    """Acoustic bounds: a+ = max(u+c of both sides), a- = min(u-c).

    left/right are primitive states (rho, u_n, p), with the velocity
    normal to the interface in slot 1 (2-D y-interfaces pass v there).
    """
    ul, cl = _unpack(left, gamma, "left")
    ur, cr = _unpack(right, gamma, "right")
    a_plus = np.maximum(ur + cr, ul + cl)
    a_minus = np.minimum(ur - cr, ul - cl)
    return SpeedPair(a_minus, a_plus)


def speeds_clamped(left, right, gamma):
    """speeds_plain with 0 included in the max/min (LDCU variant)."""
    am, ap = speeds_plain(left, right, gamma)
    return SpeedPair(np.minimum(am, 0.0), np.maximum(ap, 0.0))
