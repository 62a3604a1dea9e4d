"""Euler state conversions, physical fluxes, and Jacobian eigenvalues.

Conserved vectors are numpy arrays with components along the last axis:
(rho, rho*u, E) in 1-D and (rho, rho*u, rho*v, E) in 2-D.  Primitive
vectors carry (rho, u, p) and (rho, u, v, p).  All functions take the
specific heat ratio gamma as a run-scoped parameter.
"""

import numpy as np

from .errors import NonPositiveDensity, NonPositivePressure


def sound_speed(rho, p, gamma):
    """c = sqrt(gamma p / rho)."""
    return np.sqrt(gamma * p / rho)


def _check_positive(rho, p, where):
    rho = np.asarray(rho)
    if np.any(rho <= 0.0) or np.any(np.isnan(rho)):
        idx = int(np.argmin(np.where(np.isnan(rho), -np.inf, rho)))
        raise NonPositiveDensity(where=f"{where}[{idx}]", value=float(rho.flat[idx]))
    if p is not None:
        p = np.asarray(p)
        if np.any(p <= 0.0) or np.any(np.isnan(p)):
            idx = int(np.argmin(np.where(np.isnan(p), -np.inf, p)))
            raise NonPositivePressure(where=f"{where}[{idx}]", value=float(p.flat[idx]))


def to_primitive(U, gamma, check=True):
    """Conserved -> primitive, EOS p = (gamma-1)(E - kinetic energy).

    Raises NonPositiveDensity / NonPositivePressure on invalid states
    unless check=False.
    """
    U = np.asarray(U, dtype=np.float64)
    rho = U[..., 0]
    if check:
        _check_positive(rho, None, "state")
    if U.shape[-1] == 3:
        u = U[..., 1] / rho
        p = (gamma - 1.0) * (U[..., 2] - 0.5 * rho * u * u)
        prim = np.stack([rho, u, p], axis=-1)
    else:
        u = U[..., 1] / rho
        v = U[..., 2] / rho
        p = (gamma - 1.0) * (U[..., 3] - 0.5 * rho * (u * u + v * v))
        prim = np.stack([rho, u, v, p], axis=-1)
    if check:
        _check_positive(rho, prim[..., -1], "state")
    return prim


def to_conserved(prim, gamma):
    """Primitive -> conserved (inverse of to_primitive)."""
    prim = np.asarray(prim, dtype=np.float64)
    rho = prim[..., 0]
    if prim.shape[-1] == 3:
        u, p = prim[..., 1], prim[..., 2]
        E = p / (gamma - 1.0) + 0.5 * rho * u * u
        return np.stack([rho, rho * u, E], axis=-1)
    u, v, p = prim[..., 1], prim[..., 2], prim[..., 3]
    E = p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)
    return np.stack([rho, rho * u, rho * v, E], axis=-1)


def physical_flux_x(U, gamma, check=True):
    """F(U): (rho u, rho u^2 + p, [rho u v,] u(E+p))."""
    U = np.asarray(U, dtype=np.float64)
    prim = to_primitive(U, gamma, check=check)
    rho = prim[..., 0]
    u = prim[..., 1]
    p = prim[..., -1]
    E = U[..., -1]
    if U.shape[-1] == 3:
        return np.stack([rho * u, rho * u * u + p, u * (E + p)], axis=-1)
    v = prim[..., 2]
    return np.stack([rho * u, rho * u * u + p, rho * u * v, u * (E + p)], axis=-1)


def physical_flux_y(U, gamma, check=True):
    """G(U): (rho v, rho u v, rho v^2 + p, v(E+p)); 2-D only."""
    U = np.asarray(U, dtype=np.float64)
    if U.shape[-1] != 4:
        raise ValueError("physical_flux_y needs 2-D states (4 components)")
    prim = to_primitive(U, gamma, check=check)
    rho, u, v, p = prim[..., 0], prim[..., 1], prim[..., 2], prim[..., 3]
    E = U[..., 3]
    return np.stack([rho * v, rho * u * v, rho * v * v + p, v * (E + p)], axis=-1)


def eigenvalues_x(U, gamma):
    """Ascending eigenvalues of dF/dU: (u-c, u[, u], u+c)."""
    prim = to_primitive(U, gamma)
    rho, u, p = prim[..., 0], prim[..., 1], prim[..., -1]
    c = sound_speed(rho, p, gamma)
    if np.asarray(U).shape[-1] == 3:
        return np.stack([u - c, u, u + c], axis=-1)
    return np.stack([u - c, u, u, u + c], axis=-1)


def eigenvalues_y(U, gamma):
    """Ascending eigenvalues of dG/dU: (v-c, v, v, v+c); 2-D only."""
    U = np.asarray(U)
    if U.shape[-1] != 4:
        raise ValueError("eigenvalues_y needs 2-D states (4 components)")
    prim = to_primitive(U, gamma)
    rho, v, p = prim[..., 0], prim[..., 2], prim[..., 3]
    c = sound_speed(rho, p, gamma)
    return np.stack([v - c, v, v, v + c], axis=-1)
