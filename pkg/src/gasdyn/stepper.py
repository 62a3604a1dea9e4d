"""Three-stage third-order SSP Runge-Kutta time integration (forward
Euler for the first-order schemes) with CFL-based step selection and the
reduced-step rule for fifth-order accuracy runs."""

import time as _time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NonPositivePressure, SimulationFailure
from .semidisc import RhsWorkspace, SourceTerm, rhs
from .state import to_primitive


@dataclass(frozen=True)
class StepPolicy:
    t_final: float
    cfl: float = 0.45
    dt_rule: str = "cfl"         # or "cfl_p53"

    def __post_init__(self):
        if not 0.0 < self.cfl < 1.0:
            raise ValueError("cfl must lie in (0, 1)")
        if self.t_final <= 0.0:
            raise ValueError("t_final must be positive")
        if self.dt_rule not in ("cfl", "cfl_p53"):
            raise ValueError(f"unknown dt rule {self.dt_rule!r}")


def _scan(field, gamma):
    """(min_rho, min_p, s_x, s_y, bad_cell_index) in one kernel pass."""
    if field.ndim == 1:
        return _kernels.scan_1d(field.data, field.ghost, field.nx, gamma)
    return _kernels.scan_2d(field.data, field.ghost, field.nx, field.ny, gamma)


def max_speed(field, gamma):
    """max over cells of |u|+c (and |v|+c in 2-D)."""
    prim = to_primitive(field.interior(), gamma)
    c = np.sqrt(gamma * prim[..., -1] / prim[..., 0])
    s = float(np.max(np.abs(prim[..., 1]) + c))
    if field.ndim == 2:
        s = max(s, float(np.max(np.abs(prim[..., 2]) + c)))
    return s


def _next_stop(t, stops, t_final):
    for s in stops:
        if s > t + 1e-14 * max(1.0, abs(s)):
            return min(s, t_final)
    return t_final


def _dt_from_speeds(field, policy, sx, sy, t, stops):
    dmin = field.dx if field.ndim == 1 else min(field.dx, field.dy)
    if sx == 0.0 and (field.ndim == 1 or sy == 0.0):
        dt = policy.t_final - t
    else:
        dt = policy.cfl * field.dx / sx if sx > 0.0 else np.inf
        if field.ndim == 2 and sy > 0.0:
            dt = min(dt, policy.cfl * field.dy / sy)
    if policy.dt_rule == "cfl_p53":
        dt = min(dt, policy.cfl * dmin ** (5.0 / 3.0))
    target = _next_stop(t, stops, policy.t_final)
    if t + dt >= target:
        dt = target - t
    return dt


def select_dt(field, policy, gamma, t=0.0, stops=()):
    """CFL time step, optionally limited by the dx^(5/3) rule, clipped
    so the step lands exactly on the next stop time / t_final."""
    _, _, sx, sy, _ = _scan(field, gamma)
    return _dt_from_speeds(field, policy, sx, sy, t, sorted(stops))


def _combine(field, U0, L, dt, c0, c1):
    U = field.interior()
    if field.ndim == 1:
        _kernels.rk_combine_1d(U, U0, L, dt, c0, c1)
    else:
        _kernels.rk_combine_2d(U, U0, L, dt, c0, c1)


def ssp_rk3_step(field, dt, rhs_fn, fill_fn):
    """One SSP-RK3 step; fill_fn refreshes ghosts before each stage."""
    U0 = field.interior().copy()

    def stage(k):
        fill_fn(field)
        try:
            return rhs_fn(field)
        except NonPositivePressure as exc:
            exc.stage = k
            raise

    _combine(field, U0, stage(0), dt, 0.0, 1.0)
    _combine(field, U0, stage(1), dt, 0.75, 0.25)
    _combine(field, U0, stage(2), dt, 1.0 / 3.0, 2.0 / 3.0)
    return field


def euler_step(field, dt, rhs_fn, fill_fn):
    """One forward-Euler step (the first-order schemes' integrator)."""
    fill_fn(field)
    try:
        rate = rhs_fn(field)
    except NonPositivePressure as exc:
        exc.stage = 0
        raise
    _combine(field, field.interior(), rate, dt, 0.0, 1.0)
    return field


@dataclass
class RunDiagnostics:
    steps: int = 0
    min_rho: float = np.inf
    min_p: float = np.inf
    dt_min: float = np.inf
    dt_max: float = 0.0
    wall_clock: float = 0.0
    final_time: float = 0.0


def _raise_bad_cell(field, gamma, bad, step, t):
    """Localize a flagged cell and raise the structured failure."""
    if field.ndim == 1:
        cell = (int(bad),)
    else:
        cell = tuple(int(v) for v in divmod(int(bad), field.ny))
    U = field.interior()[cell]
    rho = U[0]
    if not np.all(np.isfinite(U)):
        reason = "non-finite state"
    elif rho <= 0.0:
        reason = "non-positive density"
    else:
        reason = "non-positive pressure"
    raise SimulationFailure(reason, step, t, cell=cell)


def integrate(field, bc, cfg, gamma, policy, src=SourceTerm.NONE,
              stops=(), on_stop=None, max_steps=50_000_000):
    """Advance field to policy.t_final; returns (field, diagnostics).

    stops are times hit exactly (dt clipping); on_stop(field, t) fires
    at each.  A blow-up raises SimulationFailure with a structured
    record instead of propagating NaNs.
    """
    from .grid import fill_ghosts

    t0 = _time.perf_counter()
    diag = RunDiagnostics()
    stops = sorted(set(list(stops) + [policy.t_final]))
    t = 0.0
    ws = RhsWorkspace(field, cfg)
    # first-order schemes advance with forward Euler, the higher-order
    # ones with SSP-RK3
    step_fn = euler_step if cfg.order == 1 else ssp_rk3_step

    def fill(f):
        fill_ghosts(f, bc, gamma)

    def rate(f):
        return rhs(f, cfg, gamma, src, ws)

    step = 0
    while t < policy.t_final - 1e-14 * max(1.0, policy.t_final):
        min_rho, min_p, sx, sy, bad = _scan(field, gamma)
        if bad >= 0:
            _raise_bad_cell(field, gamma, bad, step, t)
        diag.min_rho = min(diag.min_rho, min_rho)
        diag.min_p = min(diag.min_p, min_p)
        dt = _dt_from_speeds(field, policy, sx, sy, t, stops)
        if dt <= 0.0:
            raise SimulationFailure("non-positive time step", step, t)
        target = _next_stop(t, stops, policy.t_final)
        landed = t + dt >= target
        try:
            step_fn(field, dt, rate, fill)
        except NonPositivePressure as exc:
            raise SimulationFailure(
                f"interface state invalid: {exc}", step, t,
                stage=getattr(exc, "stage", None)) from exc
        t = target if landed else t + dt
        step += 1
        diag.steps = step
        diag.dt_min = min(diag.dt_min, dt)
        diag.dt_max = max(diag.dt_max, dt)
        if landed and on_stop is not None:
            on_stop(field, t)
        if step >= max_steps:
            raise SimulationFailure("step budget exhausted", step, t)
    min_rho, min_p, _, _, bad = _scan(field, gamma)
    if bad >= 0:
        _raise_bad_cell(field, gamma, bad, step, t)
    diag.min_rho = min(diag.min_rho, min_rho)
    diag.min_p = min(diag.min_p, min_p)
    diag.final_time = t
    diag.wall_clock = _time.perf_counter() - t0
    return field, diag
