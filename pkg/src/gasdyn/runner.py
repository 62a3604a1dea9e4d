"""Run orchestration: configuration -> integrated field + structured
outputs (snapshots, error tables, JSON manifest, failure records)."""

import json
import os
import time
from dataclasses import dataclass, field as dc_field
from importlib.metadata import version as _pkg_version

import numpy as np

from .errors import SimulationFailure
from .fluxes import EPS0_DEFAULT, SchemeId
from .grid import GHOST_WIDTH, fill_ghosts, make_field
from .problems import ErrorReport, build_problem, l1_error
from .semidisc import SchemeConfig, SourceTerm
from .snapshots import write_snapshot
from .state import to_conserved
from .stepper import StepPolicy, integrate


def _version():
    try:
        return _pkg_version("gasdyn")
    except Exception:
        return "unknown"


@dataclass(frozen=True)
class RunConfig:
    problem: int
    scheme: SchemeId
    order: int
    nx: int
    ny: int = None
    cfl: float = 0.45
    theta: float = 1.3
    eps0: float = EPS0_DEFAULT
    dt_rule: str = "cfl"
    correction: str = "flux_based"
    t_final: float = None          # None -> the problem's own final time
    out_dir: str = None
    snapshot_times: tuple = ()
    reference: str = None          # snapshot to compare the final field to

    def tag(self):
        mesh = f"{self.nx}" if self.ny is None else f"{self.nx}x{self.ny}"
        return f"p{self.problem:02d}_{self.scheme.value}_o{self.order}_{mesh}"


@dataclass
class RunResult:
    config: RunConfig
    status: str                    # "completed" | "failed"
    field: object
    report: ErrorReport
    diagnostics: object
    failure: dict = None
    snapshots: list = dc_field(default_factory=list)
    manifest_path: str = None


def init_field(spec, nx, ny=None, order=2):
    """Sampled-at-centers initial field for a problem spec."""
    ghost = GHOST_WIDTH[order]
    field = make_field(spec.domain, nx, ny, ghost=ghost)
    if spec.dim == 1:
        prim = spec.init(field.centers_x())
    else:
        X, Y = np.meshgrid(field.centers_x(), field.centers_y(), indexing="ij")
        prim = spec.init(X, Y)
    field.interior()[...] = to_conserved(prim, spec.gamma)
    fill_ghosts(field, spec.bc, spec.gamma)
    return field


def exact_field(spec, field, t):
    """Exact conserved solution sampled at the field's cell centers."""
    if spec.exact is None:
        return None
    if spec.dim == 1:
        prim = spec.exact(field.centers_x(), t)
    else:
        X, Y = np.meshgrid(field.centers_x(), field.centers_y(), indexing="ij")
        prim = spec.exact(X, Y, t)
    return to_conserved(prim, spec.gamma)


def reference_field(spec, field, path):
    """Stored reference snapshot restricted to the field's cell centers."""
    from .problems import restrict_reference
    from .snapshots import read_snapshot

    header, data = read_snapshot(path)
    if spec.dim == 1:
        prim = data[:, 1:4]               # rho u p
        U = to_conserved(prim, spec.gamma)
        return restrict_reference((data[:, 0],), U, (field.centers_x(),))
    nx, ny = (int(v) for v in header["mesh"].split("x"))
    xs = data[::ny, 0]
    ys = data[:ny, 1]
    prim = data[:, 2:6].reshape(nx, ny, 4)  # rho u v p
    U = to_conserved(prim, spec.gamma)
    return restrict_reference((xs, ys), U,
                              (field.centers_x(), field.centers_y()))


def run(config):
    """Execute one benchmark run and (optionally) persist its outputs."""
    spec = build_problem(config.problem)
    ny = config.ny
    if spec.dim == 2 and ny is None:
        ny = config.nx
    if spec.dim == 1:
        ny = None
    field = init_field(spec, config.nx, ny, config.order)
    initial_integrals = field.integrals()
    cfg = SchemeConfig(config.scheme, config.order, theta=config.theta,
                       eps0=config.eps0, correction=config.correction)
    t_final = config.t_final if config.t_final is not None else spec.t_final
    policy = StepPolicy(t_final=t_final, cfl=config.cfl, dt_rule=config.dt_rule)

    snaps = []

    def on_stop(fld, t):
        if config.out_dir and any(abs(t - s) <= 1e-12 * max(1.0, abs(s))
                                  for s in config.snapshot_times):
            path = os.path.join(config.out_dir, f"{config.tag()}_t{t:g}.dat")
            write_snapshot(fld, spec.gamma, _snapshot_meta(config, spec, t), path)
            snaps.append(path)

    failure = None
    status = "completed"
    diag = None
    t_start = time.time()
    try:
        field, diag = integrate(field, spec.bc, cfg, spec.gamma, policy,
                                src=spec.source, stops=config.snapshot_times,
                                on_stop=on_stop)
    except SimulationFailure as exc:
        status = "failed"
        failure = exc.record()

    report = ErrorReport(l1_error=np.full(field.nvar, np.nan))
    if status == "completed":
        report.conservation_drift = field.integrals() - initial_integrals
        report.wall_clock = diag.wall_clock
        truth = exact_field(spec, field, t_final)
        if truth is None and config.reference:
            truth = reference_field(spec, field, config.reference)
        if truth is not None:
            report.l1_error = l1_error(field.interior(), truth, field.dx, field.dy)
        if config.out_dir:
            path = os.path.join(config.out_dir, f"{config.tag()}_final.dat")
            write_snapshot(field, spec.gamma,
                           _snapshot_meta(config, spec, t_final), path)
            snaps.append(path)

    result = RunResult(config, status, field, report, diag, failure, snaps)
    if config.out_dir:
        result.manifest_path = write_manifest(result, spec, time.time() - t_start)
    return result


def _snapshot_meta(config, spec, t):
    return {
        "problem": config.problem,
        "scheme": config.scheme.value,
        "order": config.order,
        "time": format(t, ".17g"),
        "gamma": spec.gamma,
        "version": _version(),
    }


def write_manifest(result, spec, elapsed):
    """JSON manifest, written once per run, last."""
    cfg = result.config
    diag = result.diagnostics
    manifest = {
        "config": {
            "problem": cfg.problem,
            "scheme": cfg.scheme.value,
            "order": cfg.order,
            "nx": cfg.nx,
            "ny": cfg.ny,
            "cfl": cfg.cfl,
            "theta": cfg.theta,
            "eps0": cfg.eps0,
            "dt_rule": cfg.dt_rule,
            "correction": cfg.correction,
            "t_final": cfg.t_final if cfg.t_final is not None else spec.t_final,
        },
        "version": _version(),
        "status": result.status,
        "diagnostics": None if diag is None else {
            "steps": diag.steps,
            "min_rho": diag.min_rho,
            "min_p": diag.min_p,
            "dt_min": diag.dt_min,
            "dt_max": diag.dt_max,
        },
        "errors": {
            "l1": [float(v) for v in result.report.l1_error],
            "conservation_drift": None if result.report.conservation_drift is None
            else [float(v) for v in result.report.conservation_drift],
        },
        "failure": result.failure,
        "snapshots": [os.path.basename(p) for p in result.snapshots],
        "timestamps": {"elapsed_seconds": elapsed,
                       "wall_clock": result.report.wall_clock,
                       "written_at": time.time()},
    }
    path = os.path.join(cfg.out_dir, f"{cfg.tag()}_manifest.json")
    os.makedirs(cfg.out_dir, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def run_ladder(base_config, meshes):
    """Run a refinement ladder; returns (results, rho errors, rates)."""
    import dataclasses

    results = []
    errors = []
    for n in meshes:
        res = run(dataclasses.replace(
            base_config, nx=n, ny=None if base_config.ny is None else n))
        if res.status != "completed":
            raise SimulationFailure(
                f"ladder run at mesh {n} failed: {res.failure}",
                res.failure.get("step", -1), res.failure.get("time", np.nan))
        results.append(res)
        errors.append(res.report.rho_l1)
    rates = [None]
    for i in range(1, len(errors)):
        ratio = meshes[i] / meshes[i - 1]
        rates.append(float(np.log(errors[i - 1] / errors[i]) / np.log(ratio)))
    return results, errors, rates


def generate_reference(pid, out_dir, scheme=None, mesh=None, order=1):
    """Run the problem's reference configuration and persist the field."""
    spec = build_problem(pid)
    scheme = scheme or spec.reference_scheme or SchemeId.HLL
    mesh = mesh or spec.reference_mesh or spec.default_mesh
    nx = mesh[0]
    ny = mesh[1] if len(mesh) > 1 else None
    cfg = RunConfig(problem=pid, scheme=scheme, order=order, nx=nx, ny=ny,
                    out_dir=out_dir)
    res = run(cfg)
    if res.status != "completed":
        raise SimulationFailure(f"reference run failed: {res.failure}",
                                res.failure.get("step", -1),
                                res.failure.get("time", np.nan))
    return res.snapshots[-1]
