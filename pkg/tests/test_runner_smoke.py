"""End-to-end smoke runs over the benchmark problems that the table and
robustness criteria do not already exercise: strong shocks with free
boundaries, the 1-D wall, the 2-D contact/Riemann setups, and the
gravity-driven configuration with Dirichlet tops and gamma = 5/3.
Meshes and final times are tiny; the point is that every registry entry
integrates, respects positivity, and reports sane diagnostics.
"""

import numpy as np
import pytest

from gasdyn.fluxes import SchemeId
from gasdyn.runner import RunConfig, run

CASES = [
    (2, 32, None, 0.05, 2),
    (3, 40, None, 0.005, 2),
    (4, 40, None, 0.05, 3),
    (5, 60, None, 0.05, 5),
    (6, 80, None, 0.05, 2),
    (9, 16, 32, 0.05, 2),
    (12, 24, 24, 0.02, 2),
    (13, 24, 24, 0.02, 5),
    (15, 8, 32, 0.05, 3),
]


@pytest.mark.parametrize("pid,nx,ny,tf,order", CASES)
def test_problem_integrates(pid, nx, ny, tf, order):
    res = run(RunConfig(problem=pid, scheme=SchemeId.LDCU, order=order,
                        nx=nx, ny=ny, t_final=tf,
                        dt_rule="cfl_p53" if order == 5 else "cfl"))
    assert res.status == "completed", (pid, res.failure)
    assert res.diagnostics.min_p > 0.0
    assert res.diagnostics.min_rho > 0.0
    assert np.all(np.isfinite(res.field.interior()))
    assert res.diagnostics.steps > 0


def test_example15_source_wired_into_rhs():
    # the configuration is hydrostatic (dp/dy = rho), so integrals stay
    # put; pin the source wiring by differencing the rhs with and
    # without it on the actual initial field
    from gasdyn.grid import fill_ghosts
    from gasdyn.problems import build_problem
    from gasdyn.runner import init_field
    from gasdyn.semidisc import SchemeConfig, SourceTerm, rhs

    spec = build_problem(15)
    fld = init_field(spec, 8, 32, order=2)
    fill_ghosts(fld, spec.bc, spec.gamma)
    cfg = SchemeConfig(SchemeId.HLL, 2)
    with_src = rhs(fld, cfg, spec.gamma, src=spec.source).copy()
    without = rhs(fld, cfg, spec.gamma, src=SourceTerm.NONE).copy()
    diff = with_src - without
    U = fld.interior()
    assert np.allclose(diff[..., 2], U[..., 0], rtol=1e-13)
    assert np.allclose(diff[..., 3], U[..., 2], rtol=1e-13)
    assert np.max(np.abs(diff[..., :2])) < 1e-13
    assert np.all(np.isfinite(with_src))


def test_snapshot_version_header(tmp_path):
    res = run(RunConfig(problem=2, scheme=SchemeId.HLL, order=1, nx=8,
                        t_final=0.01, out_dir=str(tmp_path)))
    from gasdyn.snapshots import read_snapshot

    header, _ = read_snapshot(res.snapshots[-1])
    assert "version" in header
