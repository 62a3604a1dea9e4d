"""Command-line driver.

Subcommands:
  run    one benchmark run (snapshots + manifest)
  sweep  a mesh-refinement ladder with an error/rate table
  table  reproduce the accuracy-table rows for problems 1, 7, or 8

Exit codes: 0 success, 2 usage error, 3 simulation failure (the failure
record is still written to the manifest).
"""

import argparse
import os
import sys

from .fluxes import SchemeId
from .runner import RunConfig, generate_reference, run, run_ladder
from .snapshots import write_error_table

EXIT_FAILURE = 3

_OUT_ENV = "GASDYN_OUTPUT_ROOT"


def _default_out():
    return os.environ.get(_OUT_ENV, "gasdyn_out")


def _add_run_args(p):
    p.add_argument("--problem", type=int, required=True, metavar="N",
                   help="benchmark id, 1..15")
    p.add_argument("--scheme", required=True,
                   choices=[s.value for s in SchemeId])
    p.add_argument("--order", type=int, required=True, choices=[1, 2, 3, 5])
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--cfl", type=float, default=0.45)
    p.add_argument("--theta", type=float, default=1.3)
    p.add_argument("--eps0", type=float, default=1e-12)
    p.add_argument("--dt-rule", choices=["cfl", "cfl-p53"], default="cfl")
    p.add_argument("--correction", choices=["flux", "point"], default="flux")
    p.add_argument("--t-final", type=float, default=None,
                   help="override the problem's final time")
    p.add_argument("--out", default=None, help=f"output dir (default ${_OUT_ENV} or ./gasdyn_out)")
    p.add_argument("--snapshots", default="",
                   help="comma-separated times for intermediate snapshots")
    p.add_argument("--reference", default=None, metavar="PATH",
                   help="reference snapshot to measure L1 errors against")


def _config_from_args(args, out_dir):
    snaps = tuple(float(t) for t in args.snapshots.split(",") if t.strip())
    return RunConfig(
        problem=args.problem,
        scheme=SchemeId.parse(args.scheme),
        order=args.order,
        nx=args.nx,
        ny=args.ny,
        cfl=args.cfl,
        theta=args.theta,
        eps0=args.eps0,
        dt_rule=args.dt_rule.replace("-", "_"),
        correction={"flux": "flux_based", "point": "point_based"}[args.correction],
        t_final=args.t_final,
        out_dir=out_dir,
        snapshot_times=snaps,
        reference=args.reference,
    )


def _cmd_run(args):
    out_dir = args.out or _default_out()
    res = run(_config_from_args(args, out_dir))
    if res.status == "failed":
        print(f"FAILED: {res.failure}", file=sys.stderr)
        return EXIT_FAILURE
    err = res.report.rho_l1
    msg = f"completed: {res.config.tag()}  steps={res.diagnostics.steps}"
    if err == err:  # has an exact solution
        msg += f"  rho_l1={err:.3e}"
    print(msg)
    return 0


def _cmd_sweep(args):
    out_dir = args.out or _default_out()
    meshes = [int(m) for m in args.meshes.split(",")]
    base = _config_from_args(args, out_dir)
    results, errors, rates = run_ladder(base, meshes)
    rows = [(m, e, r) for m, e, r in zip(meshes, errors, rates)]
    meta = {"problem": args.problem, "scheme": args.scheme,
            "order": args.order, "variable": "rho"}
    path = os.path.join(out_dir, f"sweep_{base.tag()}.dat")
    write_error_table(rows, meta, path)
    for m, e, r in rows:
        print(f"{m:>8}  {e:.2e}  {'-' if r is None else format(r, '.3g')}")
    print(f"table written to {path}")
    return 0


_TABLE_PROBLEMS = {1: (1, [100, 200, 400]), 2: (7, [100, 200]), 3: (8, [100, 200])}


def _cmd_table(args):
    out_dir = args.out or _default_out()
    pid, meshes = _TABLE_PROBLEMS[args.which]
    if args.meshes:
        meshes = [int(m) for m in args.meshes.split(",")]
    schemes = ([SchemeId.parse(s) for s in args.schemes.split(",")]
               if args.schemes else list(SchemeId))
    orders = ([int(o) for o in args.orders.split(",")] if args.orders
              else [1, 2, 3, 5])
    paths = []
    for scheme in schemes:
        for order in orders:
            dt_rule = "cfl_p53" if order == 5 else "cfl"
            base = RunConfig(problem=pid, scheme=scheme, order=order,
                             nx=meshes[0],
                             ny=meshes[0] if pid != 1 else None,
                             dt_rule=dt_rule, out_dir=out_dir)
            results, errors, rates = run_ladder(base, meshes)
            rows = [(m, e, r) for m, e, r in zip(meshes, errors, rates)]
            meta = {"problem": pid, "scheme": scheme.value, "order": order,
                    "variable": "rho"}
            path = os.path.join(out_dir, f"table{args.which}_{scheme.value}_o{order}.dat")
            write_error_table(rows, meta, path)
            paths.append(path)
            for m, e, r in rows:
                print(f"{scheme.value:>6} o{order} {m:>6}  {e:.2e}  "
                      f"{'-' if r is None else format(r, '.3g')}")
    print(f"{len(paths)} tables written to {out_dir}")
    return 0


def _cmd_reference(args):
    out_dir = args.out or _default_out()
    path = generate_reference(args.problem, out_dir)
    print(f"reference written to {path}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="gasdyn",
                                     description="Euler-equation scheme benchmarks")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one benchmark configuration")
    _add_run_args(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_sweep = sub.add_parser("sweep", help="run a mesh ladder and emit a rate table")
    _add_run_args(p_sweep)
    p_sweep.add_argument("--meshes", required=True,
                         help="comma-separated mesh sizes, e.g. 100,200,400")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_table = sub.add_parser("table", help="reproduce accuracy-table rows")
    p_table.add_argument("--which", type=int, required=True, choices=[1, 2, 3])
    p_table.add_argument("--schemes", default="",
                         help="comma-separated subset of schemes")
    p_table.add_argument("--orders", default="", help="comma-separated subset")
    p_table.add_argument("--meshes", default="", help="override mesh ladder")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_ref = sub.add_parser("reference", help="generate a fine-mesh reference run")
    p_ref.add_argument("--problem", type=int, required=True)
    p_ref.add_argument("--out", default=None)
    p_ref.set_defaults(func=_cmd_reference)

    return parser


def parse_cli(argv=None):
    return build_parser().parse_args(argv)


def main(argv=None):
    args = parse_cli(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
