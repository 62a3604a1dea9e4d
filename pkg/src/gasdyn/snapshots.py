"""Plain-text output formats: field snapshots and error/rate tables.

Both are self-describing ('# key value' headers) and byte-stable for
identical inputs, so runs can be diffed and downstream tooling stays
trivial.
"""

import io
import os

import numpy as np

from .state import to_primitive


def _fmt(x):
    return format(float(x), ".17g")


def write_snapshot(field, gamma, meta, path):
    """Write primitive interior values with a self-describing header.

    meta carries problem/scheme/order/time tags echoed into the header.
    Columns: x rho u p E (1-D) or x y rho u v p E (2-D), row-major.
    """
    U = field.interior()
    prim = to_primitive(U, gamma, check=False)
    buf = io.StringIO()
    buf.write("# gasdyn snapshot\n")
    header = dict(meta)
    header.setdefault("gamma", gamma)
    if field.ndim == 1:
        header.setdefault("mesh", f"{field.nx}")
        header.setdefault("columns", "x rho u p E")
    else:
        header.setdefault("mesh", f"{field.nx}x{field.ny}")
        header.setdefault("columns", "x y rho u v p E")
    for key, val in header.items():
        buf.write(f"# {key} {val}\n")
    if field.ndim == 1:
        xs = field.centers_x()
        for i in range(field.nx):
            buf.write(" ".join([_fmt(xs[i]), _fmt(prim[i, 0]), _fmt(prim[i, 1]),
                                _fmt(prim[i, 2]), _fmt(U[i, 2])]) + "\n")
    else:
        xs, ys = field.centers_x(), field.centers_y()
        for i in range(field.nx):
            for j in range(field.ny):
                buf.write(" ".join([
                    _fmt(xs[i]), _fmt(ys[j]), _fmt(prim[i, j, 0]),
                    _fmt(prim[i, j, 1]), _fmt(prim[i, j, 2]),
                    _fmt(prim[i, j, 3]), _fmt(U[i, j, 3])]) + "\n")
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as fh:
        fh.write(buf.getvalue())
    return path


def read_snapshot(path):
    """Inverse of write_snapshot: returns (header dict, data ndarray)."""
    header = {}
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].strip().split(None, 1)
                if len(parts) == 2:
                    header[parts[0]] = parts[1]
                continue
            rows.append([float(tok) for tok in line.split()])
    return header, np.asarray(rows)


def write_error_table(rows, meta, path):
    """Delimited error/rate table; one row per mesh.

    rows: sequence of (mesh_label, l1_error, rate_or_None).  Errors are
    printed with 3 significant digits (table style); full precision
    lives in the run manifests.
    """
    buf = io.StringIO()
    buf.write("# gasdyn error table\n")
    for key, val in dict(meta).items():
        buf.write(f"# {key} {val}\n")
    buf.write("mesh l1_error rate\n")
    for mesh, err, rate in rows:
        rate_s = "-" if rate is None else format(float(rate), ".3g")
        buf.write(f"{mesh} {float(err):.2e} {rate_s}\n")
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as fh:
        fh.write(buf.getvalue())
    return path


def read_error_table(path):
    """Returns (header dict, list of (mesh, error, rate-or-None))."""
    header = {}
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("mesh "):
                continue
            if line.startswith("#"):
                parts = line[1:].strip().split(None, 1)
                if len(parts) == 2:
                    header[parts[0]] = parts[1]
                continue
            mesh, err, rate = line.split()
            rows.append((mesh, float(err), None if rate == "-" else float(rate)))
    return header, rows
