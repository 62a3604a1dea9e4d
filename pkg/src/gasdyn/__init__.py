"""Solvers for the 1-D and 2-D Euler equations of gas dynamics.

Five interface fluxes (HLL, HLLC, TV splitting, LDCU, LCDCU) at spatial
orders 1, 2, 3, and 5, integrated with SSP-RK3, plus a registry of
benchmark problems and a CLI harness that reproduces the accuracy
tables.
"""

from .fluxes import SchemeId
from .grid import BoundarySpec, Field
from .runner import RunConfig, run
from .semidisc import SchemeConfig, SourceTerm

__all__ = [
    "BoundarySpec",
    "Field",
    "RunConfig",
    "SchemeConfig",
    "SchemeId",
    "SourceTerm",
    "run",
]
