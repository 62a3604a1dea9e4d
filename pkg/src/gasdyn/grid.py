"""Uniform 1-D/2-D meshes with ghost layers and the boundary conditions
used by the benchmark problems (periodic, free, solid wall, Dirichlet)."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidPairing
from .state import to_conserved

GHOST_WIDTH = {1: 1, 2: 2, 3: 5, 5: 5}


@dataclass
class Field:
    """Conserved-variable array over interior + ghost cells."""

    data: np.ndarray          # (nxt[, nyt], nvar)
    nx: int
    dx: float
    x0: float
    ghost: int
    ny: Optional[int] = None
    dy: Optional[float] = None
    y0: Optional[float] = None

    @property
    def ndim(self):
        return 1 if self.ny is None else 2

    @property
    def nvar(self):
        return self.data.shape[-1]

    def interior(self):
        g = self.ghost
        if self.ndim == 1:
            return self.data[g:g + self.nx]
        return self.data[g:g + self.nx, g:g + self.ny]

    def centers_x(self):
        return self.x0 + (np.arange(self.nx) + 0.5) * self.dx

    def centers_y(self):
        return self.y0 + (np.arange(self.ny) + 0.5) * self.dy

    def copy(self):
        return Field(self.data.copy(), self.nx, self.dx, self.x0, self.ghost,
                     self.ny, self.dy, self.y0)

    def cell_volume(self):
        return self.dx if self.ndim == 1 else self.dx * self.dy

    def integrals(self):
        """Domain integrals of the conserved variables."""
        axes = tuple(range(self.ndim))
        return self.interior().sum(axis=axes) * self.cell_volume()


def make_field(domain, nx, ny=None, ghost=2):
    """Allocate a zeroed field over domain = ((x0,x1)[, (y0,y1)])."""
    (x0, x1) = domain[0]
    dx = (x1 - x0) / nx
    if ny is None:
        data = np.zeros((nx + 2 * ghost, 3))
        return Field(data, nx, dx, x0, ghost)
    (y0, y1) = domain[1]
    dy = (y1 - y0) / ny
    data = np.zeros((nx + 2 * ghost, ny + 2 * ghost, 4))
    return Field(data, nx, dx, x0, ghost, ny, dy, y0)


@dataclass(frozen=True)
class BoundarySpec:
    """Per-side conditions; each is 'periodic', 'free', 'wall', or
    ('dirichlet', primitive-state tuple)."""

    left: object = "free"
    right: object = "free"
    bottom: object = None
    top: object = None

    def __post_init__(self):
        for lo, hi, ax in ((self.left, self.right, "x"), (self.bottom, self.top, "y")):
            if (lo == "periodic") != (hi == "periodic"):
                raise InvalidPairing(f"periodic must be paired on both {ax}-sides")

    @staticmethod
    def periodic(dim=1):
        if dim == 1:
            return BoundarySpec("periodic", "periodic")
        return BoundarySpec("periodic", "periodic", "periodic", "periodic")

    @staticmethod
    def free(dim=1):
        if dim == 1:
            return BoundarySpec("free", "free")
        return BoundarySpec("free", "free", "free", "free")


def _fill_axis(data, g, n, lo, hi, mom_comp, gamma):
    """Fill ghost layers along axis 0 of data (n interior cells)."""
    if lo == "periodic":
        data[:g] = data[n:n + g]
        data[n + g:] = data[g:2 * g]
        return
    for side, cond in (("lo", lo), ("hi", hi)):
        if cond == "free":
            if side == "lo":
                data[:g] = data[g:g + 1]
            else:
                data[n + g:] = data[n + g - 1:n + g]
        elif cond == "wall":
            # mirror through the wall plane, normal momentum negated
            if side == "lo":
                data[:g] = data[g:2 * g][::-1]
                data[:g, ..., mom_comp] *= -1.0
            else:
                data[n + g:] = data[n:n + g][::-1]
                data[n + g:, ..., mom_comp] *= -1.0
        elif isinstance(cond, tuple) and cond[0] == "dirichlet":
            U = to_conserved(np.asarray(cond[1], dtype=np.float64), gamma)
            if side == "lo":
                data[:g] = U
            else:
                data[n + g:] = U
        else:
            raise ValueError(f"unknown boundary condition {cond!r}")


def fill_ghosts(field, bc, gamma):
    """Populate all ghost layers of field in place; idempotent."""
    g, nx = field.ghost, field.nx
    if field.ndim == 1:
        _fill_axis(field.data, g, nx, bc.left, bc.right, 1, gamma)
        return field
    _fill_axis(field.data, g, nx, bc.left, bc.right, 1, gamma)
    # y-sides through a transposed view so the helper always sees axis 0
    datay = field.data.transpose(1, 0, 2)
    _fill_axis(datay, g, field.ny, bc.bottom, bc.top, 2, gamma)
    return field
