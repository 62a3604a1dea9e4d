import numpy as np
import pytest

GAMMA = 1.4


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_prim(rng, n, dim=1):
    """Broad random valid primitive states (rho, u[, v], p)."""
    rho = rng.uniform(0.1, 3.0, n)
    u = rng.uniform(-2.0, 2.0, n)
    p = rng.uniform(0.05, 3.0, n)
    if dim == 1:
        return np.stack([rho, u, p], axis=-1)
    v = rng.uniform(-2.0, 2.0, n)
    return np.stack([rho, u, v, p], axis=-1)


def random_conserved(rng, n, dim=1, gamma=GAMMA):
    from gasdyn.state import to_conserved

    return to_conserved(random_prim(rng, n, dim), gamma)


def rel_err(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.max(np.abs(a - b) / (1.0 + np.abs(b)))
