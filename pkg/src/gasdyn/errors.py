"""Exception types shared across the solver."""


class GasdynError(Exception):
    """Base class for solver errors."""


class NonPositiveDensity(GasdynError):
    """Density <= 0 encountered where a valid state is required."""

    def __init__(self, where=None, value=None):
        self.where = where
        self.value = value
        loc = f" at {where}" if where is not None else ""
        val = f" (rho={value!r})" if value is not None else ""
        super().__init__(f"non-positive density{loc}{val}")


class NonPositivePressure(GasdynError):
    """Pressure <= 0: the state is outside the physical regime.

    Surfaced, never clamped; this is how an impending scheme failure
    shows up.
    """

    def __init__(self, where=None, value=None):
        self.where = where
        self.value = value
        loc = f" at {where}" if where is not None else ""
        val = f" (p={value!r})" if value is not None else ""
        super().__init__(f"non-positive pressure{loc}{val}")


class DegenerateSpeeds(GasdynError):
    """Both one-sided speeds vanished at an interface (vacuum-like input)."""


class MeshMismatch(GasdynError):
    """Comparison data does not live on the computed mesh."""


class UnknownProblem(GasdynError):
    """Benchmark id outside 1..15."""


class InvalidPairing(GasdynError):
    """Periodic boundary requested on one side only."""


class SimulationFailure(GasdynError):
    """A run terminated before t_final; carries the structured record."""

    def __init__(self, reason, step, time, stage=None, cell=None):
        self.reason = reason
        self.step = step
        self.time = time
        self.stage = stage
        self.cell = cell
        super().__init__(
            f"simulation failed at step {step}, t={time:.6g}"
            + (f", stage {stage}" if stage is not None else "")
            + (f", cell {cell}" if cell is not None else "")
            + f": {reason}"
        )

    def record(self):
        return {
            "reason": self.reason,
            "step": self.step,
            "time": self.time,
            "stage": self.stage,
            "cell": list(self.cell) if self.cell is not None else None,
        }
