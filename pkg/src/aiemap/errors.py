"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: Infeasible -> 1, ConfigError -> 2.
"""


class AiemapError(Exception):
    """Base class for toolkit errors."""


class ConfigError(AiemapError):
    """Bad or missing configuration (device files, profiles, flags)."""


class Infeasible(AiemapError):
    """A search or placement has no solution under the given constraints."""


class PlacementError(Infeasible):
    """Placement failed; carries the partial frontier for diagnostics."""

    def __init__(self, message, frontier=None):
        super().__init__(message)
        self.frontier = frontier or []


class CalibrationError(AiemapError):
    """Power-model calibration failed (too few rows, rank-deficient fit)."""


class SimulationError(AiemapError):
    """Structural problem detected during simulation (e.g. deadlock)."""

    def __init__(self, message, blocked=None):
        super().__init__(message)
        self.blocked = blocked or []
