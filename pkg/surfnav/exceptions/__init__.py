"""
Exception hierarchy for the surfnav system.
"""


class SurfNavError(Exception):
    """Base class for all surfnav failures."""


class ConfigurationError(SurfNavError):
    """A run configuration or scenario file could not be loaded or validated."""


class WorldConfigError(ConfigurationError):
    """A scenario describes an impossible world (e.g. goal inside an obstacle)."""


class ScenarioNotFoundError(ConfigurationError):
    """An unknown built-in scenario name was requested."""

    def __init__(self, name: str, available: list):
        self.name = name
        self.available = list(available)
        super().__init__(f"Unknown scenario '{name}'. Available: {', '.join(self.available)}")


class LabelComputationError(SurfNavError):
    """Label math received inputs it cannot handle."""


class InsufficientDataError(SurfNavError):
    """Not enough samples to start or continue training."""


class ModelNotTrainedError(SurfNavError):
    """Prediction was requested from a model that has never been fit."""


class TrainingDivergedError(SurfNavError):
    """Held-out loss exploded during online training."""


class ModelFormatError(SurfNavError):
    """A model file is truncated, has a bad magic number or an unknown version."""


class ImageSizeError(SurfNavError):
    """An image dimension collapsed to zero or is otherwise unusable."""


class ImageFormatError(SurfNavError):
    """An image file is not a supported netpbm file."""


class MetricUnavailableError(SurfNavError):
    """A metric was requested for a trial it is not defined on."""


class EmptySuiteError(SurfNavError):
    """An evaluation suite holds no trials."""
