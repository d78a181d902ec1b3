"""Error taxonomy shared by every module; the CLI maps these to exit codes."""

import numpy as np


class FeatAgentError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(FeatAgentError):
    """A caller violated an operation's precondition."""


class NumericError(FeatAgentError):
    """A computation produced or would produce non-finite values."""


class ConfigError(FeatAgentError):
    """A configuration file or field is invalid; carries the field path."""

    def __init__(self, message, field=None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class IoError(FeatAgentError):
    """A required file is missing or unreadable."""


class UndefinedMetricError(FeatAgentError):
    """A metric is undefined for the given inputs (e.g. no visible keypoints)."""


def check_finite(value, what):
    """Raise NumericError unless every entry of `value` is finite."""
    arr = np.asarray(value)
    if not np.all(np.isfinite(arr)):
        raise NumericError(f"non-finite values in {what}")
    return value
