"""Exception types shared across the package.

The CLI maps these onto stable exit codes, so new failure modes should
subclass one of the existing categories rather than raising bare ValueError.
"""


class VolageError(Exception):
    """Base class for all package errors."""


class ConfigError(VolageError):
    """Invalid or inconsistent configuration (bad field, unknown key)."""


class ShapeError(VolageError):
    """Tensor or volume shape does not satisfy an operation's contract."""


class NonFiniteLossError(VolageError):
    """Training diverged: loss became NaN or infinite."""


class CorruptArtifactError(VolageError):
    """A file on disk is not a valid artifact (checkpoint, NIfTI, raw)."""


class NiftiFormatError(CorruptArtifactError):
    """NIfTI-1 parsing failed (bad magic, unsupported datatype, truncation)."""


class CheckpointError(CorruptArtifactError):
    """Model checkpoint failed its magic/layout validation."""
