from .exceptions import (
    FramesError, DomainError, FieldError, HypothesisError,
    GenericityError, GraphFormatError, ConfigError, UsageError,
)

__all__ = [
    "FramesError", "DomainError", "FieldError", "HypothesisError",
    "GenericityError", "GraphFormatError", "ConfigError", "UsageError",
]
