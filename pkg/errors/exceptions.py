class FramesError(Exception):
    """Base class for every error raised by orthoframes."""


class DomainError(FramesError, ValueError):
    """Invalid (d, n) or a stratum outside the domain Delta(d, n)."""


class FieldError(FramesError, ValueError):
    """Bad modulus or mismatched shapes over F_P."""


class HypothesisError(FramesError):
    """The preconditions of a construction or certificate do not hold."""


class GenericityError(FramesError):
    """A randomized search ran out of retries."""


class GraphFormatError(FramesError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigError(FramesError):
    pass


class UsageError(FramesError):
    pass
