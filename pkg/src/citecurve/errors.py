"""Exception hierarchy shared by every citecurve module."""


class CiteCurveError(ValueError):
    """Base class for all library errors."""


class DegenerateSignature(CiteCurveError):
    """The (M, N, h) anchors admit no positive-parameter curve."""


class DomainError(CiteCurveError):
    """An argument lies outside the region where a formula is defined."""


class EmptyProfile(CiteCurveError):
    pass


class EmptyGroup(CiteCurveError):
    pass


class InsufficientData(CiteCurveError):
    pass


class InvariantViolation(CiteCurveError):
    pass


class EmptyInput(CiteCurveError):
    pass


class ParseError(CiteCurveError):
    """Malformed input; ``location`` is a line number or a JSON path."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class IoError(CiteCurveError):
    """Refusal to write an output artifact."""
