"""Exception types shared across the package."""


class WtcError(Exception):
    """Base class for all library errors."""


class ZeroMassError(WtcError):
    """A functional needed positive mass on an interval but found none."""


class ZeroDensityError(WtcError):
    """A pointwise density was required to be positive at a sample point."""


class AtomPresentError(WtcError):
    """An operation defined only for atom-free weights received atoms."""


class DivergentError(WtcError):
    """An integral is provably infinite for the given configuration."""


class SingularSampleError(WtcError):
    """A potential was sampled exactly at an atom location."""


class NonIntegrableError(WtcError):
    """Requested density is not locally integrable."""


class ParamDomainError(WtcError):
    """Construction parameters violate their domain constraints."""


class StageOverflowError(WtcError):
    """Stage auto-enlargement exceeded the configured truncation size."""


class FamilyTooLargeError(WtcError):
    """A candidate family would exceed the configured enumeration cap."""


class CapExceededError(WtcError):
    """A requested scale exceeds the configured caps."""


class UnknownClaimError(WtcError):
    """Claim id is not registered."""


class ParseError(WtcError):
    """Measure/CSV file syntax error; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NegativeMassError(ParseError):
    """A mass or density in a measure file was negative."""


class OverlappingStepsError(WtcError):
    """Step piece supports overlap on a set of positive length."""
