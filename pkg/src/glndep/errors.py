"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package-specific errors."""


class NotPrimeError(Error):
    """A claimed prime modulus is composite or otherwise unusable."""


class FieldMismatchError(Error):
    """Operands belong to different fields."""


class InfiniteFieldError(Error):
    """A finite-only operation was asked of an infinite field."""


class NoIrreducibleError(Error):
    """Irreducible-polynomial search exhausted its space (internal bug)."""


class ParseError(Error):
    """Malformed JSON data for a field, matrix, witness, or subspace."""


class ShapeError(Error):
    """Matrix or vector dimensions do not conform."""


class DependentInputError(Error):
    """Vectors required to be linearly independent are not."""


class TooLargeError(Error):
    """An exhaustive enumeration exceeds the configured cap."""


class TooFewMatricesError(Error):
    """A solver needs at least m+1 matrices of width m."""


class DimensionTooLargeError(Error):
    """A subspace has dimension larger than the multiplier size n."""


class InternalRankError(Error):
    """A guaranteed-nonzero kernel came back empty (internal bug)."""


class InternalSpanError(Error):
    """A vector fell outside a span it must belong to (internal bug)."""


class SpanExpansionError(Error):
    """A row expansion required by the correction step does not exist."""


class ExhaustedBoundError(Error):
    """No valid correction scalar found within the scan bound."""
