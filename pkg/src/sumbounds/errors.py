"""Exception types shared across the package."""


class SumboundsError(Exception):
    """Base class for all package-specific errors."""


class DegenerateInputError(SumboundsError):
    """Input is structurally valid but too degenerate for the operation
    (empty set, {0}, singleton where differences are needed)."""


class InvalidDilationError(SumboundsError):
    """Dilation by zero."""


class IndexRangeError(SumboundsError):
    """A cardinality parameter (h, alpha) lies outside its admissible range."""


class EmptyCollectionError(SumboundsError):
    """The defining collection of subsets/tuples is empty, so the sum set
    would be empty; always a caller bug under the documented preconditions."""


class OracleSizeError(SumboundsError):
    """Brute-force oracle refused an input large enough to blow up."""


class MissingAuxiliaryError(SumboundsError):
    """A bound formula references another sumset's cardinality that was
    not supplied in the instance."""


class InapplicableError(SumboundsError):
    """evaluate_bound called on an instance that fails the hypothesis."""
