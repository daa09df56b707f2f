"""Exception types raised by the toolkit.

Everything derives from :class:`DimreduceError` so callers (notably the CLI)
can catch one base class for expected domain failures.
"""


class DimreduceError(Exception):
    """Base class for all domain errors raised by this package."""


class ValidationError(DimreduceError):
    """Input is not a well-formed finite matrix/vector."""


class DimensionMismatchError(DimreduceError):
    """Operand shapes are incompatible for the requested operation."""


class NotSquareError(DimreduceError):
    """A square matrix was required."""


class NotSymmetricError(DimreduceError):
    """Asymmetry exceeds the accepted tolerance."""


class ConvergenceError(DimreduceError):
    """An iteration hit its sweep cap without meeting its stop criterion."""


class InsufficientSamplesError(DimreduceError):
    """Fewer samples than the estimator's divisor allows."""


class InvalidComponentCountError(DimreduceError):
    """Requested component count is outside [1, n_features]."""


class DegenerateSpectrumError(DimreduceError):
    """Total variance is zero, so variance ratios are undefined."""


class InvalidRankError(DimreduceError):
    """Requested rank is outside the valid interval."""


class ShapeMismatchError(DimreduceError):
    """Two arrays that must share a shape do not."""


class ZeroReferenceError(DimreduceError):
    """A relative quantity was requested against a zero-norm reference."""


class ZeroEnergyError(DimreduceError):
    """All singular values are zero, so energy fractions are undefined."""


class EmptyRankListError(DimreduceError):
    """A benchmark was requested with no ranks."""


class InvalidConditionError(DimreduceError):
    """Condition number targets must be >= 1."""


class CsvFormatError(DimreduceError):
    """Malformed CSV matrix input."""


class NetpbmError(DimreduceError):
    """Malformed PGM/PPM input not covered by a more specific subclass."""


class BadMagicError(NetpbmError):
    """The stream does not start with a supported magic number."""


class BadHeaderError(NetpbmError):
    """Header fields are missing or non-numeric."""


class TruncatedDataError(NetpbmError):
    """Fewer samples than width*height(*channels) announced by the header."""


class UnsupportedMaxvalError(NetpbmError):
    """Sample depth beyond 8 bits (maxval > 255)."""
