"""Exception types shared across the package."""


class AgcodesError(Exception):
    """Base class for all library errors."""


class NonPrimitivePolynomial(AgcodesError):
    """The given polynomial does not generate the full multiplicative group."""


class DimensionMismatch(AgcodesError):
    """An array or vector has the wrong shape for the requested transform."""


class MTooSmall(AgcodesError):
    """Curve-code degree parameter must exceed 2g-2."""


class ZeroCoordinatePoint(AgcodesError):
    """A point with a zero coordinate was passed where only nonzero ones work."""


class NotAZeroPoint(AgcodesError):
    """The point has no zero coordinate, so it has no analogue-array form."""


class IncompleteCover(AgcodesError):
    """No recurrence of the basis can reach some cell of the grid."""


class InconsistentKnownValues(AgcodesError):
    """Known array values violate a recurrence of the basis."""


class DecodingFailure(AgcodesError):
    """The received word could not be corrected reliably."""


class RankDeficient(AgcodesError):
    """The parity-check system has no systematic solution for this point split."""


class NonGenericSupport(AgcodesError):
    """No redundant-point set with a generic vanishing-ideal staircase was found."""


class BadRedundancy(AgcodesError):
    """RS redundancy must satisfy 1 <= r < q-1."""


class ExtendedDecodeUnsupported(AgcodesError):
    """Decoding of words with zero-coordinate positions is not supported."""
