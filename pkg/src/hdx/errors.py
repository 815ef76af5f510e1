"""Exception types shared across the package."""


class HDXError(Exception):
    """Base class for all package errors."""


class MixedFacetSizes(HDXError):
    """Facet list contains facets of different cardinalities."""


class EmptyInput(HDXError):
    """No facets were supplied."""


class FaceNotPresent(HDXError):
    """Requested face does not belong to the complex."""


class VertexNotPresent(HDXError):
    """Requested vertex does not belong to the complex."""


class DimensionOutOfRange(HDXError):
    """Dimension index outside the valid range for the complex."""


class WrongDimension(HDXError):
    """Operation requires a complex of a specific dimension."""


class SearchSpaceTooLarge(HDXError):
    """Instance exceeds the configured enumeration caps.

    Raised instead of silently approximating; the caps can be widened via
    HDX_CAPS or an explicit FeasibilityCaps.
    """


class DisconnectedLink(HDXError):
    """A vertex link is disconnected where connectivity is required."""


class TooLarge(HDXError):
    """Graph exceeds the configured spectral or subset-scan caps."""


class NotRegular(HDXError):
    """Graph is not regular."""


class Disconnected(HDXError):
    """Graph is not connected."""


class InvalidSubset(HDXError):
    """Vertex subset is empty, improper, or not a subset of the graph."""


class BadParams(HDXError):
    """Invalid generator parameters."""


class UnsupportedField(HDXError):
    """Requested finite field is outside the supported set."""


class NonSymmetricGenerators(HDXError):
    """Generator set is not symmetric, contains the identity, or is malformed."""


class GroupTooLarge(HDXError):
    """Generated group exceeds the configured size cap."""


class UnknownFixture(HDXError):
    """Fixture name not recognised."""


class ConfigError(HDXError):
    """Suite configuration is invalid."""


class InvalidPointConfig(HDXError):
    """Point configuration is inconsistent with the complex."""
