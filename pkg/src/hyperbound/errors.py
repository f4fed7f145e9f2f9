"""Exception types shared across the package."""


class HyperboundError(ValueError):
    """Base class for all domain errors raised by hyperbound."""


class DomainError(HyperboundError):
    """An argument lies outside the domain of a real function (e.g. log of 0)."""


class InvalidSignatureError(HyperboundError):
    """Orbifold or curve signature data is malformed."""


class NonHyperbolicError(HyperboundError):
    """A hyperbolic (negative Euler characteristic) input was required."""


class NonTransitiveError(HyperboundError):
    """A permutation pair does not generate a transitive group."""


class DegreeCapError(HyperboundError):
    """Requested census degree exceeds the configured cap."""


class MissingZetaError(HyperboundError):
    """Field data carries no enclosure for zeta_F(2)."""
