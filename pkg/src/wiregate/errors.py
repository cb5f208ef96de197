"""Exception types shared across the package."""


class WiregateError(Exception):
    """Base class for model-level errors."""


class PoleHit(WiregateError):
    """Energy evaluated within the exclusion tolerance of a Q-function pole."""


class WindowAtPole(WiregateError):
    """A search-window endpoint coincides with a Q-function pole."""


class OutOfBand(WiregateError):
    """Energy is not inside a spectral band of the requested chain."""


class InBand(WiregateError):
    """Energy lies inside a spectral band where a gap quantity was requested."""


class ZeroQ(WiregateError):
    """A Q-function vanishes where a nonzero value is required."""


class OutOfDomain(WiregateError):
    """Operation invoked outside its domain (wrong pattern, invalid energy)."""


class SingularSystem(WiregateError):
    """The finite-chain boundary-condition system is numerically singular."""


class QuadratureFailure(WiregateError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class ConfigError(WiregateError):
    """A scenario file is malformed or violates a model invariant."""
