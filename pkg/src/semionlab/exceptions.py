"""Exception types raised across the package."""


class SemionError(Exception):
    """Base class for all semionlab errors."""


class OddPlaquetteCount(SemionError, ValueError):
    """Torus size with an odd number of plaquettes (odd L) is rejected."""


class SizeTooSmall(SemionError, ValueError):
    """Torus linear size below the minimum of 2."""


class InvalidPath(SemionError, ValueError):
    """Edge sequence does not form a connected path on the lattice."""


class NoDualPath(SemionError, ValueError):
    """No dual path exists inside the support of the string operator."""


class OddExponent(SemionError, ValueError):
    """Square root requested for a unit phase with an odd exponent."""


class SupportTooLarge(SemionError, RuntimeError):
    """Dense phase table would exceed the configured entry cap."""


class StateTooLarge(SemionError, RuntimeError):
    """Sparse state support would exceed the configured entry cap."""


class IncompatiblePaths(SemionError, ValueError):
    """Concatenation of paths that do not meet at exactly one endpoint."""


class UnsupportedPath(SemionError, ValueError):
    """Path shape that the string builder cannot handle."""


class DualPathOutsideSupport(SemionError, ValueError):
    """Dual path leaves the support of the string it should dress."""


class NotVertexFree(SemionError, ValueError):
    """Configuration has a vertex with odd occupied degree."""


class UnpairableSyndrome(SemionError, ValueError):
    """Syndrome with odd excitation count cannot be paired."""


class InvalidProbability(SemionError, ValueError):
    """Probability outside [0, 1]."""


class NotGaussianPhase(SemionError, ValueError):
    """Unit phase with odd exponent cannot scale a Gaussian-dyadic amplitude."""
