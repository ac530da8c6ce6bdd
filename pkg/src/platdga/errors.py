"""Exception hierarchy shared by all modules."""


class PlatError(Exception):
    """Base class for every error raised by this package."""


class DiagramSyntaxError(PlatError):
    """Input text or JSON does not follow the plat grammar."""


class CrossingRangeError(PlatError):
    """A crossing position lies outside the strip (rows 1..2n-1 pairs)."""


class NotAKnotError(PlatError):
    """The plat closes up into more than one component."""


class RhoIncompatibleError(PlatError):
    """The grading period rho does not divide twice the rotation number."""


class EvenRhoUnsupportedError(PlatError):
    """The requested quantity is undefined for even nonzero rho."""


class NotAnAugmentationError(PlatError):
    """An assignment fails the augmentation equations."""


class ResourceLimitError(PlatError):
    """A configured search budget was exceeded."""


class RandomGiveUpError(PlatError):
    """Rejection sampling failed to produce a single-component plat."""


class VerificationError(PlatError):
    """A verification report contains a failed check."""
