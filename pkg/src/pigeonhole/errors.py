"""Exception types raised by the pigeonhole package."""


class PigeonholeError(ValueError):
    """Base class for all domain errors."""


class DegeneratePostSelection(PigeonholeError):
    """Pre- and post-selected states are (numerically) orthogonal."""


class NonpositiveWidth(PigeonholeError):
    pass


class NegativeStrength(PigeonholeError):
    """Interaction strength x = a/sigma (or kick length a) is negative."""


class InsufficientSamples(PigeonholeError):
    pass


class OrderOutOfRange(PigeonholeError):
    pass


class InvalidRange(PigeonholeError):
    """Sweep range or step count is malformed."""
