"""Exception hierarchy shared by all modules."""


class AbsorbError(Exception):
    """Base class for every error raised by this package."""


class InvalidRingError(AbsorbError, ValueError):
    """Ring construction rejected: bad order, improper modulus, broken tables."""


class ZeroRingError(AbsorbError, ValueError):
    """A multiplicative set reached 0; the localization would collapse to the zero ring."""


class WrongRingError(AbsorbError, ValueError):
    """An element id or ideal was used with a ring it does not belong to."""


class TooLargeError(AbsorbError, ValueError):
    """The requested exhaustive computation exceeds the configured bounds."""


class InvalidInputError(AbsorbError, ValueError):
    """Operation precondition violated (improper ideal, bad exponent, ...)."""


class SpecSyntaxError(AbsorbError, ValueError):
    """A ring-spec, phi-spec or predicate expression failed to parse."""
