"""Exception hierarchy.

Every error raised for malformed input derives from :class:`EtfError`.
Mathematical failures detected by the verification layer are reported,
not raised.
"""


class EtfError(ValueError):
    """Base class for all errors raised by this package."""


# finite fields
class NotPrime(EtfError):
    pass


class DegreeZero(EtfError):
    pass


class OrderTooLarge(EtfError):
    pass


class FieldMismatch(EtfError):
    pass


class DivisionByZero(EtfError, ZeroDivisionError):
    pass


class EvenCharacteristic(EtfError):
    pass


# linear algebra
class DimensionMismatch(EtfError):
    pass


class NotHermitian(EtfError):
    pass


class NoConvergence(EtfError, ArithmeticError):
    pass


class NegativeEigenvalue(EtfError):
    pass


# constructions
class WrongResidueClass(EtfError):
    pass


class BadBorder(EtfError):
    pass


class CoreIdentityFailed(EtfError):
    pass


class SpectrumMismatch(EtfError):
    pass


class RankDeficient(EtfError):
    pass


class IndexOutOfRange(EtfError, IndexError):
    pass


class NotConference(EtfError):
    pass


class InvalidDimensions(EtfError):
    pass


class FrameFormatError(EtfError):
    """A frame file could not be parsed or is inconsistent."""
