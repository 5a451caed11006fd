"""Exception hierarchy shared by every holoforge module."""


class HoloforgeError(Exception):
    """Base class for all library errors."""


class RingMismatch(HoloforgeError):
    pass


class DimensionMismatch(HoloforgeError):
    pass


class SizeMismatch(DimensionMismatch):
    pass


class NotSquare(DimensionMismatch):
    pass


class NotField(HoloforgeError):
    pass


class NotInvertible(HoloforgeError):
    pass


class CapExceeded(HoloforgeError):
    pass


class BudgetExceeded(HoloforgeError):
    pass


class ZeroPolynomial(HoloforgeError):
    pass


class NotSimilar(HoloforgeError):
    pass


class NotInvariant(HoloforgeError):
    pass


class NotIndependent(HoloforgeError):
    pass


class NotUnipotent(HoloforgeError):
    pass


class NotAutomorphism(HoloforgeError):
    pass


class NotNormal(HoloforgeError):
    pass


class NotComplement(HoloforgeError):
    pass


class NotFreeBasis(HoloforgeError):
    pass


class NotFaithful(HoloforgeError):
    pass


class NotAbelian(HoloforgeError):
    pass


class DerivedNotContained(HoloforgeError):
    pass


class UnknownExample(HoloforgeError):
    pass


class UnknownSuite(HoloforgeError):
    pass


class ParseError(HoloforgeError):
    pass
