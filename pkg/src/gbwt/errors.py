"""Exception hierarchy shared by every module of the package."""


class GBWTError(Exception):
    """Base class for all errors raised by gbwt."""


class EmptyString(GBWTError, ValueError):
    pass


class EmptyPattern(GBWTError, ValueError):
    pass


class NotPrimitive(GBWTError, ValueError):
    """The input has two equal cyclic rotations."""


class ByteOutsideAlphabet(GBWTError, ValueError):
    pass


class NotEnoughOccurrences(GBWTError, ValueError):
    pass


class WrongSchemeKind(GBWTError, TypeError):
    pass


class RowOutOfRange(GBWTError, IndexError):
    pass


class MalformedInput(GBWTError, ValueError):
    pass


class AlphabetTooLarge(GBWTError, ValueError):
    pass


class InstanceTooLarge(GBWTError, ValueError):
    pass


class SentinelByteClash(GBWTError, ValueError):
    pass


class SchemeFormatError(GBWTError, ValueError):
    pass
