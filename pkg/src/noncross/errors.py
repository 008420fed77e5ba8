"""Exception hierarchy shared by every module of the package."""


class NoncrossError(ValueError):
    """Base class for all domain errors raised by :mod:`noncross`."""


class NotAPartition(NoncrossError):
    """Blocks overlap, leave a gap, contain an empty block or a stray label."""


class NotSymmetric(NoncrossError):
    """A block ``V`` is present but ``-V`` is not."""


class MultipleZeroBlocks(NoncrossError):
    pass


class CrossingInput(NoncrossError):
    """An operation that needs a non-crossing partition received a crossing one."""


class NotNoncrossing(CrossingInput):
    pass


class NotKEqual(NoncrossError):
    pass


class NotKDivisible(NoncrossError):
    pass


class InvalidSpec(NoncrossError):
    pass


class GroundTooLarge(NoncrossError):
    """The requested family exceeds the ground-size guard."""


class InexactDivision(ArithmeticError):
    """An exact division left a remainder. This always indicates a bug."""


class MassMismatch(NoncrossError):
    pass


class OutOfRange(NoncrossError):
    pass


class DomainTooLarge(NoncrossError):
    pass


class UnknownSuite(NoncrossError):
    pass
