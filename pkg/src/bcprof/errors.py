"""Exception hierarchy. Each class carries a distinct CLI exit code."""


class BcprofError(Exception):
    exit_code = 1


class SelfLoopError(BcprofError):
    exit_code = 10


class DuplicateEdgeError(BcprofError):
    exit_code = 11


class OutOfRangeError(BcprofError):
    exit_code = 12


class DisconnectedError(BcprofError):
    exit_code = 13


class WrongEdgeCountError(BcprofError):
    exit_code = 14


class DiameterTooSmallError(BcprofError):
    exit_code = 15


class LengthMismatchError(BcprofError):
    exit_code = 16


class OddMError(BcprofError):
    exit_code = 17


class OutOfDomainError(BcprofError):
    exit_code = 18


class OutOfTabulatedRangeError(BcprofError):
    exit_code = 19


class SearchCapExceededError(BcprofError):
    exit_code = 20


class NotASimplePathError(BcprofError):
    exit_code = 21


class NTooLargeError(BcprofError):
    exit_code = 22


class PreconditionViolatedError(BcprofError):
    exit_code = 23


class BadSpecError(BcprofError):
    exit_code = 24


class UnknownCheckError(BcprofError):
    exit_code = 25
