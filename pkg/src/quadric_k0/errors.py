"""Exception hierarchy shared by every layer of the package."""


class QuadricK0Error(Exception):
    """Base class for all errors raised by quadric_k0."""


class FieldError(QuadricK0Error, ValueError):
    pass


class NotASquare(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class ZeroScalar(QuadricK0Error, ValueError):
    pass


class DimensionCapExceeded(QuadricK0Error):
    pass


class RelationViolated(QuadricK0Error):
    """A generator assignment breaks a Clifford relation.

    ``pair`` is ``(i, i)`` for a square relation and ``(i, j)`` for an
    anticommutation relation (0-based generator indices).
    """

    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        super().__init__(message or f"relation violated at generators {self.pair}")


class NotAHomomorphism(QuadricK0Error):
    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        super().__init__(message or f"multiplicativity fails on basis pair {self.pair}")


class UnknownWitness(QuadricK0Error, KeyError):
    pass


class NotSemisimple(QuadricK0Error):
    pass


class CenterTooLarge(QuadricK0Error):
    pass


class NotAPerfectSquare(QuadricK0Error):
    pass


class SplitTensorSplit(QuadricK0Error):
    pass


class EmptyForm(QuadricK0Error, ValueError):
    pass


class InternalError(QuadricK0Error, AssertionError):
    pass


class LowDimension(QuadricK0Error, ValueError):
    pass
