"""Exception hierarchy.

Errors split into two families: ``InputError`` for things the caller got wrong
(bad dimensions, non-skew matrices, ...) and ``ConsistencyError`` for internal
checks that should never fire on valid input.  The CLI maps them to exit
codes 1 and 2 respectively.
"""


class SkewRankError(Exception):
    pass


class InputError(SkewRankError):
    pass


class ConsistencyError(SkewRankError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class MixedFields(InputError):
    pass


class ZeroRadicand(InputError):
    pass


class UnsupportedRadicand(InputError):
    pass


class BadField(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class UnsupportedDimension(InputError):
    pass


class NotQuadric(InputError):
    pass


class TooManyVariables(InputError):
    pass


class ZeroCoefficients(InputError):
    pass


class ZeroTensor(InputError):
    pass


class NotConstantRank(InputError):
    pass


class ChowIntersection(NotConstantRank):
    """A plane of 5x5 skew matrices meeting the Grassmannian G(1,4)."""


class MissingWitness(InputError):
    pass


class SizeMismatch(InputError):
    pass


class DependentGenerators(InputError):
    pass


class ParseError(InputError):
    pass


class NotSkew(ParseError):
    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path


class UnknownCommand(InputError):
    pass


class UnexpectedLocus(ConsistencyError):
    pass


class WitnessVerificationFailed(ConsistencyError):
    pass


class ConstructionFailed(ConsistencyError):
    """A normal-form construction hit a degenerate choice; callers retry with another."""


class UnknownLabel(InputError, KeyError):
    pass
