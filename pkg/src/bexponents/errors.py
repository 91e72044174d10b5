"""Typed errors raised across the package.

Everything derives from EngineError so the command line can map engine
failures to a single exit code.
"""


class EngineError(Exception):
    pass


class InvalidCharSeq(EngineError, ValueError):
    pass


class GcdNotOne(EngineError, ValueError):
    pass


class EmptyGenerators(EngineError, ValueError):
    pass


class EigenvalueConditionViolated(EngineError):
    pass


class NotInB11orB21(EngineError):
    pass


class DecompositionMissing(EngineError):
    pass


class NotDivisible(EngineError):
    pass


class UnsupportedBaseShape(EngineError):
    pass


class UnpairedTerm(EngineError):
    pass


class IntegerBetaArgument(EngineError):
    pass


class IrrationalFactor(EngineError):
    pass


class BadSupport(EngineError):
    pass


class BadAB(EngineError):
    pass


class BadExtraTerm(EngineError):
    pass


class OrderTwoPole(EngineError):
    pass


class KInSemigroup(EngineError):
    pass


class NotDegreeOne(EngineError):
    pass


class NoSolution(EngineError):
    pass


class PoleAtS(EngineError):
    pass


class QuadratureFailure(EngineError):
    pass
