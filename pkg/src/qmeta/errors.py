"""Exception hierarchy. Every error carries a stable machine-readable ``code``."""

from __future__ import annotations


class QMLError(Exception):
    code = "E_QML"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


# numerics

class TruncationMismatch(QMLError, ValueError):
    code = "E_TRUNCATION_MISMATCH"


class NotNormalized(QMLError, ValueError):
    code = "E_NOT_NORMALIZED"


class QuadratureUnderResolved(QMLError, ArithmeticError):
    code = "E_QUADRATURE"


# logic

class DegreeOutOfRange(QMLError, ValueError):
    code = "E_DEGREE_RANGE"


class MixedLevel(QMLError, ValueError):
    code = "E_LEVEL_MIXED"


class ArityError(QMLError, ValueError):
    code = "E_ARITY"


class NotCompound(QMLError, ValueError):
    code = "E_NOT_COMPOUND"


class EmptySequent(QMLError, ValueError):
    code = "E_EMPTY_SEQUENT"


class StructuralRuleForbidden(QMLError):
    """Raised for every attempt to use contraction or weakening."""

    def __init__(self, rule: str, reason: str):
        super().__init__(f"{rule} is not a rule of this calculus: {reason}")
        self.rule = rule
        self.reason = reason
        self.code = f"E_STRUCT_{rule.upper()}"


# semantics

class UnknownAtom(QMLError, KeyError):
    code = "E_UNKNOWN_ATOM"

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class ZeroState(QMLError, ZeroDivisionError):
    code = "E_ZERO_STATE"


class NoRoot(QMLError, ArithmeticError):
    code = "E_NO_ROOT"


class NotAdmissible(QMLError, ValueError):
    code = "E_NOT_ADMISSIBLE"


# dsl

class ParseError(QMLError, ValueError):
    code = "E_PARSE"

    def __init__(self, message: str, span, expected=()):
        self.span = span
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {span.start}{detail}")

    @property
    def offset(self) -> int:
        return self.span.start

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["span"] = [self.span.start, self.span.end]
        d["expected"] = list(self.expected)
        return d


class SchemaError(QMLError, ValueError):
    code = "E_SCHEMA"


# robot

class BadGate(QMLError, ValueError):
    code = "E_BAD_GATE"


class QubitIndexOutOfRange(QMLError, IndexError):
    code = "E_QUBIT_INDEX"


class NormDrift(QMLError, ArithmeticError):
    code = "E_NORM_DRIFT"


class StateTooLarge(QMLError, ValueError):
    code = "E_STATE_TOO_LARGE"
