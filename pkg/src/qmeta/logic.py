"""Propositions, assertions and the reflection between metalanguage and object-language.

Object-language propositions are built from classical atoms (``p0``, ``p1``,
or any other identifier), quantum atoms ``p{alpha}`` labelled by a coherent
amplitude, the classical ``&`` and the quantum connective ``(alpha &_ beta)``.

Metalanguage assertions ``G |-^alpha A`` may carry a complex assertion degree.
A :class:`MetaJunction` joins assertions with the metalinguistic "and"; the
reflection principle turns it into a single assertion about a compound
proposition and back.

The calculus has no contraction and no weakening. Nothing in this module
duplicates or drops a context formula.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Optional, Union

from .complexvalue import ComplexLike, ComplexValue, as_value
from .errors import (ArityError, DegreeOutOfRange, EmptySequent, MixedLevel, NotCompound,
                     StructuralRuleForbidden)

# tiny slack so that e.g. 0.6+0.8i (modulus 1 up to rounding) is accepted
DEGREE_SLACK = 1e-12


def _check_degree(z: ComplexValue, what: str) -> None:
    if z.modulus > 1.0 + DEGREE_SLACK:
        raise DegreeOutOfRange(f"{what} {complex(z)} has modulus {z.modulus:.6g} > 1; "
                               "truth degree |g|^2 must lie in [0, 1]")


def _span():
    return field(default=None, compare=False, repr=False)


class Proposition:
    """Base class of object-language formulas."""

    __slots__ = ()

    def atoms(self):
        raise NotImplementedError


@dataclass(frozen=True)
class ClassicalAtom(Proposition):
    id: str
    span: object = _span()

    def atoms(self):
        yield self


@dataclass(frozen=True)
class QuantumAtom(Proposition):
    label: ComplexValue
    span: object = _span()

    def __post_init__(self):
        object.__setattr__(self, "label", as_value(self.label))

    def atoms(self):
        yield self


@dataclass(frozen=True)
class ClassicalAnd(Proposition):
    left: Proposition
    right: Proposition
    span: object = _span()

    def atoms(self):
        yield from self.left.atoms()
        yield from self.right.atoms()


@dataclass(frozen=True)
class QuantumAnd(Proposition):
    """``left (degree_left &_ degree_right) right``: superposition of two asserted states."""

    degree_left: ComplexValue
    degree_right: ComplexValue
    left: Proposition
    right: Proposition
    span: object = _span()

    def __post_init__(self):
        object.__setattr__(self, "degree_left", as_value(self.degree_left))
        object.__setattr__(self, "degree_right", as_value(self.degree_right))
        _check_degree(self.degree_left, "connective degree")
        _check_degree(self.degree_right, "connective degree")

    def atoms(self):
        yield from self.left.atoms()
        yield from self.right.atoms()


@dataclass(frozen=True)
class Assertion:
    """``context |-^degree prop``. No degree means a classical assertion."""

    prop: Proposition
    degree: Optional[ComplexValue] = None
    context: tuple = ()
    span: object = _span()

    def __post_init__(self):
        if self.degree is not None:
            object.__setattr__(self, "degree", as_value(self.degree))
            _check_degree(self.degree, "assertion degree")
        object.__setattr__(self, "context", tuple(self.context))

    @property
    def is_quantum(self) -> bool:
        return self.degree is not None


@dataclass(frozen=True)
class MetaJunction:
    """Assertions joined by the metalinguistic link "and"."""

    parts: tuple
    span: object = _span()

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ArityError("a metajunction needs at least one assertion")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class Sequent:
    """``antecedent => consequent``; left read conjunctively, right disjunctively."""

    antecedent: tuple = ()
    consequent: tuple = ()
    span: object = _span()

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))
        object.__setattr__(self, "consequent", tuple(self.consequent))


@dataclass(frozen=True)
class ReflectionClaim:
    """A definitional equation ``obj iff meta`` asserted by the user."""

    obj: Assertion
    meta: MetaJunction
    span: object = _span()


# convenience constructors

def p(x: Union[str, ComplexLike]) -> Proposition:
    """``p("p0")`` is a classical atom, ``p(0.3)`` the quantum atom ``p{0.3}``."""
    return ClassicalAtom(x) if isinstance(x, str) else QuantumAtom(as_value(x))


def qand(alpha: ComplexLike, beta: ComplexLike, left: Proposition, right: Proposition) -> QuantumAnd:
    return QuantumAnd(as_value(alpha), as_value(beta), left, right)


def asserts(prop: Proposition, degree: ComplexLike | None = None, context=()) -> Assertion:
    return Assertion(prop, None if degree is None else as_value(degree), tuple(context))


def quantum_assertion(alpha: ComplexLike, context=()) -> Assertion:
    """The atomic quantum assertion ``|-^alpha p_alpha``."""
    a = as_value(alpha)
    return Assertion(QuantumAtom(a), a, tuple(context))


def junction(*parts: Assertion) -> MetaJunction:
    return MetaJunction(tuple(parts))


# sequent classification ----------------------------------------------------

class SequentKind(enum.Enum):
    LOGICAL_ASSERTION = "LogicalAssertion"
    INCONSISTENCY = "Inconsistency"
    ORDINARY = "Ordinary"


def classify_sequent(s: Sequent) -> SequentKind:
    if not s.antecedent and not s.consequent:
        raise EmptySequent("both antecedent and consequent are empty")
    if not s.antecedent:
        return SequentKind.LOGICAL_ASSERTION
    if not s.consequent:
        return SequentKind.INCONSISTENCY
    return SequentKind.ORDINARY


# levels --------------------------------------------------------------------

class Level(enum.Enum):
    CLASSICAL = "Classical"
    QUANTUM = "Quantum"
    MIXED = "Mixed"


def _combine(levels) -> Level:
    levels = set(levels)
    if len(levels) == 1:
        return levels.pop()
    return Level.MIXED


def _prop_level(a: Proposition) -> Level:
    if isinstance(a, ClassicalAtom):
        return Level.CLASSICAL
    if isinstance(a, QuantumAtom):
        return Level.QUANTUM
    sub = _combine([_prop_level(a.left), _prop_level(a.right)])
    if isinstance(a, QuantumAnd):
        # amplitudes in the connective need quantum operands
        return Level.QUANTUM if sub is Level.QUANTUM else Level.MIXED
    return sub


def _assertion_level(a: Assertion) -> Level:
    prop = _prop_level(a.prop)
    ctx = [_prop_level(g) for g in a.context]
    if prop is Level.MIXED:
        return Level.MIXED
    if prop is Level.CLASSICAL:
        own = Level.MIXED if a.degree is not None else Level.CLASSICAL
    elif a.degree is not None or isinstance(a.prop, QuantumAnd):
        # after reflection the degrees live inside the connective
        own = Level.QUANTUM
    else:
        own = Level.MIXED
    if any(c is Level.MIXED for c in ctx):
        return Level.MIXED
    return own


def level_of(x) -> Level:
    """Classical, Quantum or Mixed for a proposition, assertion or metajunction."""
    if isinstance(x, Proposition):
        return _prop_level(x)
    if isinstance(x, Assertion):
        return _assertion_level(x)
    if isinstance(x, MetaJunction):
        return _combine(_assertion_level(a) for a in x.parts)
    raise TypeError(f"no level for {type(x).__name__}")


def has_quantum_content(x) -> bool:
    """True when an amplitude appears anywhere: a degree, a quantum atom or connective."""
    if isinstance(x, Assertion):
        return x.degree is not None or has_quantum_content(x.prop) or any(
            has_quantum_content(g) for g in x.context)
    if isinstance(x, MetaJunction):
        return any(has_quantum_content(a) for a in x.parts)
    if isinstance(x, QuantumAnd) or isinstance(x, QuantumAtom):
        return True
    if isinstance(x, ClassicalAnd):
        return has_quantum_content(x.left) or has_quantum_content(x.right)
    return False


# reflection ----------------------------------------------------------------

class NaryReflectionWarning(UserWarning):
    """Reflecting more than two assertions goes beyond the binary definitional equation."""


FOLD_DEGREE = ComplexValue(1.0, 0.0)


def _reflect_pair(a: Assertion, b: Assertion, level: Level) -> Assertion:
    if a.context != b.context:
        raise MixedLevel("assertions in one definitional equation must share their context")
    if level is Level.CLASSICAL:
        return Assertion(ClassicalAnd(a.prop, b.prop), None, a.context)
    # a compound left operand (from folding) has no degree of its own
    da = a.degree if a.degree is not None else FOLD_DEGREE
    return Assertion(QuantumAnd(da, b.degree, a.prop, b.prop), None, a.context)


def reflect_down(m: MetaJunction) -> Assertion:
    """``|- A and |- B``  ->  ``|- A & B``; ``|-^a p_a and |-^b p_b``  ->  ``|- p_a (a &_ b) p_b``.

    The context is carried through unchanged. Junctions longer than two are
    folded to the left (a :class:`NaryReflectionWarning` is issued); in the
    quantum case the intermediate compound enters the next connective with
    degree 1.
    """
    if len(m) < 2:
        raise ArityError("a single assertion is not a metajunction to reflect")
    level = level_of(m)
    if level is Level.MIXED:
        raise MixedLevel("cannot reflect a metajunction mixing classical and quantum assertions")
    if level is Level.QUANTUM and any(a.degree is None for a in m.parts):
        raise MixedLevel("every assertion of a quantum metajunction must carry a degree")
    if len(m) > 2:
        warnings.warn(f"reflecting a {len(m)}-ary junction by left folding",
                      NaryReflectionWarning, stacklevel=2)
    acc = _reflect_pair(m.parts[0], m.parts[1], level)
    for part in m.parts[2:]:
        acc = _reflect_pair(acc, part, level)
    return acc


def reflect_up(a: Assertion) -> MetaJunction:
    """Inverse of :func:`reflect_down` for a binary compound."""
    if a.degree is not None:
        raise NotCompound("only a degree-free assertion of a compound can be reflected up")
    prop = a.prop
    if isinstance(prop, ClassicalAnd):
        return MetaJunction((Assertion(prop.left, None, a.context),
                             Assertion(prop.right, None, a.context)))
    if isinstance(prop, QuantumAnd):
        return MetaJunction((Assertion(prop.left, prop.degree_left, a.context),
                             Assertion(prop.right, prop.degree_right, a.context)))
    raise NotCompound(f"{type(prop).__name__} is atomic; there is nothing to reflect up")


@dataclass(frozen=True)
class ReflectionCheck:
    ok: bool
    code: str | None = None
    message: str = ""

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "code": self.code, "message": self.message}


OK = ReflectionCheck(True)

E_LEVEL_52 = "E_LEVEL_52"
E_LEVEL_53 = "E_LEVEL_53"
E_LEVEL_MIXED = "E_LEVEL_MIXED"
E_REFLECT_MISMATCH = "E_REFLECT_MISMATCH"


def check_reflection(m: MetaJunction, a: Assertion) -> ReflectionCheck:
    """Is ``a iff m`` a well-formed definitional equation?

    A mismatch is returned, never raised. The two cross-level patterns get
    dedicated codes: a classical metalanguage cannot produce amplitudes in the
    object-language (``E_LEVEL_52``) and a quantum metalanguage cannot have its
    degrees vanish from it (``E_LEVEL_53``).
    """
    level = level_of(m)
    if level is Level.MIXED:
        return ReflectionCheck(False, E_LEVEL_MIXED,
                               "the metajunction mixes classical and quantum assertions")
    if level is Level.CLASSICAL and has_quantum_content(a):
        return ReflectionCheck(False, E_LEVEL_52,
                               "amplitudes appear from nowhere: the classical metalanguage "
                               "carries no degrees for the object-language connective")
    if level is Level.QUANTUM and not has_quantum_content(a):
        return ReflectionCheck(False, E_LEVEL_53,
                               "assertion degrees discarded: the quantum degrees of the "
                               "metalanguage disappear in the object-language")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NaryReflectionWarning)
            expected = reflect_down(m)
    except (ArityError, MixedLevel) as exc:
        return ReflectionCheck(False, exc.code, str(exc))
    if expected == a:
        return OK
    return ReflectionCheck(False, E_REFLECT_MISMATCH,
                           "the object-language assertion is not the reflection of the metajunction")


# structural rules ----------------------------------------------------------

class StructuralRule(enum.Enum):
    CONTRACTION = "Contraction"
    WEAKENING = "Weakening"


_RULE_REASONS = {
    StructuralRule.CONTRACTION: "no-cloning: duplicating a formula would copy an unknown quantum state",
    StructuralRule.WEAKENING: "no-erase: discarding a formula would delete an unknown quantum state",
}


def apply_structural_rule(rule: StructuralRule | str, s: Sequent):
    """Always raises :class:`StructuralRuleForbidden`; the calculus is substructural."""
    rule = StructuralRule(rule.capitalize() if isinstance(rule, str) else rule)
    raise StructuralRuleForbidden(rule.value, _RULE_REASONS[rule])
