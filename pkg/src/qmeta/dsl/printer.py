"""Canonical text for every AST node; ``parse(format(x)) == x``."""

from __future__ import annotations

import math

from ..complexvalue import ComplexValue, as_value
from ..logic import (Assertion, ClassicalAnd, ClassicalAtom, MetaJunction, Proposition,
                     QuantumAnd, QuantumAtom, ReflectionClaim, Sequent)


def format_real(x: float) -> str:
    # repr is the shortest string that round-trips to the same float
    return repr(float(x))


def format_complex(z) -> str:
    z = as_value(z)
    if z.im == 0.0 and not math.copysign(1.0, z.im) < 0:
        return format_real(z.re)
    sign = "-" if math.copysign(1.0, z.im) < 0 else "+"
    return f"{format_real(z.re)}{sign}{format_real(abs(z.im))}i"


# binding strength: atoms 3, "&" 2, quantum connective 1
def _prec(p: Proposition) -> int:
    if isinstance(p, ClassicalAnd):
        return 2
    if isinstance(p, QuantumAnd):
        return 1
    return 3


def _wrap(p: Proposition, needs: bool) -> str:
    s = format_prop(p)
    return f"({s})" if needs else s


def format_prop(p: Proposition) -> str:
    if isinstance(p, ClassicalAtom):
        return p.id
    if isinstance(p, QuantumAtom):
        return f"p{{{format_complex(p.label)}}}"
    if isinstance(p, ClassicalAnd):
        return f"{_wrap(p.left, _prec(p.left) < 2)} & {_wrap(p.right, _prec(p.right) <= 2)}"
    if isinstance(p, QuantumAnd):
        return (f"{_wrap(p.left, _prec(p.left) < 1)} "
                f"({format_complex(p.degree_left)} &_ {format_complex(p.degree_right)}) "
                f"{_wrap(p.right, _prec(p.right) <= 1)}")
    raise TypeError(f"not a proposition: {p!r}")


def _props(ps) -> str:
    return ", ".join(format_prop(x) for x in ps)


def format_assertion(a: Assertion) -> str:
    head = f"{_props(a.context)} |-" if a.context else "|-"
    if a.degree is not None:
        head += f"^{{{format_complex(a.degree)}}}"
    return f"{head} {format_prop(a.prop)}"


def format(node) -> str:  # noqa: A001 - mirrors parse()
    if isinstance(node, (ComplexValue, complex, float, int)):
        return format_complex(node)
    if isinstance(node, Proposition):
        return format_prop(node)
    if isinstance(node, Assertion):
        return format_assertion(node)
    if isinstance(node, MetaJunction):
        return " and ".join(format_assertion(a) for a in node.parts)
    if isinstance(node, Sequent):
        left = _props(node.antecedent)
        right = _props(node.consequent)
        return " ".join(x for x in (left, "=>", right) if x)
    if isinstance(node, ReflectionClaim):
        return f"{format_assertion(node.obj)} iff {format(node.meta)}"
    raise TypeError(f"cannot format {type(node).__name__}")
