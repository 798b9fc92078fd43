"""Hypothesis strategies for well-leveled ASTs."""

import math

from hypothesis import strategies as st

from qmeta.complexvalue import ComplexValue
from qmeta.logic import (Assertion, ClassicalAnd, ClassicalAtom, MetaJunction, QuantumAnd,
                         QuantumAtom, ReflectionClaim, Sequent)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


@st.composite
def degrees(draw):
    """Complex values with modulus <= 1, including signed zeros and odd exponents."""
    r = draw(st.floats(min_value=0.0, max_value=1.0))
    theta = draw(st.floats(min_value=-math.pi, max_value=math.pi))
    z = ComplexValue(r * math.cos(theta), r * math.sin(theta))
    return draw(st.sampled_from([z, ComplexValue(-0.0, z.im), ComplexValue(z.re, -0.0), z]))


labels = st.builds(ComplexValue, finite, finite)

classical_atoms = st.sampled_from(["p0", "p1", "A", "B", "q_2"]).map(ClassicalAtom)
quantum_atoms = st.one_of(labels, degrees()).map(QuantumAtom)

classical_props = st.recursive(
    classical_atoms, lambda kids: st.builds(ClassicalAnd, kids, kids), max_leaves=6)

quantum_props = st.recursive(
    quantum_atoms,
    lambda kids: st.one_of(st.builds(ClassicalAnd, kids, kids),
                           st.builds(QuantumAnd, degrees(), degrees(), kids, kids)),
    max_leaves=6)

any_props = st.recursive(
    st.one_of(classical_atoms, quantum_atoms),
    lambda kids: st.one_of(st.builds(ClassicalAnd, kids, kids),
                           st.builds(QuantumAnd, degrees(), degrees(), kids, kids)),
    max_leaves=6)


@st.composite
def classical_junctions(draw, min_size=2, max_size=2):
    ctx = tuple(draw(st.lists(classical_props, max_size=2)))
    props = draw(st.lists(classical_props, min_size=min_size, max_size=max_size))
    return MetaJunction(tuple(Assertion(p, None, ctx) for p in props))


@st.composite
def quantum_junctions(draw, min_size=2, max_size=2):
    ctx = tuple(draw(st.lists(quantum_props, max_size=2)))
    n = draw(st.integers(min_size, max_size))
    parts = []
    for _ in range(n):
        if draw(st.booleans()):
            d = draw(degrees())
            parts.append(Assertion(QuantumAtom(d), d, ctx))  # |-^a p_a
        else:
            parts.append(Assertion(draw(quantum_props), draw(degrees()), ctx))
    return MetaJunction(tuple(parts))


def well_leveled_junctions(min_size=2, max_size=2):
    return st.one_of(classical_junctions(min_size, max_size), quantum_junctions(min_size, max_size))


assertions = st.builds(Assertion, any_props, st.one_of(st.none(), degrees()),
                       st.lists(any_props, max_size=2).map(tuple))

sequents = st.builds(Sequent, st.lists(any_props, max_size=3).map(tuple),
                     st.lists(any_props, max_size=3).map(tuple))

junctions = st.lists(assertions, min_size=1, max_size=3).map(lambda xs: MetaJunction(tuple(xs)))

claims = st.builds(ReflectionClaim, assertions, junctions)

documents = st.one_of(junctions, sequents.filter(lambda s: s.antecedent or s.consequent), claims)
