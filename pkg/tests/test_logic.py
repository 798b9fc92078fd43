import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import strategies as S
from qmeta.errors import (ArityError, DegreeOutOfRange, EmptySequent, MixedLevel, NotCompound,
                          StructuralRuleForbidden)
from qmeta.logic import (E_LEVEL_52, E_LEVEL_53, E_LEVEL_MIXED, E_REFLECT_MISMATCH,
                         ClassicalAnd, Level, NaryReflectionWarning, Sequent, SequentKind, StructuralRule, apply_structural_rule, asserts,
                         check_reflection, classify_sequent, junction, level_of, p, qand,
                         quantum_assertion, reflect_down, reflect_up)

A, B = p("A"), p("B")
p0, p1 = p("p0"), p("p1")
alpha, beta = 0.3, 0.4 + 0.1j


# classify_sequent ---------------------------------------------------------------

def test_classify_examples():
    assert classify_sequent(Sequent((), (p0,))) is SequentKind.LOGICAL_ASSERTION
    assert classify_sequent(Sequent((p0,), ())) is SequentKind.INCONSISTENCY
    assert classify_sequent(Sequent((A,), (A,))) is SequentKind.ORDINARY


def test_classify_empty():
    with pytest.raises(EmptySequent):
        classify_sequent(Sequent())


# level_of ---------------------------------------------------------------------------

def test_level_examples():
    assert level_of(ClassicalAnd(p0, p1)) is Level.CLASSICAL
    assert level_of(qand(alpha, beta, p(alpha), p(beta))) is Level.QUANTUM
    assert level_of(ClassicalAnd(p0, p(alpha))) is Level.MIXED


def test_level_of_assertions():
    assert level_of(asserts(p0)) is Level.CLASSICAL
    assert level_of(quantum_assertion(alpha)) is Level.QUANTUM
    # degree on a classical proposition, or a quantum atom asserted without degree
    assert level_of(asserts(p0, 0.5)) is Level.MIXED
    assert level_of(asserts(p(alpha))) is Level.MIXED
    # after reflection the degrees sit in the connective
    assert level_of(asserts(qand(alpha, beta, p(alpha), p(beta)))) is Level.QUANTUM
    assert level_of(asserts(qand(alpha, beta, p0, p1))) is Level.MIXED


def test_level_of_junction():
    assert level_of(junction(asserts(A), asserts(B))) is Level.CLASSICAL
    assert level_of(junction(quantum_assertion(alpha), quantum_assertion(beta))) is Level.QUANTUM
    assert level_of(junction(quantum_assertion(alpha), asserts(p1))) is Level.MIXED


def test_degree_bound_enforced():
    with pytest.raises(DegreeOutOfRange):
        quantum_assertion(1.2)
    with pytest.raises(DegreeOutOfRange):
        qand(2.0, 0.1, p(2.0), p(0.1))
    quantum_assertion(0.6 + 0.8j)  # modulus exactly one
    p(5.0)  # labels of atoms are not degrees


# reflection --------------------------------------------------------------------------

def test_reflect_down_classical():
    assert reflect_down(junction(asserts(A), asserts(B))) == asserts(ClassicalAnd(A, B))


def test_reflect_down_quantum_moves_degrees_into_connective():
    m = junction(quantum_assertion(alpha), quantum_assertion(beta))
    out = reflect_down(m)
    assert out == asserts(qand(alpha, beta, p(alpha), p(beta)))
    assert out.degree is None


def test_reflect_down_mixed():
    with pytest.raises(MixedLevel):
        reflect_down(junction(quantum_assertion(alpha), asserts(p1)))


def test_reflect_down_single_assertion_rejected():
    with pytest.raises(ArityError):
        reflect_down(junction(asserts(A)))


def test_reflect_down_carries_context_unchanged():
    ctx = (p0, p0, B)
    m = junction(asserts(A, context=ctx), asserts(B, context=ctx))
    out = reflect_down(m)
    assert out.context == ctx  # nothing duplicated, nothing dropped


def test_reflect_down_needs_shared_context():
    with pytest.raises(MixedLevel):
        reflect_down(junction(asserts(A, context=(p0,)), asserts(B)))


def test_nary_reflection_folds_left_and_warns():
    m = junction(asserts(A), asserts(B), asserts(p0))
    with pytest.warns(NaryReflectionWarning):
        out = reflect_down(m)
    assert out == asserts(ClassicalAnd(ClassicalAnd(A, B), p0))

    q = junction(quantum_assertion(0.1), quantum_assertion(0.2), quantum_assertion(0.3))
    with pytest.warns(NaryReflectionWarning):
        out = reflect_down(q)
    inner = qand(0.1, 0.2, p(0.1), p(0.2))
    assert out == asserts(qand(1.0, 0.3, inner, p(0.3)))


def test_reflect_up_examples():
    assert reflect_up(asserts(qand(alpha, beta, p(alpha), p(beta)))) == junction(
        quantum_assertion(alpha), quantum_assertion(beta))
    assert reflect_up(asserts(ClassicalAnd(A, B))) == junction(asserts(A), asserts(B))
    with pytest.raises(NotCompound):
        reflect_up(asserts(p0))
    with pytest.raises(NotCompound):
        reflect_up(asserts(qand(alpha, beta, p(alpha), p(beta)), 0.5))


@settings(max_examples=300, deadline=None)
@given(S.well_leveled_junctions())
def test_round_trip_and_level_preservation(m):
    down = reflect_down(m)
    assert reflect_up(down) == m
    assert reflect_down(reflect_up(down)) == down
    assert level_of(down.prop) is level_of(m)
    assert check_reflection(m, down).ok


@settings(max_examples=100, deadline=None)
@given(S.well_leveled_junctions(2, 4))
def test_reflection_never_duplicates_or_drops_context(m):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NaryReflectionWarning)
        down = reflect_down(m)
    assert down.context == m.parts[0].context
    for part in reflect_up(down).parts:
        assert part.context == m.parts[0].context


# check_reflection ------------------------------------------------------------------------

def test_check_eq_52_pattern():
    m = junction(asserts(p0), asserts(p1))
    verdict = check_reflection(m, asserts(qand(alpha, beta, p0, p1)))
    assert not verdict.ok and verdict.code == E_LEVEL_52
    assert "amplitudes appear from nowhere" in verdict.message


def test_check_eq_53_pattern():
    m = junction(quantum_assertion(alpha), quantum_assertion(beta))
    verdict = check_reflection(m, asserts(ClassicalAnd(p0, p1)))
    assert not verdict.ok and verdict.code == E_LEVEL_53
    assert "assertion degrees discarded" in verdict.message


def test_check_ok():
    m = junction(quantum_assertion(alpha), quantum_assertion(beta))
    assert check_reflection(m, asserts(qand(alpha, beta, p(alpha), p(beta)))).ok


def test_check_other_mismatches():
    m = junction(quantum_assertion(alpha), quantum_assertion(beta))
    swapped = asserts(qand(beta, alpha, p(beta), p(alpha)))
    assert check_reflection(m, swapped).code == E_REFLECT_MISMATCH
    mixed = junction(quantum_assertion(alpha), asserts(p1))
    assert check_reflection(mixed, asserts(p0)).code == E_LEVEL_MIXED


def test_structural_equality_is_exact():
    nudged = 0.30000000000000004  # next float after 0.3
    a = asserts(qand(0.3, 0.4, p(0.3), p(0.4)))
    b = asserts(qand(nudged, 0.4, p(nudged), p(0.4)))
    assert a != b
    assert a == asserts(qand(0.3, 0.4, p(0.3), p(0.4)))


# structural rules ------------------------------------------------------------------------

@pytest.mark.parametrize("rule,sequent,reason", [
    (StructuralRule.CONTRACTION, Sequent((A, A), (B,)), "no-cloning"),
    (StructuralRule.WEAKENING, Sequent((), (B,)), "no-erase"),
    (StructuralRule.CONTRACTION, Sequent((), (B,)), "no-cloning"),
    ("weakening", Sequent((p(0.2),), ()), "no-erase"),
])
def test_structural_rules_forbidden(rule, sequent, reason):
    with pytest.raises(StructuralRuleForbidden) as info:
        apply_structural_rule(rule, sequent)
    assert reason in info.value.reason
    assert info.value.code in ("E_STRUCT_CONTRACTION", "E_STRUCT_WEAKENING")


@settings(max_examples=100, deadline=None)
@given(S.sequents, st.sampled_from(list(StructuralRule)))
def test_structural_rules_rejected_on_every_sequent(s, rule):
    with pytest.raises(StructuralRuleForbidden):
        apply_structural_rule(rule, s)
