import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tupleval.formula import (
    And,
    ArityError,
    Atom,
    Const,
    Exists,
    Forall,
    Not,
    Or,
    Sequent,
    Signature,
    Var,
    atom,
    atoms,
    count_formulas,
    depth,
    enumerate_formulas,
    free_variables,
    is_propositional,
    is_sentence,
    signature_of,
    substitute,
    syntactically_equal,
)
from tupleval.parser import parse_formula

from conftest import FORMULAS

p, q = Atom("p"), Atom("q")


def test_free_variables_examples():
    assert free_variables(parse_formula("P(x)")) == {"x"}
    assert free_variables(parse_formula("forall x. P(x)")) == set()
    # the x in Q(x) sits outside the binder
    f = Or(Forall("x", atom("P", "x", "y")), atom("Q", "x"))
    assert free_variables(f) == {"x", "y"}


def test_substitute_examples():
    c = Const("c")
    assert substitute(atom("P", "x"), "x", c) == atom("P", "c")
    f = Forall("x", atom("P", "x"))
    assert syntactically_equal(substitute(f, "x", c), f)


def test_substitute_avoids_capture():
    f = Exists("y", atom("P", "x", "y"))
    g = substitute(f, "x", Var("y"))
    # expected result up to the name of the binder: exists y'. P(y, y')
    assert g == Exists("w", Atom("P", (Var("y"), Var("w"))))
    assert g.var == "y1"
    assert free_variables(g) == {"y"}
    # naive replacement would capture the inserted y
    naive = Exists("y", Atom("P", (Var("y"), Var("y"))))
    assert g != naive


def test_substitute_nested_renaming_is_deterministic():
    f = parse_formula("forall y. exists y1. R(x, y) & R(y1, x)")
    g = substitute(f, "x", Var("y"))
    assert str(g) == "forall y2. exists y1. R(y, y2) & R(y1, y)"


def test_alpha_equivalence_in_equality_and_hash():
    f = Forall("x", atom("P", "x"))
    g = Forall("y", atom("P", "y"))
    assert f == g and hash(f) == hash(g)
    assert not syntactically_equal(f, g)
    assert Forall("x", atom("R", "x", "y")) != Forall("y", atom("R", "y", "y"))


def test_signature_examples():
    sig = signature_of(And(p, Not(q)))
    assert sig.predicates == {"p": 0, "q": 0} and sig.constants == frozenset()
    sig = signature_of(parse_formula("forall x. P(x, c)"))
    assert sig.predicates == {"P": 2} and sig.constants == {"c"}
    with pytest.raises(ArityError):
        signature_of(And(atom("P", "c"), atom("P", "c", "d")))


def test_signature_check_and_ground_atoms():
    sig = Signature({"P": 1, "p": 0}, frozenset({"a", "b"}))
    assert [str(a) for a in sig.ground_atoms()] == ["P(a)", "P(b)", "p"]
    with pytest.raises(ArityError):
        sig.check(atom("P", "a", "b"))


def test_sequent_premises_are_a_set():
    s = Sequent((p, p, q), q)
    assert s.premises == (p, q)


def test_enumerate_small_examples():
    sig = Signature({"p": 0})
    assert list(enumerate_formulas(sig, 0, 1)) == [p]
    assert list(enumerate_formulas(sig, 1, 1)) == [p, Not(p), And(p, p), Or(p, p)]
    assert list(enumerate_formulas(sig, 3, 0)) == []


def _closure(letters, max_depth):
    """Independent construction: all trees of depth <= d, as a set."""
    level = {Atom(a) for a in letters}
    for _ in range(max_depth):
        level = level | {Not(a) for a in level} | {
            cls(a, b) for a, b in itertools.product(level, level) for cls in (And, Or)
        }
    return level


def test_enumerate_count_against_independent_oracle():
    # depth 0: 2; depth 1: 2 + 2 + 2*4 = 12; depth 2: 2 + 12 + 2*144 = 302
    assert count_formulas(2, 2) == 302
    oracle = _closure(["p", "q"], 2)
    assert len(oracle) == 302
    out = list(enumerate_formulas(Signature({"p": 0, "q": 0}), 2, 2))
    assert len(out) == 302
    assert set(out) == oracle
    assert len(set(out)) == len(out)


def test_enumerate_respects_atom_bound():
    sig = Signature({"p": 0, "q": 0, "r": 0})
    out = list(enumerate_formulas(sig, 2, 2))
    assert all(len(set(atoms(f))) <= 2 for f in out)
    assert all(depth(f) <= 2 for f in out)
    brute = {f for f in _closure(["p", "q", "r"], 2) if len(set(atoms(f))) <= 2}
    assert set(out) == brute and len(out) == len(brute)


def test_enumerate_is_deterministic():
    sig = Signature({"p": 0, "q": 0})
    assert list(enumerate_formulas(sig, 2, 2)) == list(enumerate_formulas(sig, 2, 2))


def test_enumerate_ground_first_order_atoms():
    sig = Signature({"P": 1}, frozenset({"a"}))
    out = list(enumerate_formulas(sig, 1, 1))
    assert [str(f) for f in out] == ["P(a)", "~P(a)", "P(a) & P(a)", "P(a) | P(a)"]


@given(FORMULAS, st.sampled_from(["x", "y", "z"]))
def test_substitute_self_is_identity_up_to_renaming(f, x):
    assert substitute(f, x, Var(x)) == f


@given(FORMULAS, st.sampled_from(["x", "y", "z"]), st.sampled_from(["a", "c"]))
def test_substituting_a_constant_removes_the_variable(f, x, c):
    assert free_variables(substitute(f, x, Const(c))) == free_variables(f) - {x}


@given(FORMULAS, st.sampled_from(["x", "y"]), st.sampled_from(["x", "y", "z"]))
@settings(max_examples=200)
def test_substituting_a_variable_never_captures(f, x, y):
    g = substitute(f, x, Var(y))
    expected = free_variables(f) - {x}
    if x in free_variables(f):
        expected |= {y}
    assert free_variables(g) == expected


def test_propositional_and_sentence_predicates():
    assert is_propositional(And(p, Not(q)))
    assert not is_propositional(atom("P", "a"))
    assert is_sentence(Forall("x", atom("P", "x")))
    assert not is_sentence(atom("P", "x"))
