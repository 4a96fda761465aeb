import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tupleval.parser import parse_formula, parse_sequent
from tupleval.threeval import HALF, ONE, ZERO, ThreeValuedInterpretation, eval3_sentence, neg3
from tupleval.translation import (
    LEMMA_SIGNATURE,
    collapse_interpretation,
    collapse_value,
    embed_interpretation,
    embed_value,
    random_clemens_interpretation,
    random_first_order_sequents,
    random_formula,
    random_three_interpretation,
    run_first_order_theorem_suite,
    run_lemma_suites,
    run_propositional_theorem_suite,
    theorem_pairings_for_sequent,
    verify_lemma_3toc,
    verify_lemma_cto3,
    verify_theorem_on_sequent,
)
from tupleval.tuples import ClemensInterpretation, TupleValue, all_values, eval_sentence, tuple_neg

T = TupleValue.parse


def test_collapse_examples():
    assert collapse_value(T("111")) is ONE
    assert collapse_value(T("101")) is HALF
    assert collapse_value(T("00")) is ZERO


def test_embed_examples():
    assert embed_value(HALF, 4) == T("1110")
    assert embed_value(ONE, 2) == T("11")
    assert embed_value(ZERO, 3) == T("000")
    with pytest.raises(ValueError):
        embed_value(HALF, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_collapse_inverts_embed(n):
    for a in (ZERO, HALF, ONE):
        assert collapse_value(embed_value(a, n)) is a


def test_embedding_is_not_a_negation_homomorphism():
    for n in (2, 3, 4):
        middle = embed_value(HALF, n)
        flipped = tuple_neg(middle)
        assert flipped == T("0" * (n - 1) + "1")
        assert flipped != embed_value(neg3(HALF), n)
        # the endpoints still agree after collapsing
        assert collapse_value(flipped) is HALF


def test_collapse_is_a_homomorphism():
    for n in (2, 3):
        vals = all_values(n)
        for a in vals:
            assert collapse_value(tuple_neg(a)) is neg3(collapse_value(a))


def test_interpretation_maps():
    m = ClemensInterpretation(1, {"c": 0}, {"P": {(0,): T("10")}}, width=2)
    c = collapse_interpretation(m)
    assert c.predicates == {"P": {(0,): HALF}} and c.constants == {"c": 0}
    m3 = ThreeValuedInterpretation(1, {}, {"P": {(0,): ZERO}})
    e = embed_interpretation(m3, 2)
    assert e.predicates == {"P": {(0,): T("00")}} and e.width == 2


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(2, 4))
@settings(max_examples=50)
def test_collapse_embed_round_trip_on_interpretations(seed, size, n):
    m = random_three_interpretation(random.Random(seed), LEMMA_SIGNATURE, size)
    assert collapse_interpretation(embed_interpretation(m, n)) == m


def test_lemma_cto3_examples():
    m = ClemensInterpretation(1, {"c": 0}, {"P": {(0,): T("11")}}, width=2)
    chk = verify_lemma_cto3(m, parse_formula("P(c)"))
    assert chk.passed and str(chk.tuple_value) == "11" and chk.three_value == "1"
    m = ClemensInterpretation(1, {"c": 0}, {"P": {(0,): T("10")}}, width=2)
    chk = verify_lemma_cto3(m, parse_formula("~P(c)"))
    assert chk.passed and str(chk.tuple_value) == "01" and chk.three_value == "1/2"


def test_lemma_3toc_examples():
    m = ThreeValuedInterpretation(1, {"c": 0}, {"P": {(0,): HALF}})
    chk = verify_lemma_3toc(m, parse_formula("P(c) & ~P(c)"), 2)
    assert chk.passed and chk.three_value == "1/2" and str(chk.tuple_value) == "01"
    m = ThreeValuedInterpretation(1, {"c": 0}, {"P": {(0,): ONE}})
    chk = verify_lemma_3toc(m, parse_formula("P(c)"), 2)
    assert chk.passed and str(chk.tuple_value) == "11"


@given(st.integers(0, 2**32))
@settings(max_examples=100)
def test_lemmas_on_random_pairs(seed):
    rng = random.Random(seed)
    s = random_formula(rng, LEMMA_SIGNATURE, 4, 2)
    size, n = rng.randint(1, 3), rng.randint(2, 3)
    assert verify_lemma_cto3(random_clemens_interpretation(rng, LEMMA_SIGNATURE, size, n), s).passed
    assert verify_lemma_3toc(random_three_interpretation(rng, LEMMA_SIGNATURE, size), s, n).passed


def test_middle_values_are_not_tracked():
    # only top and bottom are preserved; 1/2 maps to 11..10 but ~P can land elsewhere
    m3 = ThreeValuedInterpretation(1, {"c": 0}, {"P": {(0,): HALF}})
    e = embed_interpretation(m3, 3)
    s = parse_formula("~P(c)")
    assert eval3_sentence(s, m3) is HALF
    assert eval_sentence(s, e) == T("001") != embed_value(HALF, 3)


def test_lemma_suite_report():
    cto3, to_c = run_lemma_suites(samples=300, seed=5)
    assert cto3.checked == to_c.checked == 300
    assert cto3.ok and to_c.ok and not cto3.failures
    assert cto3.to_json()["seed"] == 5
    again = run_lemma_suites(samples=300, seed=5)
    assert [r.to_json() for r in again] == [cto3.to_json(), to_c.to_json()]


def test_theorem_examples():
    assert verify_theorem_on_sequent(parse_sequent("p, ~p |- q"), 2, "tolerant")
    assert verify_theorem_on_sequent(parse_sequent("|- p | ~p"), 3, "strict")
    assert verify_theorem_on_sequent(parse_sequent("p & q |- p"), 2, "bossy")
    pairs = theorem_pairings_for_sequent(parse_sequent("p, ~p |- q"), 2)
    assert [pairs[k][0].valid for k in ("strict", "bossy", "tolerant", "st")] == [True, True, False, True]
    assert all(a.valid == b.valid for a, b in pairs.values())


def test_propositional_theorem_small_corpus():
    rep = run_propositional_theorem_suite(3, depth=1, atoms=2, max_premises=2)
    assert rep.ok and rep.checked == 4 * 12 * (1 + 12 + 66)


def test_first_order_theorem_small_sample():
    rep = run_first_order_theorem_suite(samples=20, seed=1)
    assert rep.ok and rep.checked == 20 * 4 * 2


def test_random_first_order_sequents_are_sentences_and_quantified():
    seqs = list(random_first_order_sequents(50, seed=2))
    assert len(seqs) == 50
    assert all(s.is_closed() and not s.is_propositional() for s in seqs)
    assert seqs == list(random_first_order_sequents(50, seed=2))


def test_harness_detects_a_wrong_pairing(monkeypatch):
    import tupleval.translation as tr

    monkeypatch.setitem(tr.PAIRINGS, "tolerant", ("tolerant", "k3"))
    assert run_propositional_theorem_suite(2, depth=1, pairings=("tolerant",)).disagreements > 0
    assert run_first_order_theorem_suite(100, seed=1, pairings=("tolerant",)).disagreements > 0
