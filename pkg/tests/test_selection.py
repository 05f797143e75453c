"""Predicted vs normative card selection, over canonical and odd layouts."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supervene import (
    READING_ANTECEDENT,
    READING_BICONDITIONAL,
    READING_DOUBLE,
    READING_DUAL,
    Card,
    Conditional,
    InvalidModelError,
    Literal,
    MalformedCardError,
    SelectionTask,
    compare,
    normative_selection,
    predict_selection,
)

RULE = Conditional("r", Literal("p"), Literal("q"))

P = Card("P", Literal("p"))
NOT_P = Card("notP", Literal("p", True))
Q = Card("Q", Literal("q"))
NOT_Q = Card("notQ", Literal("q", True))
CANONICAL = (P, NOT_P, Q, NOT_Q)


def task(ca1, ca2, cards=CANONICAL, rule=RULE):
    return SelectionTask(rule, cards, ca1_applies=ca1, ca2_applies=ca2)


class TestNormative:
    def test_canonical_layout(self):
        assert normative_selection(task(False, True)) == {"P", "notQ"}

    def test_without_falsifying_cards(self):
        assert normative_selection(task(True, True, (NOT_P, Q))) == frozenset()

    def test_rule_with_negated_literals(self):
        rule = Conditional("r2", Literal("p", True), Literal("q", True))
        # antecedent-true is now the !p card, consequent-false the q card
        t = task(False, False, CANONICAL, rule)
        assert normative_selection(t) == {"notP", "Q"}


class TestPredictions:
    def test_ca2_only_checks_the_antecedent(self):
        p = predict_selection(task(False, True))
        assert p.selected == {"P"}
        assert p.reading == READING_ANTECEDENT

    def test_both_closures_match_the_normative_answer(self):
        p = predict_selection(task(True, True))
        assert p.selected == {"P", "notQ"}
        assert p.reading == READING_DOUBLE
        assert p.selected == normative_selection(task(True, True))

    def test_no_closures_read_as_equivalence(self):
        p = predict_selection(task(False, False))
        assert p.selected == {"P", "Q"}
        assert p.reading == READING_BICONDITIONAL

    def test_ca1_only_is_tagged_extrapolated(self):
        p = predict_selection(task(True, False))
        assert p.selected == {"notQ"}
        assert p.reading == READING_DUAL
        assert "extrapolated" in p.rationale["notQ"]

    def test_rationale_covers_every_card(self):
        p = predict_selection(task(False, True))
        assert set(p.rationale) == {"P", "notP", "Q", "notQ"}

    def test_biconditional_swaps_exactly_one_card_on_the_canonical_layout(self):
        predicted = predict_selection(task(False, False)).selected
        normative = normative_selection(task(False, False))
        assert normative - predicted == {"notQ"}
        assert predicted - normative == {"Q"}

    def test_ca2_only_never_commits(self):
        for cards_n in range(1, len(CANONICAL) + 1):
            t = task(False, True, CANONICAL[:cards_n])
            assert predict_selection(t).selected <= normative_selection(t)


class TestCompare:
    def test_agreement_case(self):
        report = compare(task(True, True))
        assert report.agreement
        assert report.hits == {"P", "notQ"}
        assert not report.omissions and not report.commissions

    def test_omission_case(self):
        report = compare(task(False, True))
        assert not report.agreement
        assert report.omissions == {"notQ"}
        assert not report.commissions

    def test_commission_case(self):
        report = compare(task(False, False))
        assert report.commissions == {"Q"}
        assert report.omissions == {"notQ"}


class TestValidation:
    def test_cards_must_mention_rule_properties(self):
        with pytest.raises(MalformedCardError):
            task(False, False, (Card("X", Literal("z")),), RULE)

    def test_needs_at_least_one_card(self):
        with pytest.raises(InvalidModelError):
            task(False, False, ())

    def test_duplicate_card_ids_rejected(self):
        with pytest.raises(InvalidModelError):
            task(False, False, (P, Card("P", Literal("q"))))


flags = st.tuples(st.booleans(), st.booleans())


@st.composite
def random_task(draw):
    negs = draw(st.tuples(st.booleans(), st.booleans()))
    rule = Conditional("r", Literal("p", negs[0]), Literal("q", negs[1]))
    kinds = st.sampled_from(
        [Literal("p"), Literal("p", True), Literal("q"), Literal("q", True)]
    )
    visibles = draw(st.lists(kinds, min_size=1, max_size=6))
    cards = tuple(Card(f"c{i}", vis) for i, vis in enumerate(visibles))
    ca1, ca2 = draw(flags)
    return SelectionTask(rule, cards, ca1_applies=ca1, ca2_applies=ca2)


@settings(max_examples=400)
@given(random_task())
def test_antecedent_false_cards_are_never_selected(t):
    selected = predict_selection(t).selected
    for card in t.cards:
        if card.visible.property == t.rule.antecedent.property:
            if card.visible.negated != t.rule.antecedent.negated:
                assert card.id not in selected


def test_never_selects_antecedent_false_over_many_seeded_tasks():
    rng = random.Random(20260814)
    literals = [Literal("p"), Literal("p", True), Literal("q"), Literal("q", True)]
    for _ in range(2000):
        rule = Conditional(
            "r", Literal("p", rng.random() < 0.5), Literal("q", rng.random() < 0.5)
        )
        cards = tuple(
            Card(f"c{i}", rng.choice(literals))
            for i in range(rng.randint(1, 6))
        )
        t = SelectionTask(
            rule, cards, ca1_applies=rng.random() < 0.5, ca2_applies=rng.random() < 0.5
        )
        for card_id in predict_selection(t).selected:
            card = next(c for c in cards if c.id == card_id)
            antecedent_false = (
                card.visible.property == rule.antecedent.property
                and card.visible.negated != rule.antecedent.negated
            )
            assert not antecedent_false
