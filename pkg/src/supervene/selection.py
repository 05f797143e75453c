"""Card-selection prediction for rule-testing tasks.

Given a conditional rule and cards each showing one property value, the
normative answer turns the cards that can falsify the rule: antecedent-true
and consequent-false. The predicted answer treats checking as compression
testing, gated by which closure assumptions the reasoner grants:

* consequent-side discrimination only (ca2): antecedent-true cards;
* both closures: antecedent-true plus consequent-false cards;
* neither: the rule reads as an equivalence, antecedent-true plus
  consequent-true cards;
* antecedent-side sufficiency only (ca1): consequent-false cards; this
  combination has no observed reading behind it and is tagged
  extrapolated-dual.

Antecedent-false cards are never predicted: with the antecedent absent the
rule says nothing, so there is nothing to compress.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidModelError, MalformedCardError
from .model import Conditional, Literal

READING_ANTECEDENT = "antecedent-compression"
READING_DOUBLE = "double-compression"
READING_BICONDITIONAL = "biconditional"
READING_DUAL = "extrapolated-dual"

READINGS = (READING_ANTECEDENT, READING_DOUBLE, READING_BICONDITIONAL, READING_DUAL)


@dataclass(frozen=True)
class Card:
    """One partial observation: a single property seen true or false."""

    id: str
    visible: Literal


@dataclass(frozen=True)
class SelectionTask:
    rule: Conditional
    cards: tuple[Card, ...]
    ca1_applies: bool
    ca2_applies: bool
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(self.cards))
        if not self.cards:
            raise InvalidModelError("a selection task needs at least one card")
        seen = set()
        rule_props = {self.rule.antecedent.property, self.rule.consequent.property}
        for card in self.cards:
            if card.id in seen:
                raise InvalidModelError(f"duplicate card id {card.id!r}")
            seen.add(card.id)
            if card.visible.property not in rule_props:
                raise MalformedCardError(
                    f"card {card.id!r} shows {card.visible.property!r}, "
                    f"which rule {self.rule.id!r} never mentions"
                )


def _settles(observed: Literal, target: Literal) -> bool | None:
    """Truth value the observation fixes for the target literal, if any."""
    if observed.property != target.property:
        return None
    return observed.negated == target.negated


@dataclass(frozen=True)
class Prediction:
    selected: frozenset[str]
    reading: str
    rationale: dict[str, str]


@dataclass(frozen=True)
class ComparisonReport:
    prediction: Prediction
    normative: frozenset[str]
    agreement: bool
    hits: frozenset[str]
    omissions: frozenset[str]
    commissions: frozenset[str]


def normative_selection(task: SelectionTask) -> frozenset[str]:
    """Cards that can falsify the rule: antecedent-true or consequent-false."""
    out = set()
    for card in task.cards:
        ant = _settles(card.visible, task.rule.antecedent)
        cons = _settles(card.visible, task.rule.consequent)
        if ant is True or cons is False:
            out.add(card.id)
    return frozenset(out)


_IRRELEVANT = "antecedent false: the rule is silent, nothing to compress"


def predict_selection(task: SelectionTask) -> Prediction:
    if task.ca2_applies and not task.ca1_applies:
        reading = READING_ANTECEDENT
    elif task.ca1_applies and task.ca2_applies:
        reading = READING_DOUBLE
    elif not task.ca1_applies and not task.ca2_applies:
        reading = READING_BICONDITIONAL
    else:
        reading = READING_DUAL

    selected = set()
    rationale = {}
    for card in task.cards:
        ant = _settles(card.visible, task.rule.antecedent)
        cons = _settles(card.visible, task.rule.consequent)
        if ant is False:
            rationale[card.id] = _IRRELEVANT
            continue
        reasons = []
        if reading == READING_ANTECEDENT:
            if ant is True:
                reasons.append("antecedent true: check the consequent comes along at once")
        elif reading == READING_DOUBLE:
            if ant is True:
                reasons.append("antecedent true: check the consequent comes along at once")
            if cons is False:
                reasons.append("consequent false: check every way to it drops at once")
        elif reading == READING_BICONDITIONAL:
            if ant is True:
                reasons.append("antecedent true: equivalence reading, left side checked")
            if cons is True:
                reasons.append("consequent true: equivalence reading, right side checked")
        else:
            if cons is False:
                reasons.append(
                    "consequent false: mirror-image check (extrapolated, no observed reading)"
                )
        if reasons:
            selected.add(card.id)
            rationale[card.id] = "; ".join(reasons)
        else:
            rationale[card.id] = _not_selected_note(reading, ant, cons)
    return Prediction(frozenset(selected), reading, rationale)


def _not_selected_note(reading: str, ant, cons) -> str:
    if reading == READING_ANTECEDENT:
        return "consequent side: no closure assumed there, not informative"
    if reading == READING_DOUBLE:
        return "consequent true: compatible with the rule either way, not informative"
    if reading == READING_BICONDITIONAL:
        return "consequent false: equivalence reading skips the contrapositive"
    if ant is True:
        return "antecedent true: no closure assumed on that side"
    return "consequent true: only its absence would be checked here"


def compare(task: SelectionTask) -> ComparisonReport:
    prediction = predict_selection(task)
    normative = normative_selection(task)
    return ComparisonReport(
        prediction=prediction,
        normative=normative,
        agreement=prediction.selected == normative,
        hits=prediction.selected & normative,
        omissions=normative - prediction.selected,
        commissions=prediction.selected - normative,
    )
