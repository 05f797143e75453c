"""Star-property closures for single-literal rules, and the two domain
closure checks declared on a rule (sufficiency of known conditions for the
consequent; discriminating property sets for the antecedent).

Closing a rule a -> b on the antecedent side appends a synthetic property
marking "b obtained without a". Over a domain satisfying the rule, the
consequent then both weakly supervenes on and ontologically depends on
{a, star}. The consequent-side closure is the mirror construction on
negations: it appends a property whose negation marks "a absent while b
present", making !a weakly supervene on {!b, !star}.

Both constructions leave one entity pattern unconstrained (antecedent and
consequent both true for the first, both false for the second); the star
value there defaults to False and is selectable via `unconstrained_value`.
The dependence results hold either way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ClosureNotSatisfiedError,
    MissingClosureDeclarationError,
    NameCollisionError,
    NecessityViolatedError,
    NegativeLiteralError,
    RuleViolatedError,
    SufficiencyViolatedError,
)
from .model import (
    Conditional,
    DomainModel,
    Entity,
    Literal,
    Vocabulary,
    World,
)


@dataclass(frozen=True)
class ClosureResult:
    """A domain extended with one synthetic star property.

    closed_set holds the literals the supervenient literal now rests on;
    entities agree with the originals on every original property.
    """

    star_name: str
    supervenient: Literal
    closed_set: tuple[Literal, ...]
    extended_vocabulary: Vocabulary
    extended_domain: DomainModel


def _require_positive(rule: Conditional) -> None:
    if rule.antecedent.negated or rule.consequent.negated:
        raise NegativeLiteralError(
            f"rule {rule.id!r}: closure needs positive literals; "
            "rewrite via the mirror closure on the contrapositive"
        )


def _require_satisfied(domain: DomainModel, rule: Conditional) -> None:
    for entity in domain.entities:
        if not rule.holds_in(entity.world):
            raise RuleViolatedError(
                f"entity {entity.id!r} falsifies rule {rule.id!r} ({rule})"
            )


def _extend(domain: DomainModel, star: str, star_values: list[bool]) -> tuple[Vocabulary, DomainModel]:
    if star in domain.vocabulary:
        raise NameCollisionError(f"property {star!r} already exists")
    vocab = Vocabulary(domain.vocabulary.names + (star,))
    entities = tuple(
        # star is appended last, so it takes the new lowest bit
        Entity(e.id, World(vocab, (e.world.code << 1) | int(value)))
        for e, value in zip(domain.entities, star_values)
    )
    extended = DomainModel(vocab, entities, domain.conditionals)
    return vocab, extended


def close_antecedent(
    domain: DomainModel, rule: Conditional, unconstrained_value: bool = False
) -> ClosureResult:
    """Append a star property true exactly when the consequent obtains
    without the antecedent; the (both true) pattern is unconstrained and
    takes `unconstrained_value`.

    The domain must satisfy the rule. Afterwards the consequent weakly
    supervenes on {antecedent, star} and ontologically depends on it.
    """
    _require_positive(rule)
    _require_satisfied(domain, rule)
    star = f"{rule.antecedent.property}__star"
    values = []
    for entity in domain.entities:
        ant = rule.antecedent.holds_in(entity.world)
        cons = rule.consequent.holds_in(entity.world)
        if cons and not ant:
            values.append(True)
        elif cons and ant:
            values.append(unconstrained_value)
        else:
            values.append(False)
    vocab, extended = _extend(domain, star, values)
    return ClosureResult(
        star_name=star,
        supervenient=rule.consequent,
        closed_set=(rule.antecedent, Literal(star)),
        extended_vocabulary=vocab,
        extended_domain=extended,
    )


def close_consequent(
    domain: DomainModel, rule: Conditional, unconstrained_value: bool = False
) -> ClosureResult:
    """Append a star property whose negation is true exactly when the
    antecedent is absent while the consequent obtains; the (both false)
    pattern is unconstrained, its negated-star value is
    `unconstrained_value`.

    The domain must satisfy the rule. Afterwards the negated antecedent
    weakly supervenes on {negated consequent, negated star}.
    """
    _require_positive(rule)
    _require_satisfied(domain, rule)
    star = f"{rule.consequent.property}__costar"
    values = []
    for entity in domain.entities:
        ant = rule.antecedent.holds_in(entity.world)
        cons = rule.consequent.holds_in(entity.world)
        if cons and not ant:
            neg_star = True
        elif not cons and not ant:
            neg_star = unconstrained_value
        else:
            neg_star = False
        values.append(not neg_star)
    vocab, extended = _extend(domain, star, values)
    return ClosureResult(
        star_name=star,
        supervenient=rule.antecedent.negate(),
        closed_set=(rule.consequent.negate(), Literal(star, negated=True)),
        extended_vocabulary=vocab,
        extended_domain=extended,
    )


def _declared(rule: Conditional, which: str) -> tuple[Literal, ...]:
    closure = rule.ca1_set if which == "ca1" else rule.ca2_set
    if closure is None:
        raise MissingClosureDeclarationError(
            f"rule {rule.id!r} declares no {which} closure set"
        )
    return closure


def check_ca1(domain: DomainModel, rule: Conditional) -> bool:
    """No entity has the consequent true while every declared sufficient
    condition is false."""
    closure = _declared(rule, "ca1")
    for name in (lit.property for lit in closure):
        domain.vocabulary.index(name)
    for entity in domain.entities:
        if rule.consequent.holds_in(entity.world) and not any(
            lit.holds_in(entity.world) for lit in closure
        ):
            return False
    return True


def check_ca2(domain: DomainModel, rule: Conditional) -> bool:
    """No entity has the antecedent false while every declared
    discriminating property is true."""
    closure = _declared(rule, "ca2")
    for name in (lit.property for lit in closure):
        domain.vocabulary.index(name)
    for entity in domain.entities:
        if not rule.antecedent.holds_in(entity.world) and all(
            lit.holds_in(entity.world) for lit in closure
        ):
            return False
    return True


@dataclass(frozen=True)
class BulletRecord:
    entity_id: str
    note: str


@dataclass(frozen=True)
class Bullet:
    statement: str
    records: tuple[BulletRecord, ...]


@dataclass(frozen=True)
class ConsequenceReport:
    """Entity-by-entity confirmation of the two inference shortcuts a
    closure licenses, with one record per entity the bullet speaks about."""

    rule_id: str
    mode: str
    closure_set: tuple[Literal, ...]
    bullets: tuple[Bullet, ...]


def _lits(closure) -> str:
    return ", ".join(str(lit) for lit in closure)


def ca1_consequences(domain: DomainModel, rule: Conditional) -> ConsequenceReport:
    """Report licensed by a holding ca1 closure: falsifying the consequent
    discards every declared sufficient condition at once.

    Requires check_ca1 to hold and every declared condition to actually be
    sufficient (condition true forces consequent true) on this domain.
    """
    closure = _declared(rule, "ca1")
    if not check_ca1(domain, rule):
        raise ClosureNotSatisfiedError(
            f"rule {rule.id!r}: some entity has {rule.consequent} "
            "without any declared sufficient condition"
        )
    for lit in closure:
        for entity in domain.entities:
            if lit.holds_in(entity.world) and not rule.consequent.holds_in(entity.world):
                raise SufficiencyViolatedError(
                    f"entity {entity.id!r} has {lit} but not {rule.consequent}"
                )
    down, up = [], []
    for entity in domain.entities:
        if not rule.consequent.holds_in(entity.world):
            down.append(
                BulletRecord(entity.id, f"{rule.consequent} false; all of {_lits(closure)} false")
            )
        else:
            first = next(lit for lit in closure if lit.holds_in(entity.world))
            up.append(BulletRecord(entity.id, f"{rule.consequent} true; {first} true"))
    return ConsequenceReport(
        rule_id=rule.id,
        mode="modus-tollens-at-once",
        closure_set=closure,
        bullets=(
            Bullet(
                f"whenever {rule.consequent} is false, every condition in the closure is false",
                tuple(down),
            ),
            Bullet(
                f"whenever {rule.consequent} is true, at least one condition in the closure is true",
                tuple(up),
            ),
        ),
    )


def ca2_consequences(domain: DomainModel, rule: Conditional) -> ConsequenceReport:
    """Report licensed by a holding ca2 closure: affirming the antecedent
    produces every declared discriminating property at once.

    Requires check_ca2 to hold and every declared property to actually be
    necessary (antecedent true forces it true) on this domain.
    """
    closure = _declared(rule, "ca2")
    if not check_ca2(domain, rule):
        raise ClosureNotSatisfiedError(
            f"rule {rule.id!r}: some entity lacks {rule.antecedent} "
            "while carrying the whole declared property set"
        )
    for lit in closure:
        for entity in domain.entities:
            if rule.antecedent.holds_in(entity.world) and not lit.holds_in(entity.world):
                raise NecessityViolatedError(
                    f"entity {entity.id!r} has {rule.antecedent} but not {lit}"
                )
    up, down = [], []
    for entity in domain.entities:
        if rule.antecedent.holds_in(entity.world):
            up.append(
                BulletRecord(entity.id, f"{rule.antecedent} true; all of {_lits(closure)} true")
            )
        else:
            first = next(lit for lit in closure if not lit.holds_in(entity.world))
            down.append(BulletRecord(entity.id, f"{rule.antecedent} false; {first} false"))
    return ConsequenceReport(
        rule_id=rule.id,
        mode="modus-ponens-at-once",
        closure_set=closure,
        bullets=(
            Bullet(
                f"whenever {rule.antecedent} is true, every property in the closure is true",
                tuple(up),
            ),
            Bullet(
                f"whenever {rule.antecedent} is false, at least one property in the closure is false",
                tuple(down),
            ),
        ),
    )
