"""Line-oriented knowledge-base format: one declaration per line.

    props <name> <name> ...
    entity <id>: <name>=T <name>=F ...     # total over declared props
    rule <id>: [!]<name> -> [!]<name>
    ca1 <rule-id>: [!]<name>, [!]<name>, ...
    ca2 <rule-id>: [!]<name>, ...
    card <id>: [!]<name>
    task <id>: rule=<id> cards=<id>,... ca1=yes|no ca2=yes|no [label="..."]

'#' starts a comment outside double quotes. Negation is written '!';
combining overbar marks (U+0304/U+0305) are accepted on input as negation
for table-style fixtures but are never emitted. render_kb produces the
canonical form, and parse_kb(render_kb(doc)) == doc.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

from .errors import (
    DuplicateIdError,
    InvalidModelError,
    MalformedCardError,
    ParseError,
    UnresolvedReferenceError,
)
from .model import Conditional, DomainModel, Entity, Literal, Vocabulary, World
from .selection import Card, SelectionTask

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_LABEL_RE = re.compile(r'label="([^"]*)"')
_OVERBARS = ("̄", "̅")


@dataclass(frozen=True)
class KbDocument:
    domain: DomainModel
    cards: tuple[Card, ...] = ()
    tasks: tuple[tuple[str, SelectionTask], ...] = ()

    def card(self, card_id: str) -> Card:
        for card in self.cards:
            if card.id == card_id:
                return card
        raise InvalidModelError(f"no card {card_id!r}")

    def task(self, task_id: str) -> SelectionTask:
        for tid, task in self.tasks:
            if tid == task_id:
                return task
        raise InvalidModelError(f"no task {task_id!r}")


def _strip_comment(line: str) -> str:
    quoted = False
    for i, ch in enumerate(line):
        if ch == '"':
            quoted = not quoted
        elif ch == "#" and not quoted:
            return line[:i]
    return line


def _parse_id(token: str, line_no: int, what: str) -> str:
    if not _ID_RE.fullmatch(token):
        raise ParseError(f"invalid {what} {token!r}", line_no)
    return token


def _parse_literal(token: str, line_no: int) -> Literal:
    text = unicodedata.normalize("NFD", token)
    negated = False
    for mark in _OVERBARS:
        if mark in text:
            negated = True
            text = text.replace(mark, "")
    if text.startswith("!"):
        negated = True
        text = text[1:]
    if not _ID_RE.fullmatch(text):
        raise ParseError(f"invalid literal {token!r}", line_no)
    return Literal(text, negated)


class _Parser:
    def __init__(self):
        self.props: tuple[str, ...] | None = None
        self.props_line = 0
        self.entities: list[tuple[int, str, dict[str, bool]]] = []
        self.rule_order: list[str] = []
        self.rules: dict[str, dict] = {}
        self.cards: list[tuple[int, str, Literal]] = []
        self.tasks: list[tuple[int, str, dict]] = []

    def require_props(self, line_no: int) -> tuple[str, ...]:
        if self.props is None:
            raise ParseError("props must be declared first", line_no)
        return self.props

    def check_prop(self, name: str, line_no: int) -> None:
        if name not in self.require_props(line_no):
            raise UnresolvedReferenceError(f"unknown property {name!r}", line_no)

    def feed(self, line_no: int, line: str) -> None:
        line = _strip_comment(line).strip()
        if not line:
            return
        directive, _, rest = line.partition(" ")
        handler = getattr(self, f"_on_{directive}", None)
        if handler is None:
            raise ParseError(f"unknown directive {directive!r}", line_no)
        handler(line_no, rest.strip())

    def _split_decl(self, rest: str, line_no: int, what: str) -> tuple[str, str]:
        head, sep, body = rest.partition(":")
        if not sep:
            raise ParseError(f"missing ':' after {what} id", line_no)
        return _parse_id(head.strip(), line_no, f"{what} id"), body.strip()

    def _on_props(self, line_no: int, rest: str) -> None:
        if self.props is not None:
            raise ParseError("duplicate props declaration", line_no)
        names = rest.split()
        if not names:
            raise ParseError("props needs at least one name", line_no)
        seen = set()
        for name in names:
            _parse_id(name, line_no, "property name")
            if name in seen:
                raise ParseError(f"duplicate property name {name!r}", line_no)
            seen.add(name)
        self.props = tuple(names)
        self.props_line = line_no

    def _on_entity(self, line_no: int, rest: str) -> None:
        entity_id, body = self._split_decl(rest, line_no, "entity")
        if any(entity_id == known for _, known, _a in self.entities):
            raise DuplicateIdError(f"duplicate entity id {entity_id!r}", line_no)
        props = self.require_props(line_no)
        assignment: dict[str, bool] = {}
        for token in body.split():
            name, sep, value = token.partition("=")
            if not sep:
                raise ParseError(f"expected <name>=T|F, got {token!r}", line_no)
            self.check_prop(name, line_no)
            if value not in ("T", "F"):
                raise ParseError(f"value for {name!r} must be T or F", line_no)
            if name in assignment:
                raise ParseError(f"property {name!r} assigned twice", line_no)
            assignment[name] = value == "T"
        missing = [name for name in props if name not in assignment]
        if missing:
            raise ParseError(
                f"entity {entity_id!r} misses " + ", ".join(missing), line_no
            )
        self.entities.append((line_no, entity_id, assignment))

    def _on_rule(self, line_no: int, rest: str) -> None:
        rule_id, body = self._split_decl(rest, line_no, "rule")
        if rule_id in self.rules:
            raise DuplicateIdError(f"duplicate rule id {rule_id!r}", line_no)
        left, sep, right = body.partition("->")
        if not sep:
            raise ParseError("rule needs '<literal> -> <literal>'", line_no)
        antecedent = _parse_literal(left.strip(), line_no)
        consequent = _parse_literal(right.strip(), line_no)
        self.check_prop(antecedent.property, line_no)
        self.check_prop(consequent.property, line_no)
        if antecedent == consequent:
            raise ParseError("antecedent equals consequent", line_no)
        self.rule_order.append(rule_id)
        self.rules[rule_id] = {
            "line": line_no,
            "antecedent": antecedent,
            "consequent": consequent,
            "ca1": None,
            "ca2": None,
        }

    def _ca_line(self, which: str, line_no: int, rest: str) -> None:
        rule_id, body = self._split_decl(rest, line_no, "rule")
        if rule_id not in self.rules:
            raise UnresolvedReferenceError(f"unknown rule {rule_id!r}", line_no)
        raw = self.rules[rule_id]
        if raw[which] is not None:
            raise ParseError(f"duplicate {which} declaration for {rule_id!r}", line_no)
        literals = tuple(
            _parse_literal(token.strip(), line_no)
            for token in body.split(",")
            if token.strip()
        )
        if not literals:
            raise ParseError(f"{which} needs at least one literal", line_no)
        for lit in literals:
            self.check_prop(lit.property, line_no)
        anchor = raw["antecedent"] if which == "ca1" else raw["consequent"]
        role = "antecedent" if which == "ca1" else "consequent"
        if anchor not in literals:
            raise ParseError(f"{which} set must include the {role} {anchor}", line_no)
        raw[which] = literals

    def _on_ca1(self, line_no: int, rest: str) -> None:
        self._ca_line("ca1", line_no, rest)

    def _on_ca2(self, line_no: int, rest: str) -> None:
        self._ca_line("ca2", line_no, rest)

    def _on_card(self, line_no: int, rest: str) -> None:
        card_id, body = self._split_decl(rest, line_no, "card")
        if any(card_id == known for _, known, _v in self.cards):
            raise DuplicateIdError(f"duplicate card id {card_id!r}", line_no)
        visible = _parse_literal(body, line_no)
        self.check_prop(visible.property, line_no)
        self.cards.append((line_no, card_id, visible))

    def _on_task(self, line_no: int, rest: str) -> None:
        task_id, body = self._split_decl(rest, line_no, "task")
        if any(task_id == known for _, known, _f in self.tasks):
            raise DuplicateIdError(f"duplicate task id {task_id!r}", line_no)
        label = None
        match = _LABEL_RE.search(body)
        if match:
            label = match.group(1)
            body = body[: match.start()] + body[match.end() :]
        fields: dict[str, str] = {}
        for token in body.split():
            key, sep, value = token.partition("=")
            if not sep or key not in ("rule", "cards", "ca1", "ca2"):
                raise ParseError(f"unexpected task field {token!r}", line_no)
            if key in fields:
                raise ParseError(f"duplicate task field {key!r}", line_no)
            fields[key] = value
        missing = [k for k in ("rule", "cards", "ca1", "ca2") if k not in fields]
        if missing:
            raise ParseError("task misses " + ", ".join(missing), line_no)
        for flag in ("ca1", "ca2"):
            if fields[flag] not in ("yes", "no"):
                raise ParseError(f"{flag} must be yes or no", line_no)
        if label is not None:
            fields["label"] = label
        fields["card_ids"] = [c for c in fields.pop("cards").split(",") if c]
        self.tasks.append((line_no, task_id, fields))

    def build(self) -> KbDocument:
        vocab = Vocabulary(self.props or ())
        entities = tuple(
            Entity(eid, World.from_assignment(vocab, assignment))
            for _, eid, assignment in self.entities
        )
        conditionals = tuple(
            Conditional(
                rid,
                self.rules[rid]["antecedent"],
                self.rules[rid]["consequent"],
                self.rules[rid]["ca1"],
                self.rules[rid]["ca2"],
            )
            for rid in self.rule_order
        )
        domain = DomainModel(vocab, entities, conditionals)
        cards = tuple(Card(cid, visible) for _, cid, visible in self.cards)
        by_id = {card.id: card for card in cards}
        tasks = []
        for line_no, task_id, fields in self.tasks:
            rule_id = fields["rule"]
            if rule_id not in self.rules:
                raise UnresolvedReferenceError(f"unknown rule {rule_id!r}", line_no)
            picked = []
            for cid in fields["card_ids"]:
                if cid not in by_id:
                    raise UnresolvedReferenceError(f"unknown card {cid!r}", line_no)
                picked.append(by_id[cid])
            try:
                task = SelectionTask(
                    rule=domain.conditional(rule_id),
                    cards=tuple(picked),
                    ca1_applies=fields["ca1"] == "yes",
                    ca2_applies=fields["ca2"] == "yes",
                    label=fields.get("label"),
                )
            except (MalformedCardError, InvalidModelError) as exc:
                raise ParseError(str(exc), line_no) from exc
            tasks.append((task_id, task))
        return KbDocument(domain, cards, tuple(tasks))


def parse_kb(text: str) -> KbDocument:
    parser = _Parser()
    for line_no, line in enumerate(text.splitlines(), start=1):
        parser.feed(line_no, line)
    return parser.build()


def render_kb(doc: KbDocument) -> str:
    """Canonical text form; '!' negation only, fields in declaration order."""
    lines = []
    vocab = doc.domain.vocabulary
    if vocab.names:
        lines.append("props " + " ".join(vocab.names))
    for entity in doc.domain.entities:
        cells = " ".join(
            f"{name}={'T' if entity.world.value(name) else 'F'}" for name in vocab
        )
        lines.append(f"entity {entity.id}: {cells}".rstrip())
    for rule in doc.domain.conditionals:
        lines.append(f"rule {rule.id}: {rule.antecedent} -> {rule.consequent}")
        for which, closure in (("ca1", rule.ca1_set), ("ca2", rule.ca2_set)):
            if closure is not None:
                lines.append(
                    f"{which} {rule.id}: " + ", ".join(str(lit) for lit in closure)
                )
    for card in doc.cards:
        lines.append(f"card {card.id}: {card.visible}")
    for task_id, task in doc.tasks:
        parts = [
            f"task {task_id}:",
            f"rule={task.rule.id}",
            "cards=" + ",".join(card.id for card in task.cards),
            f"ca1={'yes' if task.ca1_applies else 'no'}",
            f"ca2={'yes' if task.ca2_applies else 'no'}",
        ]
        if task.label is not None:
            if '"' in task.label:
                raise InvalidModelError("task labels cannot contain double quotes")
            parts.append(f'label="{task.label}"')
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")
