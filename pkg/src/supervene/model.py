"""Property language: vocabularies, worlds, entities, domains, formulas,
and the Boolean lattice of admissible configurations.

Worlds are bit-encoded. The first vocabulary name owns the most significant
bit and a true value is a set bit, so listing codes in descending order
reproduces the conventional truth-table layout (all-true row first). That
descending order is the canonical order used by every enumeration and
rendering in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from . import _kernels
from .errors import (
    EmptySubsetError,
    InvalidModelError,
    UnknownPropertyError,
    VocabularyTooLargeError,
)

#: Hard cap on vocabulary size for world enumeration (2^n blow-up guard).
#: Domains themselves may use larger vocabularies.
MAX_ENUMERABLE_PROPS = 24

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Vocabulary:
    """Ordered, duplicate-free property names; order fixes bit positions."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        seen = set()
        for name in self.names:
            if not isinstance(name, str) or not _NAME_RE.fullmatch(name):
                raise InvalidModelError(
                    f"invalid property name {name!r} (want [A-Za-z0-9_]+)"
                )
            if name in seen:
                raise InvalidModelError(f"duplicate property name {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._positions

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise UnknownPropertyError(f"unknown property {name!r}") from None

    def bit(self, name: str) -> int:
        """Bit value of a property; the first name is the most significant."""
        return 1 << (len(self.names) - 1 - self.index(name))

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= self.bit(name)
        return m

    def ordered_subset(self, names: Iterable[str]) -> tuple[str, ...]:
        """The given names, deduplicated, in vocabulary order."""
        wanted = set(names)
        for name in wanted:
            self.index(name)
        return tuple(name for name in self.names if name in wanted)

    def restrict(self, names: Iterable[str]) -> "Vocabulary":
        return Vocabulary(self.ordered_subset(names))


@dataclass(frozen=True)
class Literal:
    """A property name with a polarity; '!' marks negation in text form."""

    property: str
    negated: bool = False

    def negate(self) -> "Literal":
        return Literal(self.property, not self.negated)

    def holds_in(self, world: "World") -> bool:
        value = world.value(self.property)
        return not value if self.negated else value

    def properties(self) -> frozenset[str]:
        return frozenset((self.property,))

    def satisfied_codes(self, codes: np.ndarray, vocab: Vocabulary) -> np.ndarray:
        bit = np.uint64(vocab.bit(self.property))
        hit = (codes & bit) != 0
        return ~hit if self.negated else hit

    def __str__(self) -> str:
        return ("!" if self.negated else "") + self.property

    @staticmethod
    def parse(text: str) -> "Literal":
        text = text.strip()
        negated = text.startswith("!")
        name = text[1:] if negated else text
        if not _NAME_RE.fullmatch(name):
            raise InvalidModelError(f"invalid literal {text!r}")
        return Literal(name, negated)


LiteralLike = Union[str, Literal]


def as_literal(spec: LiteralLike) -> Literal:
    if isinstance(spec, Literal):
        return spec
    return Literal.parse(spec)


def as_literals(specs) -> tuple[Literal, ...]:
    """Normalize a literal, name, or iterable of either into a literal tuple."""
    if isinstance(specs, (str, Literal)):
        specs = (specs,)
    return tuple(as_literal(spec) for spec in specs)


def literal_names(specs) -> tuple[str, ...]:
    """Property names behind the given literals, first-seen order, deduped."""
    return tuple({lit.property: None for lit in as_literals(specs)})


@dataclass(frozen=True)
class World:
    """One total truth assignment, bit-encoded over a vocabulary."""

    vocabulary: Vocabulary
    code: int

    def __post_init__(self):
        if not 0 <= self.code < (1 << len(self.vocabulary)):
            raise InvalidModelError(
                f"code {self.code} out of range for {len(self.vocabulary)} properties"
            )

    @classmethod
    def from_assignment(
        cls, vocabulary: Vocabulary, assignment: Mapping[str, bool]
    ) -> "World":
        """Build a world from a total name-to-truth-value mapping."""
        for name in assignment:
            vocabulary.index(name)
        missing = [name for name in vocabulary if name not in assignment]
        if missing:
            raise InvalidModelError(f"assignment misses properties {missing}")
        code = 0
        for name, value in assignment.items():
            if value:
                code |= vocabulary.bit(name)
        return cls(vocabulary, code)

    def value(self, name: str) -> bool:
        return bool(self.code & self.vocabulary.bit(name))

    def assignment(self) -> dict[str, bool]:
        return {name: self.value(name) for name in self.vocabulary}

    def restrict(self, names: Iterable[str]) -> "World":
        """This world seen through a subset of properties, order preserved."""
        sub = self.vocabulary.restrict(names)
        code = 0
        for name in sub:
            if self.value(name):
                code |= sub.bit(name)
        return World(sub, code)

    def __str__(self) -> str:
        if not len(self.vocabulary):
            return "(empty)"
        return " ".join(
            str(Literal(name, not self.value(name))) for name in self.vocabulary
        )


@dataclass(frozen=True)
class Entity:
    """A described individual: an id plus its world."""

    id: str
    world: World


@dataclass(frozen=True)
class Conjunction:
    """Conjunction of literals; the empty conjunction is a tautology."""

    literals: tuple[Literal, ...]

    def __post_init__(self):
        object.__setattr__(self, "literals", tuple(self.literals))

    def properties(self) -> frozenset[str]:
        return frozenset(lit.property for lit in self.literals)

    def holds_in(self, world: World) -> bool:
        return all(lit.holds_in(world) for lit in self.literals)

    def satisfied_codes(self, codes: np.ndarray, vocab: Vocabulary) -> np.ndarray:
        out = np.ones(codes.shape, dtype=bool)
        for lit in self.literals:
            out &= lit.satisfied_codes(codes, vocab)
        return out

    def __str__(self) -> str:
        return " & ".join(str(lit) for lit in self.literals) or "(true)"


@dataclass(frozen=True)
class Conditional:
    """A single-literal rule: the antecedent implies the consequent.

    ca1_set, when declared, lists every condition deemed sufficient for the
    consequent (the antecedent among them). ca2_set lists the properties
    that jointly discriminate the antecedent (the consequent among them).
    """

    id: str
    antecedent: Literal
    consequent: Literal
    ca1_set: tuple[Literal, ...] | None = None
    ca2_set: tuple[Literal, ...] | None = None

    def __post_init__(self):
        if self.antecedent == self.consequent:
            raise InvalidModelError(
                f"rule {self.id!r}: antecedent equals consequent"
            )
        if self.ca1_set is not None:
            object.__setattr__(self, "ca1_set", tuple(self.ca1_set))
            if self.antecedent not in self.ca1_set:
                raise InvalidModelError(
                    f"rule {self.id!r}: ca1 closure set must include the antecedent"
                )
        if self.ca2_set is not None:
            object.__setattr__(self, "ca2_set", tuple(self.ca2_set))
            if self.consequent not in self.ca2_set:
                raise InvalidModelError(
                    f"rule {self.id!r}: ca2 closure set must include the consequent"
                )

    def properties(self) -> frozenset[str]:
        names = {self.antecedent.property, self.consequent.property}
        for closure in (self.ca1_set, self.ca2_set):
            if closure:
                names.update(lit.property for lit in closure)
        return frozenset(names)

    def holds_in(self, world: World) -> bool:
        return self.consequent.holds_in(world) if self.antecedent.holds_in(world) else True

    def satisfied_codes(self, codes: np.ndarray, vocab: Vocabulary) -> np.ndarray:
        return ~self.antecedent.satisfied_codes(codes, vocab) | self.consequent.satisfied_codes(codes, vocab)

    def __str__(self) -> str:
        return f"{self.id}: {self.antecedent} -> {self.consequent}"


@dataclass(frozen=True)
class Biconditional:
    """Two literals forced to the same truth value."""

    left: Literal
    right: Literal

    def properties(self) -> frozenset[str]:
        return frozenset((self.left.property, self.right.property))

    def holds_in(self, world: World) -> bool:
        return self.left.holds_in(world) == self.right.holds_in(world)

    def satisfied_codes(self, codes: np.ndarray, vocab: Vocabulary) -> np.ndarray:
        return self.left.satisfied_codes(codes, vocab) == self.right.satisfied_codes(codes, vocab)

    def __str__(self) -> str:
        return f"{self.left} <-> {self.right}"


Formula = Union[Literal, Conjunction, Conditional, Biconditional]

TAUTOLOGY = Conjunction(())


@dataclass(frozen=True)
class DomainModel:
    """A finite multiset of described entities plus declared conditionals.

    Duplicate worlds under distinct ids are allowed; duplicate ids are not.
    An empty domain is valid and makes every quantified check vacuous.
    """

    vocabulary: Vocabulary
    entities: tuple[Entity, ...] = ()
    conditionals: tuple[Conditional, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entities", tuple(self.entities))
        object.__setattr__(self, "conditionals", tuple(self.conditionals))
        seen = set()
        for entity in self.entities:
            if entity.id in seen:
                raise InvalidModelError(f"duplicate entity id {entity.id!r}")
            seen.add(entity.id)
            if entity.world.vocabulary != self.vocabulary:
                raise InvalidModelError(
                    f"entity {entity.id!r} is not described over this vocabulary"
                )
        rule_ids = set()
        for rule in self.conditionals:
            if rule.id in rule_ids:
                raise InvalidModelError(f"duplicate rule id {rule.id!r}")
            rule_ids.add(rule.id)
            for name in rule.properties():
                self.vocabulary.index(name)

    def __len__(self) -> int:
        return len(self.entities)

    @cached_property
    def codes(self) -> np.ndarray | None:
        """Entity worlds as a uint64 array; None beyond 64 properties."""
        if len(self.vocabulary) > 64:
            return None
        return np.array([e.world.code for e in self.entities], dtype=np.uint64)

    def entity(self, entity_id: str) -> Entity:
        for entity in self.entities:
            if entity.id == entity_id:
                return entity
        raise InvalidModelError(f"no entity {entity_id!r}")

    def conditional(self, rule_id: str) -> Conditional:
        for rule in self.conditionals:
            if rule.id == rule_id:
                return rule
        raise InvalidModelError(f"no rule {rule_id!r}")


@dataclass(frozen=True)
class Projection:
    """Descriptions of every entity through a property subset."""

    subset: tuple[str, ...]
    image: dict[str, World]


@dataclass(frozen=True, eq=False)
class Lattice:
    """Admissible worlds with edges between single-bit neighbours.

    ``codes`` keeps the node order it was built with; ``edges`` holds
    node-index pairs (i, j) with i < j, lexicographically sorted. Only
    adjacency is recorded, no rank.
    """

    vocabulary: Vocabulary
    codes: np.ndarray
    edges: np.ndarray

    @property
    def node_count(self) -> int:
        return int(self.codes.size)

    @property
    def edge_count(self) -> int:
        return int(self.edges.shape[0])

    def node(self, index: int) -> World:
        return World(self.vocabulary, int(self.codes[index]))

    def worlds(self) -> list[World]:
        return [self.node(i) for i in range(self.node_count)]

    def edge_worlds(self) -> list[tuple[World, World]]:
        return [(self.node(int(i)), self.node(int(j))) for i, j in self.edges]


def enumerate_codes(n: int) -> np.ndarray:
    """All n-bit codes in canonical (descending) order."""
    if n > MAX_ENUMERABLE_PROPS:
        raise VocabularyTooLargeError(
            f"refusing to enumerate 2^{n} worlds (cap is {MAX_ENUMERABLE_PROPS} properties)"
        )
    return np.arange((1 << n) - 1, -1, -1, dtype=np.uint64)


def enumerate_worlds(vocab: Vocabulary) -> list[World]:
    """Every world over the vocabulary, canonical order, 2^n of them."""
    return [World(vocab, int(code)) for code in enumerate_codes(len(vocab))]


def _check_constraint(constraint: Formula, vocab: Vocabulary) -> None:
    for name in constraint.properties():
        vocab.index(name)


def build_lattice(vocab: Vocabulary, constraint: Formula | None = None) -> Lattice:
    """Lattice of all worlds satisfying the constraint (all worlds if None).

    Works in code space without materializing World objects, so it is the
    right entry point for large vocabularies (up to the enumeration cap).
    """
    codes = enumerate_codes(len(vocab))
    if constraint is not None:
        _check_constraint(constraint, vocab)
        codes = codes[constraint.satisfied_codes(codes, vocab)]
    edges = _kernels.hamming_edges(codes, len(vocab))
    return Lattice(vocab, codes, np.asarray(edges, dtype=np.int64).reshape(-1, 2))


def prune(worlds: Iterable[World], constraint: Formula | None = None) -> Lattice:
    """Drop the worlds falsifying the constraint; keep input order.

    The input must be non-empty (the vocabulary is taken from it) and all
    worlds must share one vocabulary.
    """
    worlds = list(worlds)
    if not worlds:
        raise InvalidModelError("cannot prune an empty world list")
    vocab = worlds[0].vocabulary
    if any(w.vocabulary != vocab for w in worlds):
        raise InvalidModelError("worlds span different vocabularies")
    if len(vocab) > 64:
        raise VocabularyTooLargeError("pruning supports at most 64 properties")
    if len({w.code for w in worlds}) != len(worlds):
        raise InvalidModelError("lattice nodes must be distinct worlds")
    codes = np.array([w.code for w in worlds], dtype=np.uint64)
    if constraint is not None:
        _check_constraint(constraint, vocab)
        codes = codes[constraint.satisfied_codes(codes, vocab)]
    edges = _kernels.hamming_edges(codes, len(vocab))
    return Lattice(vocab, codes, np.asarray(edges, dtype=np.int64).reshape(-1, 2))


def project(domain: DomainModel, subset) -> Projection:
    """Restrict every entity's description to a non-empty property subset."""
    names = literal_names(subset)
    if not names:
        raise EmptySubsetError("projection subset is empty")
    ordered = domain.vocabulary.ordered_subset(names)
    image = {e.id: e.world.restrict(ordered) for e in domain.entities}
    return Projection(ordered, image)


def differs(x: Entity, y: Entity, subset) -> bool:
    """True iff x and y disagree on some property in the subset.

    Polarity on literals is irrelevant here: two worlds disagree on a
    property exactly when they disagree on its negation.
    """
    if x.world.vocabulary != y.world.vocabulary:
        raise InvalidModelError("entities described over different vocabularies")
    mask = x.world.vocabulary.mask(literal_names(subset))
    return bool((x.world.code ^ y.world.code) & mask)
