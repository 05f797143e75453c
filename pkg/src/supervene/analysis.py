"""Difference-based dependence checks over entity domains, plus the
compression view of re-encoding one property subset through another.

Three related questions about two property subsets over a finite domain:

* weak supervenience: can two entities differ in the first subset without
  differing in the second?
* determination: does agreement on the first subset force agreement on
  the second?
* ontological dependence: does every entity exhibiting a property from
  the first subset also exhibit one from the second?

The first two only care about where worlds differ, so literal polarity is
ignored there; the third evaluates literals as given.

Re-encoding entities described by subset A into descriptions over subset B
collects a pairing of restricted worlds. When that pairing is a function,
B-descriptions can be read off A-descriptions, and the gain is measured in
bits from the realized code counts on each side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import EmptySubsetError
from .model import DomainModel, Entity, Literal, World, as_literals, literal_names


def _subset_mask(domain: DomainModel, subset) -> int:
    names = literal_names(subset)
    if not names:
        raise EmptySubsetError("property subset is empty")
    return domain.vocabulary.mask(names)


def _pair_witness_python(domain, first_mask, second_mask, want_first, want_second):
    """First entity pair (i < j) whose code diff matches the wanted pattern.

    want_first/want_second say whether the xor must hit (True) or miss
    (False) the respective mask. Fallback for >64-property vocabularies.
    """
    entities = domain.entities
    for i in range(len(entities)):
        for j in range(i + 1, len(entities)):
            d = entities[i].world.code ^ entities[j].world.code
            if bool(d & first_mask) == want_first and bool(d & second_mask) == want_second:
                return entities[i], entities[j]
    return None


def supervenience_witness(
    domain: DomainModel, supervenient, base
) -> tuple[Entity, Entity] | None:
    """First entity pair differing in `supervenient` but not in `base`.

    Such a pair refutes weak supervenience; None means none exists.
    """
    super_mask = _subset_mask(domain, supervenient)
    base_mask = _subset_mask(domain, base)
    if len(domain) < 2:
        return None
    codes = domain.codes
    if codes is None:
        return _pair_witness_python(domain, super_mask, base_mask, True, False)
    i, j = _kernels.ws_witness(codes, np.uint64(super_mask), np.uint64(base_mask))
    if i < 0:
        return None
    return domain.entities[int(i)], domain.entities[int(j)]


def weak_supervenience(domain: DomainModel, supervenient, base) -> bool:
    """True iff no two entities differ in `supervenient` without differing in `base`."""
    return supervenience_witness(domain, supervenient, base) is None


def determination_witness(
    domain: DomainModel, base, supervenient
) -> tuple[Entity, Entity] | None:
    """First entity pair agreeing on `base` yet differing in `supervenient`."""
    base_mask = _subset_mask(domain, base)
    super_mask = _subset_mask(domain, supervenient)
    if len(domain) < 2:
        return None
    codes = domain.codes
    if codes is None:
        return _pair_witness_python(domain, base_mask, super_mask, False, True)
    i, j = _kernels.det_witness(codes, np.uint64(base_mask), np.uint64(super_mask))
    if i < 0:
        return None
    return domain.entities[int(i)], domain.entities[int(j)]


def determination(domain: DomainModel, base, supervenient) -> bool:
    """True iff agreement on `base` forces agreement on `supervenient`."""
    return determination_witness(domain, base, supervenient) is None


def dependence_witness(
    domain: DomainModel, dependent, base
) -> tuple[Entity, Literal] | None:
    """First entity exhibiting a `dependent` literal but no `base` literal.

    Literal polarity matters here: exhibiting !b means b is false.
    """
    dep = as_literals(dependent)
    ground = as_literals(base)
    if not dep or not ground:
        raise EmptySubsetError("property subset is empty")
    for lit in dep + ground:
        domain.vocabulary.index(lit.property)
    for entity in domain.entities:
        world = entity.world
        for lit in dep:
            if lit.holds_in(world) and not any(g.holds_in(world) for g in ground):
                return entity, lit
    return None


def ontological_dependence(domain: DomainModel, dependent, base) -> bool:
    """True iff every entity exhibiting a `dependent` literal exhibits a `base` one."""
    return dependence_witness(domain, dependent, base) is None


@dataclass(frozen=True)
class RhoRelation:
    """Co-occurring restricted descriptions (base view, supervenient view)."""

    base_subset: tuple[str, ...]
    super_subset: tuple[str, ...]
    pairs: frozenset[tuple[World, World]]


def build_rho(domain: DomainModel, base, supervenient) -> RhoRelation:
    """Collect each entity's (base-restricted, super-restricted) world pair."""
    base_names = domain.vocabulary.ordered_subset(literal_names(base))
    super_names = domain.vocabulary.ordered_subset(literal_names(supervenient))
    if not base_names or not super_names:
        raise EmptySubsetError("property subset is empty")
    pairs = frozenset(
        (e.world.restrict(base_names), e.world.restrict(super_names))
        for e in domain.entities
    )
    return RhoRelation(base_names, super_names, pairs)


@dataclass(frozen=True)
class CompressionReport:
    """Whether base descriptions re-encode as supervenient ones, and the
    bit gain of doing so.

    When the relation is not functional the derived fields are None and
    `conflict` holds (base world, first image, second image) in canonical
    order. When functional, `mapping` is the induced function in canonical
    (descending code) key order, `lossy` flags a non-injective mapping, and
    `gain_bits` is log2(distinct base codes) - log2(distinct super codes),
    clamped at zero (`raw_gain_bits` is unclamped).
    """

    functional: bool
    lossy: bool | None
    gain_bits: float | None
    raw_gain_bits: float | None
    mapping: dict[World, World] | None
    conflict: tuple[World, World, World] | None = None


def compression_report(rho: RhoRelation) -> CompressionReport:
    ordered = sorted(rho.pairs, key=lambda p: (-p[0].code, -p[1].code))
    mapping: dict[World, World] = {}
    for a_world, b_world in ordered:
        if a_world in mapping and mapping[a_world] != b_world:
            return CompressionReport(
                functional=False,
                lossy=None,
                gain_bits=None,
                raw_gain_bits=None,
                mapping=None,
                conflict=(a_world, mapping[a_world], b_world),
            )
        mapping[a_world] = b_world
    n_base = len(mapping)
    n_super = len(set(mapping.values()))
    if n_base and n_super:
        raw = math.log2(n_base) - math.log2(n_super)
    else:
        raw = 0.0
    return CompressionReport(
        functional=True,
        lossy=n_super < n_base,
        gain_bits=max(0.0, raw),
        raw_gain_bits=raw,
        mapping=mapping,
    )
