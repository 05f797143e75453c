"""Exhaustive cross-checker: replays the library's dependence checks with
an independent dict-based evaluator over every small domain.

The brute-force side shares no code with the library (no bit masks, no
arrays); agreement over the full enumeration is the evidence that the two
routes compute the same thing. The `mutate` hook deliberately breaks the
brute-force difference test so the harness can prove it would notice a
real divergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .analysis import (
    build_rho,
    compression_report,
    determination,
    ontological_dependence,
    weak_supervenience,
)
from .closure import close_antecedent, close_consequent
from .errors import InvalidModelError
from .model import Conditional, DomainModel, Entity, Literal, Vocabulary, World

MUTATIONS = ("invert-differs",)

MAX_ORACLE_PROPS = 3
MAX_ORACLE_ENTITIES = 5


def bf_differs(wx: dict, wy: dict, subset, invert: bool = False) -> bool:
    different = any(wx[name] != wy[name] for name in subset)
    return (not different) if invert else different


def bf_weak_supervenience(worlds, supervenient, base, invert: bool = False) -> bool:
    for x in worlds:
        for y in worlds:
            if bf_differs(x, y, supervenient, invert) and not bf_differs(x, y, base, invert):
                return False
    return True


def bf_determination(worlds, base, supervenient, invert: bool = False) -> bool:
    for x in worlds:
        for y in worlds:
            if not bf_differs(x, y, base, invert) and bf_differs(x, y, supervenient, invert):
                return False
    return True


def bf_ontological_dependence(worlds, dependent, base) -> bool:
    """dependent/base are (name, negated) pairs; exhibiting !x means x false."""
    for world in worlds:
        for name, negated in dependent:
            if world[name] != negated:
                if not any(world[b] != neg for b, neg in base):
                    return False
    return True


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    failures: int
    examples: tuple[str, ...]


@dataclass(frozen=True)
class OracleReport:
    max_props: int
    max_entities: int
    mutate: str | None
    checks: tuple[CheckResult, ...]

    @property
    def total_cases(self) -> int:
        return sum(check.cases for check in self.checks)

    @property
    def total_failures(self) -> int:
        return sum(check.failures for check in self.checks)

    @property
    def passed(self) -> bool:
        return self.total_failures == 0


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.examples: list[str] = []

    def record(self, ok: bool, describe) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 5:
                self.examples.append(describe())

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.cases, self.failures, tuple(self.examples))


def _domains(max_entities: int, names: tuple[str, ...], codes):
    """Every entity multiset (sizes 0..max) over the given world codes."""
    vocab = Vocabulary(names)
    bits = [vocab.bit(name) for name in names]
    for size in range(max_entities + 1):
        for combo in combinations_with_replacement(codes, size):
            entities = tuple(
                Entity(f"e{i}", World(vocab, code)) for i, code in enumerate(combo)
            )
            dicts = [
                {name: bool(code & bit) for name, bit in zip(names, bits)}
                for code in combo
            ]
            yield combo, DomainModel(vocab, entities), dicts


def _subsets(names: tuple[str, ...]):
    for size in range(1, len(names) + 1):
        yield from combinations(names, size)


def run_oracle(
    max_props: int = 3, max_entities: int = 4, mutate: str | None = None
) -> OracleReport:
    if not 1 <= max_props <= MAX_ORACLE_PROPS:
        raise InvalidModelError(
            f"max_props must be 1..{MAX_ORACLE_PROPS} (exhaustive enumeration)"
        )
    if not 0 <= max_entities <= MAX_ORACLE_ENTITIES:
        raise InvalidModelError(
            f"max_entities must be 0..{MAX_ORACLE_ENTITIES} (exhaustive enumeration)"
        )
    if mutate is not None and mutate not in MUTATIONS:
        raise InvalidModelError(f"unknown mutation {mutate!r}")
    invert = mutate == "invert-differs"

    contrapositive = _Tally("supervenience-matches-contrapositive")
    functionality = _Tally("functionality-matches-determination")
    ws_agree = _Tally("supervenience-agrees-brute-force")
    det_agree = _Tally("determination-agrees-brute-force")

    for n in range(1, max_props + 1):
        names = tuple(f"p{i}" for i in range(n))
        codes = range(1 << n)
        for combo, domain, dicts in _domains(max_entities, names, codes):
            for sup in _subsets(names):
                for base in _subsets(names):
                    def about():
                        return f"n={n} worlds={list(combo)} super={sup} base={base}"

                    lib_ws = weak_supervenience(domain, sup, base)
                    lib_det = determination(domain, base, sup)
                    bf_det = bf_determination(dicts, base, sup, invert)
                    bf_ws = bf_weak_supervenience(dicts, sup, base, invert)
                    functional = compression_report(
                        build_rho(domain, base, sup)
                    ).functional
                    contrapositive.record(lib_ws == bf_det, about)
                    functionality.record(functional == bf_det, about)
                    ws_agree.record(lib_ws == bf_ws, about)
                    det_agree.record(lib_det == bf_det, about)

    star_closure = _Tally("antecedent-closure-theorem")
    costar_closure = _Tally("consequent-closure-theorem")
    names = ("a", "b")
    rule = Conditional("r", Literal("a"), Literal("b"))
    satisfying = (3, 1, 0)  # codes over (a, b) where a -> b holds
    for combo, domain, _dicts in _domains(max_entities, names, satisfying):
        for fill in (False, True):
            def about():
                return f"worlds={list(combo)} unconstrained={fill}"

            res = close_antecedent(domain, rule, unconstrained_value=fill)
            star = res.star_name
            ext = res.extended_domain
            ext_dicts = [e.world.assignment() for e in ext.entities]
            ok = (
                weak_supervenience(ext, ("b",), ("a", star))
                and ontological_dependence(ext, ("b",), ("a", star))
                and bf_weak_supervenience(ext_dicts, ("b",), ("a", star), invert)
                and bf_ontological_dependence(
                    ext_dicts, (("b", False),), (("a", False), (star, False))
                )
            )
            star_closure.record(ok, about)

            res = close_consequent(domain, rule, unconstrained_value=fill)
            costar = res.star_name
            ext = res.extended_domain
            ext_dicts = [e.world.assignment() for e in ext.entities]
            ok = weak_supervenience(
                ext, ("!a",), ("!b", f"!{costar}")
            ) and bf_weak_supervenience(ext_dicts, ("a",), ("b", costar), invert)
            costar_closure.record(ok, about)

    return OracleReport(
        max_props=max_props,
        max_entities=max_entities,
        mutate=mutate,
        checks=(
            contrapositive.result(),
            functionality.result(),
            ws_agree.result(),
            det_agree.result(),
            star_closure.result(),
            costar_closure.result(),
        ),
    )
