"""Worlds, vocabularies, lattices.

The enumeration tests check against a test-local recursive enumerator that
shares nothing with the library's bit arithmetic.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supervene import (
    Biconditional,
    Conditional,
    Conjunction,
    DomainModel,
    EmptySubsetError,
    Entity,
    InvalidModelError,
    Literal,
    UnknownPropertyError,
    Vocabulary,
    VocabularyTooLargeError,
    World,
    build_lattice,
    differs,
    enumerate_worlds,
    project,
    prune,
)


def recursive_assignments(names):
    # independent oracle: no bit tricks, just branching on each name
    if not names:
        return [{}]
    rest = recursive_assignments(names[1:])
    out = []
    for value in (True, False):
        for tail in rest:
            d = {names[0]: value}
            d.update(tail)
            out.append(d)
    return out


def vocab(*names):
    return Vocabulary(tuple(names))


def world(v, **values):
    return World.from_assignment(v, values)


def entity(eid, v, **values):
    return Entity(eid, world(v, **values))


class TestVocabulary:
    def test_rejects_duplicates(self):
        with pytest.raises(InvalidModelError):
            vocab("a", "a")

    @pytest.mark.parametrize("bad", ["", "a b", "a-b", "ä", "a!"])
    def test_rejects_bad_names(self, bad):
        with pytest.raises(InvalidModelError):
            vocab(bad)

    def test_first_name_owns_most_significant_bit(self):
        v = vocab("a", "b", "c")
        assert v.bit("a") == 4
        assert v.bit("b") == 2
        assert v.bit("c") == 1
        assert v.mask(["a", "c"]) == 5

    def test_unknown_name(self):
        with pytest.raises(UnknownPropertyError):
            vocab("a").bit("z")

    def test_ordered_subset_follows_vocabulary_order(self):
        v = vocab("a", "b", "c")
        assert v.ordered_subset(["c", "a"]) == ("a", "c")


class TestWorld:
    def test_from_assignment_must_be_total(self):
        v = vocab("a", "b")
        with pytest.raises(InvalidModelError):
            World.from_assignment(v, {"a": True})
        with pytest.raises(UnknownPropertyError):
            World.from_assignment(v, {"a": True, "b": False, "z": True})

    def test_str_uses_bang_for_false(self):
        v = vocab("a", "b")
        assert str(world(v, a=True, b=False)) == "a !b"
        assert str(World(Vocabulary(()), 0)) == "(empty)"

    def test_restrict_preserves_truth_values(self):
        v = vocab("a", "b", "c")
        w = world(v, a=True, b=False, c=True)
        r = w.restrict(["c", "a"])
        assert r.assignment() == {"a": True, "c": True}


class TestEnumeration:
    @pytest.mark.parametrize("n", range(0, 9))
    def test_matches_recursive_oracle(self, n):
        names = tuple(f"p{i}" for i in range(n))
        got = enumerate_worlds(Vocabulary(names))
        assert len(got) == 2**n
        assert len({w.code for w in got}) == 2**n
        expected = {frozenset(d.items()) for d in recursive_assignments(names)}
        assert {frozenset(w.assignment().items()) for w in got} == expected

    def test_canonical_order_is_truth_table_order(self):
        got = [str(w) for w in enumerate_worlds(vocab("a", "b"))]
        assert got == ["a b", "a !b", "!a b", "!a !b"]

    def test_blowup_guard(self):
        names = tuple(f"p{i}" for i in range(25))
        with pytest.raises(VocabularyTooLargeError):
            enumerate_worlds(Vocabulary(names))


class TestLattice:
    def test_conditional_prunes_to_chain(self):
        v = vocab("a", "b")
        lat = prune(enumerate_worlds(v), Conditional("r", Literal("a"), Literal("b")))
        assert [str(w) for w in lat.worlds()] == ["a b", "!a b", "!a !b"]
        assert lat.edge_count == 2
        got = {frozenset((str(x), str(y))) for x, y in lat.edge_worlds()}
        assert got == {
            frozenset(("a b", "!a b")),
            frozenset(("!a b", "!a !b")),
        }

    def test_conjunction_prunes_to_point(self):
        v = vocab("a", "b")
        lat = prune(enumerate_worlds(v), Conjunction((Literal("a"), Literal("b"))))
        assert lat.node_count == 1 and lat.edge_count == 0

    def test_biconditional_prunes_to_two_disconnected_nodes(self):
        v = vocab("a", "b")
        lat = prune(enumerate_worlds(v), Biconditional(Literal("a"), Literal("b")))
        assert [str(w) for w in lat.worlds()] == ["a b", "!a !b"]
        assert lat.edge_count == 0

    def test_disjunction_via_negated_antecedent(self):
        # a or b, written as !a -> b
        v = vocab("a", "b")
        lat = prune(enumerate_worlds(v), Conditional("r", Literal("a", True), Literal("b")))
        assert [str(w) for w in lat.worlds()] == ["a b", "a !b", "!a b"]
        got = {frozenset((str(x), str(y))) for x, y in lat.edge_worlds()}
        assert got == {
            frozenset(("a b", "a !b")),
            frozenset(("a b", "!a b")),
        }

    @pytest.mark.parametrize("n", range(0, 7))
    def test_tautology_gives_full_hypercube(self, n):
        names = tuple(f"p{i}" for i in range(n))
        lat = build_lattice(Vocabulary(names))
        assert lat.node_count == 2**n
        assert lat.edge_count == (n * 2 ** (n - 1) if n else 0)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_every_edge_is_hamming_distance_one(self, n):
        names = tuple(f"p{i}" for i in range(n))
        lat = build_lattice(Vocabulary(names))
        for x, y in lat.edge_worlds():
            assert bin(x.code ^ y.code).count("1") == 1

    def test_prune_keeps_input_order(self):
        v = vocab("a", "b")
        worlds = list(reversed(enumerate_worlds(v)))
        lat = prune(worlds)
        assert [w.code for w in lat.worlds()] == [0, 1, 2, 3]

    def test_prune_rejects_empty_and_mixed_input(self):
        with pytest.raises(InvalidModelError):
            prune([])
        a = enumerate_worlds(vocab("a"))
        b = enumerate_worlds(vocab("b"))
        with pytest.raises(InvalidModelError):
            prune([a[0], b[0]])

    def test_prune_rejects_duplicate_worlds(self):
        w = enumerate_worlds(vocab("a"))
        with pytest.raises(InvalidModelError):
            prune([w[0], w[0]])

    def test_unknown_constraint_property(self):
        with pytest.raises(UnknownPropertyError):
            build_lattice(vocab("a"), Literal("z"))


class TestProjection:
    def test_restriction_and_identity(self):
        v = vocab("a", "b")
        d = DomainModel(v, (entity("x", v, a=True, b=False),))
        p = project(d, ["a"])
        assert p.image["x"].assignment() == {"a": True}
        full = project(d, ["a", "b"])
        assert full.image["x"] == d.entities[0].world

    def test_equal_on_subset_projects_equal(self):
        v = vocab("a", "b")
        d = DomainModel(
            v,
            (entity("x", v, a=True, b=False), entity("y", v, a=True, b=True)),
        )
        p = project(d, ["a"])
        assert p.image["x"] == p.image["y"]

    def test_empty_subset_rejected(self):
        v = vocab("a")
        with pytest.raises(EmptySubsetError):
            project(DomainModel(v), [])


class TestDiffers:
    def test_chain_worlds(self):
        v = vocab("a", "b")
        tt = entity("x", v, a=True, b=True)
        ft = entity("y", v, a=False, b=True)
        ff = entity("z", v, a=False, b=False)
        assert differs(tt, ft, ["a"])
        assert not differs(ft, ff, ["a"])
        assert differs(tt, ft, ["a", "b"])
        assert not differs(tt, tt, ["a", "b"])

    def test_empty_subset_never_differs(self):
        v = vocab("a")
        x = entity("x", v, a=True)
        y = entity("y", v, a=False)
        assert not differs(x, y, [])

    def test_polarity_on_literals_is_ignored(self):
        v = vocab("a")
        x = entity("x", v, a=True)
        y = entity("y", v, a=False)
        assert differs(x, y, ["!a"]) == differs(x, y, ["a"])


@st.composite
def two_worlds_and_subsets(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    names = tuple(f"p{i}" for i in range(n))
    v = Vocabulary(names)
    cx = draw(st.integers(min_value=0, max_value=2**n - 1))
    cy = draw(st.integers(min_value=0, max_value=2**n - 1))
    small = draw(st.sets(st.sampled_from(names)))
    extra = draw(st.sets(st.sampled_from(names)))
    return (
        Entity("x", World(v, cx)),
        Entity("y", World(v, cy)),
        sorted(small),
        sorted(small | extra),
    )


@settings(max_examples=200)
@given(two_worlds_and_subsets())
def test_differs_is_symmetric_and_monotone(case):
    x, y, small, big = case
    if small:
        assert differs(x, y, small) == differs(y, x, small)
    if small and differs(x, y, small):
        assert differs(x, y, big)
    # equality on the subset is exactly not-differs
    agree = all(x.world.value(n) == y.world.value(n) for n in small)
    assert agree == (not differs(x, y, small))


class TestDomainModel:
    def test_duplicate_entity_ids_rejected(self):
        v = vocab("a")
        w = world(v, a=True)
        with pytest.raises(InvalidModelError):
            DomainModel(v, (Entity("x", w), Entity("x", w)))

    def test_duplicate_rule_ids_rejected(self):
        v = vocab("a", "b")
        r = Conditional("r", Literal("a"), Literal("b"))
        s = Conditional("r", Literal("b"), Literal("a"))
        with pytest.raises(InvalidModelError):
            DomainModel(v, (), (r, s))

    def test_entities_must_share_the_vocabulary(self):
        v, u = vocab("a"), vocab("b")
        with pytest.raises(InvalidModelError):
            DomainModel(v, (Entity("x", World(u, 0)),))

    def test_duplicate_worlds_under_distinct_ids_are_fine(self):
        v = vocab("a")
        w = world(v, a=True)
        d = DomainModel(v, (Entity("x", w), Entity("y", w)))
        assert not differs(d.entities[0], d.entities[1], ["a"])

    def test_codes_array_matches_worlds(self):
        v = vocab("a", "b")
        d = DomainModel(v, (entity("x", v, a=True, b=False),))
        assert d.codes.dtype == np.uint64
        assert list(d.codes) == [2]


class TestConditional:
    def test_antecedent_equals_consequent_rejected(self):
        with pytest.raises(InvalidModelError):
            Conditional("r", Literal("a"), Literal("a"))

    def test_opposite_polarity_same_property_allowed(self):
        r = Conditional("r", Literal("a"), Literal("a", True))
        assert r.properties() == {"a"}

    def test_ca_sets_must_anchor_the_rule(self):
        a, b = Literal("a"), Literal("b")
        with pytest.raises(InvalidModelError):
            Conditional("r", a, b, ca1_set=(b,))
        with pytest.raises(InvalidModelError):
            Conditional("r", a, b, ca2_set=(a,))
        ok = Conditional("r", a, b, ca1_set=(a,), ca2_set=(b,))
        assert ok.ca1_set == (a,) and ok.ca2_set == (b,)

    def test_holds_in(self):
        v = vocab("a", "b")
        r = Conditional("r", Literal("a"), Literal("b"))
        assert r.holds_in(world(v, a=True, b=True))
        assert not r.holds_in(world(v, a=True, b=False))
        assert r.holds_in(world(v, a=False, b=False))
