import math
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles as O
from conftest import perms

from chiralmap.constructions import build, build_c3_1, build_c3_3, build_c3_5, build_c4_5, dispatch, table1_lookup
from chiralmap.errors import DegreeMismatch, DegreeTooLarge, GroupTooLarge, NotTransitive
from chiralmap.groups import (
    StabilizerChain,
    Verdict,
    Word,
    cayley_order,
    classify,
    default_word_pool,
    find_jordan_witness,
    group_order,
    is_primitive,
    is_transitive,
    orbits,
    witness_from,
)
from chiralmap.perm import Permutation, from_cycles, identity, parse_cycles


def named(g):
    return {"s": g.s, "t": g.t, "r": g.r}


class TestOrbits:
    def test_identity(self):
        assert orbits([identity(3)]) == [[0], [1], [2]]

    def test_transposition(self):
        assert orbits([from_cycles([[0, 1]], 4)]) == [[0, 1], [2], [3]]

    def test_construction_is_transitive(self):
        for a in (1, 2):
            for i in (-1, 1):
                assert is_transitive(build_c3_5(a, i).generators())

    def test_mismatch(self):
        with pytest.raises(DegreeMismatch):
            orbits([identity(3), identity(4)])


class TestPrimitivity:
    def test_prime_cycle(self):
        assert is_primitive([from_cycles([list(range(7))], 7)]).primitive

    def test_c4(self):
        res = is_primitive([from_cycles([[0, 1, 2, 3]], 4)])
        assert not res
        assert sorted(sorted(b) for b in res.blocks.blocks()) == [[0, 2], [1, 3]]

    def test_construction(self):
        assert is_primitive(build_c4_5(1, -1).generators()).primitive

    def test_requires_transitive(self):
        with pytest.raises(NotTransitive):
            is_primitive([from_cycles([[0, 1]], 3)])

    def test_returned_blocks_are_preserved(self):
        gens = [from_cycles([[0, 1, 2, 3, 4, 5]], 6), from_cycles([[0, 3]], 6)]
        res = is_primitive(gens)
        assert not res.primitive
        assert res.blocks.is_nontrivial()
        assert all(res.blocks.is_preserved_by(g) for g in gens)


class TestOrder:
    def test_cyclic(self):
        assert group_order([from_cycles([[0, 1, 2, 3, 4]], 5)]) == 5

    def test_table1_a6(self):
        g = table1_lookup((4, 5))
        assert group_order(g.generators()) == 360
        assert cayley_order(g.generators()) == 360

    def test_c3_1_a10(self):
        g = build(dispatch((4, 9)))
        assert group_order(g.generators()) == 1814400 == math.factorial(10) // 2

    def test_degree_cap(self):
        big = from_cycles([list(range(70))], 70)
        with pytest.raises(DegreeTooLarge):
            group_order([big])
        assert group_order([big], max_degree=80) == 70

    def test_cayley_bound(self):
        g = table1_lookup((4, 5))
        with pytest.raises(GroupTooLarge):
            cayley_order(g.generators(), bound=100)

    def test_contains(self):
        g = table1_lookup((4, 5))
        chain = StabilizerChain(g.generators(), g.degree)
        assert chain.contains(g.s * g.t * g.s)
        assert not chain.contains(parse_cycles("(1,2)", 6))

    def test_symmetric_groups(self):
        for k in range(2, 9):
            gens = [from_cycles([list(range(k))], k), from_cycles([[0, 1]], k)]
            assert group_order(gens) == math.factorial(k)

    def test_large_alternating(self):
        k = 30
        gens = [from_cycles([list(range(3))], k), from_cycles([list(range(1, k))], k)]
        assert group_order(gens) == math.factorial(k) // 2


class TestWitness:
    def test_c3_1(self):
        g = build_c3_1(2, -1)
        w = find_jordan_witness(g.generators(), named=named(g))
        assert w.word == "(s^3 t)^2"
        assert (w.cycle_length, w.fixed_count, w.prime_length) == (7, 5, True)
        assert w.fixed_count == 4 * 2 - 3

    def test_c3_5_named_word(self):
        word = Word((("s", 3), ("t", 1)), 2)
        g = build_c3_5(1, 1)
        assert word.evaluate(named(g)).cycle_type() == [11]
        # degree 12: the 11-cycle fixes a single point, too few for Jordan
        assert find_jordan_witness(g.generators(), [word], named=named(g)) is None
        g = build_c3_5(2, 1)
        w = find_jordan_witness(g.generators(), [word], named=named(g))
        assert (w.cycle_length, w.fixed_count) == (11, g.degree - 11)

    def test_cyclic_has_none(self):
        assert find_jordan_witness([from_cycles([list(range(5))], 5)]) is None

    def test_witness_invariants(self):
        p = from_cycles([[0, 1, 2]], 7)
        w = witness_from(p, "x")
        assert w.fixed_count == 7 - w.cycle_length == 4
        assert witness_from(from_cycles([[0, 1, 2]], 6)) is not None
        assert witness_from(from_cycles([[0, 1, 2]], 5)) is None
        assert witness_from(from_cycles([[0, 1], [2, 3]], 8)) is None

    def test_word_text(self):
        assert str(Word((("s", 2), ("t", 1)), 4)) == "(s^2 t)^4"
        assert str(Word((("s", 1),))) == "s"
        assert str(Word((("r", 4), ("t", 1)))) == "r^4 t"

    def test_isolating_word(self):
        # (0 1 2)(3 4) cubed is a transposition; squared is a 3-cycle
        p = from_cycles([[0, 1, 2], [3, 4]], 8)
        w = Word((("s", 1),), None)
        assert w.evaluate({"s": p}) == from_cycles([[0, 2, 1]], 8)

    def test_pool_is_deterministic(self):
        assert [str(w) for w in default_word_pool()] == [str(w) for w in default_word_pool()]


class TestClassify:
    def test_c3_3(self):
        g = build_c3_3(1, 1)
        assert (g.type.m, g.type.n) == (6, 11)
        c = classify(g.generators(), named=named(g))
        assert c.verdict is Verdict.ALTERNATING and c.degree == 12
        assert c.order == math.factorial(12) // 2

    def test_psl27(self, psl27):
        c = classify(psl27.generators())
        assert c.verdict is Verdict.OTHER and c.order == 168
        assert c.order == len(O.closure([psl27.s.images, psl27.t.images]))

    def test_s2(self):
        c = classify([from_cycles([[0, 1]], 2)])
        assert c.verdict is Verdict.SYMMETRIC and c.order == 2

    def test_symmetric_by_witness(self):
        gens = [from_cycles([list(range(7))], 7), from_cycles([[0, 1]], 7)]
        c = classify(gens)
        assert c.verdict is Verdict.SYMMETRIC and c.order == math.factorial(7)

    def test_intransitive(self):
        c = classify([from_cycles([[0, 1, 2]], 5)])
        assert c.verdict is Verdict.OTHER and not c.transitive and c.order == 3

    def test_above_cap_without_witness(self):
        k = 70
        gens = [from_cycles([list(range(k))], k)]
        c = classify(gens)
        assert c.verdict is Verdict.OTHER and c.order is None

    def test_above_cap_with_witness(self):
        k = 70
        gens = [from_cycles([list(range(3))], k), from_cycles([list(range(1, k))], k)]
        c = classify(gens, named={"s": gens[0], "t": gens[1]})
        assert c.verdict is Verdict.ALTERNATING and c.order == math.factorial(k) // 2

    def test_to_dict(self):
        d = classify(table1_lookup((4, 5)).generators()).to_dict()
        assert d["verdict"] == "alternating" and d["degree"] == 6 and d["order"] == 360


def random_gens(rng, k, n):
    out = []
    for _ in range(n):
        imgs = list(range(k))
        rng.shuffle(imgs)
        out.append(Permutation(imgs))
    return out


def test_group_order_matches_closure_small():
    rng = random.Random(11)
    for _ in range(150):
        k = rng.randint(1, 7)
        gens = random_gens(rng, k, rng.randint(1, 3))
        assert group_order(gens) == len(O.closure([g.images for g in gens]))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 7).flatmap(lambda k: st.lists(perms(degree=k), min_size=1, max_size=3)))
def test_primitivity_matches_partitions(gens):
    assume(is_transitive(gens))
    images = [g.images for g in gens]
    assert is_primitive(gens).primitive == O.brute_primitive(images)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 7).flatmap(lambda k: st.lists(perms(degree=k), min_size=1, max_size=3)))
def test_classification_consistent_with_order(gens):
    c = classify(gens)
    k = gens[0].degree
    if c.verdict is Verdict.ALTERNATING:
        assert c.order == math.factorial(k) // 2
    elif c.verdict is Verdict.SYMMETRIC:
        assert c.order == math.factorial(k)
    assert c.order == len(O.closure([g.images for g in gens]))
