import math
import random
import threading

import pytest

import oracles as O

from chiralmap.chirality import (
    Method,
    Relabelling,
    abstract_reflexibility,
    check_lemma_2_6,
    check_lemma_2_7,
    conjugation_search,
    decide_chirality,
    find_lemma_witness,
)
from chiralmap.constructions import (
    HyperbolicType,
    build,
    build_c3_1,
    build_c3_3,
    build_c3_5,
    build_c3_11,
    build_c4_1,
    build_c4_3,
    build_c4_3_a0,
    build_c4_5,
    build_c4_7,
    dispatch,
    from_generators,
    table1_lookup,
)
from chiralmap.errors import Cancelled, GroupTooLarge, SearchTooLarge
from chiralmap.groups import Verdict, classify
from chiralmap.perm import Permutation, compose, from_cycles, parse_cycles, power


def cls_of(g):
    return classify(g.generators(), named={"s": g.s, "t": g.t, "r": g.r})


def instances(limit=24, max_degree=24):
    for m in range(4, limit + 1):
        for n in range(4, limit + 1):
            if HyperbolicType.is_hyperbolic(m, n):
                plan = dispatch((m, n))
                if plan.supported:
                    g = build(plan)
                    if g.degree <= max_degree:
                        yield g


def lemma_conditions_hold(g, w):
    """Recheck a witness directly from its definition."""
    x = g.element(w.generator)
    t = g.t
    sb_t = compose(power(x, w.b), t)
    cands = [p for p in range(g.degree) if sb_t(p) == p and t(p) != p]
    if cands != [w.zeta]:
        return False
    z = w.zeta
    zc = power(x, w.c)(z)
    ztc = power(x, -w.c)(t(z))
    if w.lemma == "L2_6":
        return t(zc) == zc and t(ztc) != ztc
    y = power(x, w.power_variant)
    a, b = t(zc), t(ztc)
    return y(a) == a and y(b) != b


@pytest.fixture
def toy():
    return from_generators(from_cycles([[0, 1, 2, 3, 4]], 5), from_cycles([[1, 4], [2, 3]], 5))


class TestLemmas:
    @pytest.mark.parametrize(
        "builder,lemma,b,c,extra",
        [
            (lambda: build_c3_1(1, 1), "L2_6", 3, 2, {}),
            (lambda: build_c3_1(1, -1), "L2_7", 4, 3, {}),
            (lambda: build_c3_3(1, -1), "L2_6", 4, 3, {}),
            (lambda: build_c3_3(1, 1), "L2_7", 6, 4, {}),
            (lambda: build_c3_5(1, -1), "L2_6", 8, 5, {}),
            (lambda: build_c4_1(1, -1), "L2_7", 1, 2, {}),
            (lambda: build_c4_1(2, 1), "L2_6", 4, -4, {}),
            (lambda: build_c4_3(1, -1), "L2_7", 2, -3, {}),
            (lambda: build_c4_3(2, -1), "L2_7", 2, -5, {}),
            (lambda: build_c4_5(1, -1), "L2_6", 2, -3, {}),
            (lambda: build_c4_7(12, 14), "L2_6", 2, 3, {"generator": "r"}),
        ],
    )
    def test_cited_pairs(self, builder, lemma, b, c, extra):
        g = builder()
        check = check_lemma_2_6 if lemma == "L2_6" else check_lemma_2_7
        w = check(g, b_range=[b], c_range=[c], **extra)
        assert w is not None and (w.b, w.c, w.lemma) == (b, c, lemma)
        assert lemma_conditions_hold(g, w)

    @pytest.mark.parametrize("n,a", [(7, 1), (9, 3), (11, 5), (13, 1)])
    def test_c3_11_family(self, n, a):
        g = build_c3_11(n, a)
        w = check_lemma_2_6(g, b_range=[2], c_range=[-1])
        assert w is not None and lemma_conditions_hold(g, w)

    def test_c4_3_uses_square(self):
        w = check_lemma_2_7(build_c4_3(1, -1), b_range=[2], c_range=[-3])
        assert w.power_variant == 2
        w = check_lemma_2_7(build_c4_3_a0(), b_range=[2], c_range=[-1])
        assert w is not None

    def test_first_hit_order(self):
        w = check_lemma_2_6(build_c3_1(1, 1))
        assert (abs(w.b), abs(w.c)) <= (3, 2)
        assert lemma_conditions_hold(build_c3_1(1, 1), w)

    def test_degenerate(self):
        g = from_generators(from_cycles([[0, 1, 2, 3, 4]], 7), from_cycles([[5, 6]], 7))
        assert check_lemma_2_6(g) is None and check_lemma_2_7(g) is None

    def test_every_instance_has_a_valid_witness(self):
        for g in instances(16):
            w = find_lemma_witness(g)
            if w is not None:
                assert lemma_conditions_hold(g, w)


class TestConjugationSearch:
    def test_dihedral_toy(self, toy):
        res = conjugation_search(toy)
        assert res.reflexible
        pi = res.relabelling.pi
        assert pi(0) == 0 and pi == from_cycles([[1, 4], [2, 3]], 5)
        assert res.relabelling.verify(toy.s, toy.t)

    def test_psl27(self, psl27):
        assert not conjugation_search(psl27).reflexible

    def test_a6_row_has_no_relabelling(self):
        g = table1_lookup((4, 5))
        assert not conjugation_search(g).reflexible
        assert O.brute_relabelling(g.s.images, g.t.images) is None

    def test_relabelling_verify(self):
        s = from_cycles([[0, 1, 2]], 3)
        t = from_cycles([[1, 2]], 3)
        assert Relabelling(t).verify(s, t)
        assert not Relabelling(s).verify(s, t)

    def test_bound(self):
        g = from_generators(from_cycles([[0, 1], [2, 3], [4, 5], [6, 7]], 8), Permutation(range(8)))
        with pytest.raises(SearchTooLarge):
            conjugation_search(g, bound=0)

    def test_cancel(self):
        ev = threading.Event()
        ev.set()
        with pytest.raises(Cancelled):
            conjugation_search(build_c3_1(1, 1), cancel=ev)

    def test_matches_brute_force(self):
        rng = random.Random(5)
        for _ in range(120):
            k = rng.randint(2, 7)
            s = list(range(k))
            rng.shuffle(s)
            t = list(range(k))
            for a, b in zip(*[iter(rng.sample(range(k), 2 * rng.randint(0, k // 2)))] * 2):
                t[a], t[b] = b, a
            g = from_generators(Permutation(s), Permutation(t))
            found = conjugation_search(g).reflexible
            assert found == (O.brute_relabelling(tuple(s), tuple(t)) is not None)


class TestAbstract:
    def test_psl27(self, psl27):
        res = abstract_reflexibility(psl27)
        assert res.reflexible and res.group_order == 168
        assert O.brute_reflexible(psl27.s.images, psl27.t.images)

    def test_toy(self, toy):
        assert abstract_reflexibility(toy).reflexible

    def test_a6_row_is_reflexible(self):
        # an outer automorphism of A6 inverts s and fixes t
        g = table1_lookup((4, 5))
        assert abstract_reflexibility(g).reflexible
        assert abstract_reflexibility(g, method="diagonal").reflexible
        assert O.brute_reflexible(g.s.images, g.t.images)

    def test_chiral_a7(self):
        g = build(dispatch((6, 8)))
        assert cls_of(g).verdict is Verdict.ALTERNATING
        res = abstract_reflexibility(g, order_bound=2 * 10**6)
        assert not res.reflexible and res.group_order == math.factorial(10) // 2

    def test_too_large(self):
        with pytest.raises(GroupTooLarge):
            abstract_reflexibility(build(dispatch((4, 9))))

    def test_unknown_method(self, toy):
        with pytest.raises(ValueError):
            abstract_reflexibility(toy, method="guess")

    def test_methods_agree_with_brute_force(self):
        rng = random.Random(9)
        for _ in range(80):
            k = rng.randint(3, 6)
            s = list(range(k))
            rng.shuffle(s)
            t = list(range(k))
            for a, b in zip(*[iter(rng.sample(range(k), 2 * rng.randint(1, k // 2)))] * 2):
                t[a], t[b] = b, a
            g = from_generators(Permutation(s), Permutation(t))
            expected = O.brute_reflexible(tuple(s), tuple(t))
            assert abstract_reflexibility(g).reflexible == expected
            assert abstract_reflexibility(g, method="diagonal").reflexible == expected


class TestDecide:
    def test_c3_1(self):
        g = build(dispatch((4, 9)))
        v = decide_chirality(g, cls_of(g))
        assert v.chiral and v.method is Method.LEMMA_2_6
        assert v.search is not None and not v.search.reflexible
        assert v.caveat is None

    def test_psl27(self, psl27):
        v = decide_chirality(psl27, classify(psl27.generators()))
        assert not v.chiral and v.method is Method.ABSTRACT_ORACLE
        assert not v.search.reflexible and v.caveat
        assert v.abstract.reflexible

    def test_a6_row(self):
        g = table1_lookup((4, 5))
        c = cls_of(g)
        assert c.verdict is Verdict.ALTERNATING and c.degree == 6
        v = decide_chirality(g, c)
        assert not v.chiral and v.method is Method.ABSTRACT_ORACLE
        assert v.abstract is not None and v.abstract.reflexible

    def test_searched_four_five(self):
        g = build(dispatch((4, 5)))
        v = decide_chirality(g, cls_of(g))
        assert v.chiral and g.degree == 15
        assert not abstract_reflexibility(g, method="diagonal").reflexible

    def test_reflexible_dihedral(self):
        # t inverts the 7-cycle, so the group is D7 and the relabelling is t itself
        s = parse_cycles("(1,2,3,4,5,6,7)", 7)
        t = parse_cycles("(2,7)(3,6)", 7)
        g = from_generators(s, t)
        v = decide_chirality(g, classify(g.generators()))
        assert not v.chiral
        assert v.relabelling is not None or v.abstract.reflexible

    def test_forced_oracles_agree(self):
        g = build(dispatch((6, 8)))
        c = cls_of(g)
        a = decide_chirality(g, c, oracle="abstract", order_bound=2 * 10**6)
        b = decide_chirality(g, c, oracle="conjugation")
        assert a.chiral and b.chiral
        assert a.method is Method.ABSTRACT_ORACLE

    def test_abstract_falls_back_to_diagonal(self):
        g = build(dispatch((4, 9)))
        v = decide_chirality(g, cls_of(g), oracle="abstract")
        assert v.chiral and v.abstract.method == "diagonal"

    def test_bad_oracle(self, toy):
        with pytest.raises(ValueError):
            decide_chirality(toy, classify(toy.generators()), oracle="vote")

    def test_deterministic(self):
        g = build(dispatch((10, 12)))
        c = cls_of(g)
        assert decide_chirality(g, c).to_dict() == decide_chirality(g, c).to_dict()


def test_lemma_positive_implies_no_relabelling():
    n = 0
    for g in instances(24):
        c = cls_of(g)
        w = find_lemma_witness(g)
        if w is not None and c.verdict is Verdict.ALTERNATING and c.degree >= 7:
            n += 1
            assert not conjugation_search(g).reflexible
    assert n > 100


def test_abstract_agrees_with_search_for_small_alternating():
    n = 0
    for g in instances(24, max_degree=12):
        c = cls_of(g)
        if c.verdict is not Verdict.ALTERNATING or not 7 <= c.degree <= 12:
            continue
        method = "cayley" if c.order <= 2 * 10**6 else "diagonal"
        res = abstract_reflexibility(g, order_bound=2 * 10**6, method=method)
        assert res.reflexible == conjugation_search(g).reflexible
        n += 1
    assert n >= 10


def test_reflexible_verdicts_carry_evidence():
    rng = random.Random(3)
    for _ in range(60):
        k = rng.randint(3, 7)
        s = list(range(k))
        rng.shuffle(s)
        t = list(range(k))
        for a, b in zip(*[iter(rng.sample(range(k), 2 * rng.randint(1, k // 2)))] * 2):
            t[a], t[b] = b, a
        g = from_generators(Permutation(s), Permutation(t))
        c = classify(g.generators())
        if not c.transitive:
            continue
        v = decide_chirality(g, c)
        if not v.chiral:
            assert v.relabelling is not None or (v.abstract is not None and v.abstract.reflexible)
        if v.relabelling is not None:
            assert v.relabelling.verify(g.s, g.t)
