import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shirshov.drinfeld_kohno import dk_build
from shirshov.errors import NonUnitError, UnverifiedBasisError, ZeroPolynomialError
from shirshov.gsb import (
    INCLUSION,
    INTERSECTION,
    RelationSet,
    check_gsb,
    complete,
    composition,
    find_ambiguities,
    ideal_member,
    irr_enumerate,
    make_relation,
    reduce,
    special_normal_word,
)
from shirshov.kukin import KukinContext
from shirshov.liepoly import LiePoly, Ring, bracket
from shirshov.semigroup import SgpPresentation, orient
from shirshov.words import Alphabet, is_alsw
from strategies import random_lie

ABC = Alphabet(["a", "b", "c"])


def gen(x):
    return LiePoly.generator(x)


def rel_set(alphabet, polys, ring=Ring.QQ):
    rels = [make_relation(p, f"R{k}", ring) for k, p in enumerate(polys)]
    return RelationSet(rels, alphabet, ring)


@pytest.fixture(scope="module")
def dk4():
    return dk_build(4)


@pytest.fixture(scope="module")
def dk5():
    return dk_build(5)


@pytest.fixture(scope="module")
def commutative():
    ab = Alphabet(["y", "x"])
    rs = orient(SgpPresentation(ab, [(ab.word("xy"), ab.word("yx"))]))
    return KukinContext(rs, bound=4)


def test_make_relation_is_monic():
    r = make_relation(bracket(gen(0), gen(1)) * 1, "r")
    assert r.poly.lead_coefficient == 1 and r.negated
    with pytest.raises(NonUnitError):
        make_relation(bracket(gen(1), gen(0)) * 2, "r", Ring.ZZ)
    assert make_relation(bracket(gen(1), gen(0)) * 2, "r", Ring.QQ).poly == bracket(gen(1), gen(0))
    with pytest.raises(ZeroPolynomialError):
        make_relation(LiePoly.zero(), "r")


def test_self_inclusion_at_identity_is_excluded():
    r = make_relation(bracket(gen(1), gen(0)), "r")
    assert find_ambiguities(r, r) == []


def test_no_ambiguity_between_dk4_leads(dk4):
    f, g = dk4.relations
    assert find_ambiguities(f, g) == [] and find_ambiguities(g, f) == []


def test_kukin_intersection_ambiguity(commutative):
    ctx = commutative
    S = ctx.s1()
    f = S["K2:x"]
    g = S["K3:x.y:00000"]
    amb = find_ambiguities(f, g)
    assert len(amb) == 1
    assert amb[0].kind == INTERSECTION
    assert ctx.alphabet.format(amb[0].word) == "^x z x y"


def test_kukin_composition_equals_shifted_difference(commutative):
    # (f, g)_w == (z; x u) - (z; x v) modulo the hat relations
    ctx = commutative
    S = ctx.s1()
    f, g = S["K2:x"], S["K3:x.y:00000"]
    amb = find_ambiguities(f, g)[0]
    x = ctx.rs.alphabet.index("x")
    u, v = g.params
    expected = ctx.left_normed((x,) + u) - ctx.left_normed((x,) + v)
    hats = RelationSet([r for r in S if r.family in ("K1", "K2")], ctx.alphabet, S.ring)
    assert reduce(composition(f, g, amb) - expected, hats) == 0


def test_inclusion_composition():
    S = rel_set(ABC, [bracket(bracket(gen(2), gen(1)), gen(0)), bracket(gen(2), gen(1))])
    f, g = S
    amb = find_ambiguities(f, g)
    assert [a.kind for a in amb] == [INCLUSION]
    h = composition(f, g, amb[0])
    assert not h or (len(h.lead), h.lead) < (len(f.lead), f.lead)


def test_reduce_zero_and_examples(dk4, commutative):
    assert reduce(LiePoly.zero(), dk4.relations) == 0
    t = dk4.letter
    nf = reduce(bracket(gen(t(2, 3)), gen(t(1, 2))), dk4.relations)
    assert nf == -bracket(gen(t(1, 3)), gen(t(1, 2)))
    ctx = commutative
    xy, yx = ctx.rs.alphabet.word("xy"), ctx.rs.alphabet.word("yx")
    assert reduce(ctx.left_normed(xy), ctx.s1()) == reduce(ctx.left_normed(yx), ctx.s1())


def test_check_gsb_examples(dk4):
    assert check_gsb(RelationSet([], ABC)).passed
    assert check_gsb(dk4.relations).verdict == "pass"


def test_single_dk4_relation_passes_vacuously(dk4):
    # one relation has no self-ambiguity, so the check cannot fail
    alone = dk4.relations.without("DK6:1,2,3")
    report = check_gsb(alone)
    assert report.passed and len(report) == 0


def test_incomplete_set_fails_and_completes():
    a, b, c = (gen(i) for i in range(3))
    S = rel_set(ABC, [bracket(c, b), bracket(b, a)])
    report = check_gsb(S)
    assert report.verdict == "fail"
    bad = report.failures[0]
    assert bad.remainder == bracket(bracket(c, a), b) or bad.remainder == -bracket(bracket(c, a), b)
    done, final = complete(S, max_deg=6, max_iter=5)
    assert len(done) > len(S)
    assert final.records  # completion found new ambiguities to check


def test_composition_leads_fall_below_ambiguity_word(dk5, commutative):
    for S in (dk5.relations, commutative.s1()):
        for f in S:
            for g in S:
                for amb in find_ambiguities(f, g):
                    h = composition(f, g, amb)
                    if h:
                        assert (len(h.lead), h.lead) < (len(amb.word), amb.word)


def test_irr_enumerate_examples(dk4):
    ab = Alphabet(["a", "b"])
    assert irr_enumerate(RelationSet([], ab), 2) == [ab.word("a"), ab.word("b"), ab.word("ba")]
    words = irr_enumerate(dk4.relations, 2)
    assert sorted(dk4.alphabet.format(w) for w in words) == ["t12", "t13", "t13 t12", "t23"]
    assert sum(len(w) == 3 for w in irr_enumerate(dk4.relations, 3)) == 2


def test_ideal_member(dk4):
    S = dk4.relations
    report = check_gsb(S)
    f, g = (r.poly for r in S)
    assert ideal_member(LiePoly.zero(), S, report)
    assert ideal_member(bracket(f, g), S, report)
    assert ideal_member(bracket(bracket(f, gen(0)), gen(2)), S, report)
    t13t12 = dk4.alphabet.word("t13 t12")
    assert not ideal_member(LiePoly.basis(t13t12), S, report)
    with pytest.raises(UnverifiedBasisError):
        ideal_member(f, S, None)


def _random_normal_word(rng, S, q):
    rels = list(S)
    while True:
        r = rng.choice(rels)
        a = tuple(rng.randrange(q) for _ in range(rng.randint(0, 2)))
        b = tuple(rng.randrange(q) for _ in range(rng.randint(0, 2)))
        if is_alsw(a + r.lead + b):
            return special_normal_word(r, a, b)


def test_diamond_property_on_normal_words(dk5):
    S = dk5.relations
    assert check_gsb(S).passed
    rng = random.Random(7)
    q = len(dk5.alphabet)
    for _ in range(100):
        h = LiePoly.zero()
        for _ in range(rng.randint(1, 4)):
            h = h + _random_normal_word(rng, S, q) * rng.choice([-2, -1, 1, 3])
        assert reduce(h, S) == 0


def test_randomized_reduction_agrees_with_deterministic(dk5):
    S = dk5.relations
    rng = random.Random(11)
    for _ in range(10):
        h = random_lie(rng, q=3)
        h = bracket(h, LiePoly.generator(rng.randrange(len(dk5.alphabet)))) + h
        expected = reduce(h, S)
        for _ in range(20):
            assert reduce(h, S, rng=rng) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_reduce_is_idempotent_and_irreducible(seed):
    dk = dk_build(5)
    rng = random.Random(seed)
    h = random_lie(rng, q=3)
    h = bracket(h, LiePoly.generator(rng.randrange(6)))
    nf = reduce(h, dk.relations)
    assert reduce(nf, dk.relations) == nf
    assert all(dk.relations.find(w) is None for w in nf.terms)


def test_parallel_check_matches_serial(dk5):
    serial = check_gsb(dk5.relations)
    parallel = check_gsb(dk5.relations, parallel=True, workers=2)
    assert serial.lines() == parallel.lines()


def test_zz_reduction_stays_integral():
    dk = dk_build(6)
    rng = random.Random(3)
    for _ in range(20):
        h = bracket(random_lie(rng, q=3), LiePoly.generator(rng.randrange(len(dk.alphabet))))
        nf = reduce(h, dk.relations)
        assert all(type(c) is int for c in nf.terms.values())
