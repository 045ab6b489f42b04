import random

import pytest

from shirshov.errors import BoundExceededError, IncompleteSystemError
from shirshov.gsb import CENSORED, reduce
from shirshov.kukin import KukinContext, build_s1, lie_word_equal, semigroup_normal_form, verify_s1
from shirshov.semigroup import SgpPresentation, knuth_bendix, orient, words_up_to
from shirshov.words import Alphabet

XY = Alphabet(["y", "x"])
W = XY.word


def context(*pairs, bound=4):
    p = SgpPresentation(XY, [(W(u), W(v)) for u, v in pairs])
    return KukinContext.from_presentation(p, bound)


@pytest.fixture(scope="module")
def commutative():
    return context(("xy", "yx"), bound=5)


@pytest.fixture(scope="module")
def idempotent():
    return context(("xx", "x"), bound=5)


def test_alphabet_order():
    ctx = context()
    assert ctx.alphabet.letters == ("y", "x", "z", "^y", "^x")


def test_s1_of_free_semigroup_has_only_hat_relations():
    S = build_s1(context())
    assert {r.family for r in S} == {"K1", "K2"}
    assert len(S) == 4 + 2


def test_s1_with_commuting_letters():
    ctx = context(("xy", "yx"), bound=2)
    S = ctx.s1()
    k3 = [r for r in S if r.family == "K3"]
    assert len(k3) == 1
    assert k3[0].poly == ctx.left_normed(W("xy")) - ctx.left_normed(W("yx"))


def test_incomplete_system_is_refused():
    rs = orient(SgpPresentation(XY, [(W("xyx"), W("yxy"))]))
    with pytest.raises(IncompleteSystemError):
        KukinContext(rs, 4)
    with pytest.raises(IncompleteSystemError):
        KukinContext.from_presentation(SgpPresentation(XY, [(W("xyx"), W("yxy"))]), 4, max_len=6, max_iter=4)


def test_verify_free_semigroup():
    report = verify_s1(context())
    assert report.passed and len(report) == 0


@pytest.mark.parametrize("pairs", [[("xy", "yx")], [("xx", "x")]])
def test_verify_samples_at_bound_4(pairs):
    report = verify_s1(context(*pairs, bound=4))
    assert report.passed
    assert {r.family for r in report.records} <= {"(2)^(3)'", "(3)'^(3)'"}


@pytest.mark.parametrize("pairs", [[("xy", "yx")], [("xx", "x")]])
def test_censored_remainders_vanish_with_a_larger_bound(pairs):
    small = context(*pairs, bound=4)
    larger = context(*pairs, bound=5).s1()
    report = verify_s1(small)
    censored = [r for r in report.records if r.status == CENSORED]
    assert censored
    for rec in censored:
        assert reduce(rec.remainder, larger) == 0


def test_lie_word_equal_examples(commutative):
    assert lie_word_equal(W("xyx"), W("xyx"), commutative)
    assert lie_word_equal(W("xy"), W("yx"), commutative)
    assert not lie_word_equal(W("x"), W("y"), commutative)


def test_bound_is_enforced(commutative):
    with pytest.raises(BoundExceededError):
        commutative.normal_form(W("xyxyxy"))
    with pytest.raises(ValueError):
        commutative.normal_form((commutative.z,))


def test_leading_word_of_left_normed(commutative):
    ctx = commutative
    for u in words_up_to(2, 5):
        f = ctx.left_normed(u)
        assert f.lead == (ctx.z,) + u
        assert f.lead_coefficient == 1


@pytest.mark.parametrize("name", ["commutative", "idempotent"])
def test_normal_form_shape(name, request):
    ctx = request.getfixturevalue(name)
    hats = {ctx.hat(a) for a in range(ctx.base_size)}
    for u in words_up_to(2, 5):
        nf = ctx.normal_form(u)
        c = semigroup_normal_form(u, ctx)
        assert nf.lead == (ctx.z,) + c
        assert nf.lead_coefficient == 1
        assert nf == ctx.normal_form(c)
        assert not any(hats & set(w) for w in nf.terms)


@pytest.mark.parametrize("name", ["commutative", "idempotent"])
def test_hat_shift_identity(name, request):
    # (z; a u b) and (z; u hat(reversed a) b) have the same normal form
    ctx = request.getfixturevalue(name)
    S = ctx.s1()
    rng = random.Random(5)
    for _ in range(40):
        a = tuple(rng.randrange(2) for _ in range(rng.randint(0, 2)))
        u = tuple(rng.randrange(2) for _ in range(rng.randint(1, 2)))
        b = tuple(rng.randrange(2) for _ in range(rng.randint(0, 1)))
        shifted = u + tuple(ctx.hat(x) for x in reversed(a)) + b
        assert reduce(ctx.left_normed(a + u + b), S) == reduce(ctx.left_normed(shifted), S)


def test_equivalence_with_three_relations():
    ctx = context(("xyx", "yxy"), ("xx", "y"), bound=5)
    ws = list(words_up_to(2, 5))
    for u in ws:
        for v in ws:
            same = semigroup_normal_form(u, ctx) == semigroup_normal_form(v, ctx)
            assert lie_word_equal(u, v, ctx) == same


def test_three_letter_alphabet():
    abc = Alphabet(["a", "b", "c"])
    p = SgpPresentation(abc, [(abc.word("ca"), abc.word("ac")), (abc.word("bb"), abc.word("b"))])
    ctx = KukinContext(knuth_bendix(orient(p)), 3)
    assert verify_s1(ctx).passed
    assert lie_word_equal(abc.word("cab"), abc.word("acb"), ctx)
    assert not lie_word_equal(abc.word("cb"), abc.word("bc"), ctx)
