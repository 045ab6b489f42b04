import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shirshov.errors import PresentationSyntaxError, ShirshovError
from shirshov.liepoly import LiePoly, bracket
from shirshov.presentation import PresentationFile, parse_lie_expression, parse_presentation, resolve
from shirshov.words import Alphabet


def test_semigroup_file():
    pf = parse_presentation("letters: y < x\nrule: x y = y x")
    assert pf.kind == "semigroup"
    assert pf.letters == ["y", "x"]
    assert len(pf.rules) == 1
    res = resolve(pf)
    assert res.semigroup.rules == [((1, 0), (0, 1))]


def test_compact_rule_words():
    pf = parse_presentation("letters: y < x\nrule: xy = yx\n")
    assert resolve(pf).semigroup.rules == [((1, 0), (0, 1))]


def test_dk_shorthand():
    pf = parse_presentation("dk: n=4")
    assert pf.kind == "dk"
    res = resolve(pf)
    assert len(res.alphabet) == 3
    assert len(res.relations) == 2


def test_dk_family_5_relation_from_expression():
    res = resolve(parse_presentation("dk: n=4"))
    f = parse_lie_expression("[t23, t12] + [t13, t12]", res.alphabet)
    assert f == res.relations["DK5:1,2,3"].poly


def test_expression_syntax():
    ab = Alphabet(["a", "b", "z"])
    a, b, z = (LiePoly.generator(i) for i in range(3))
    assert parse_lie_expression("(z ; a b)", ab) == bracket(bracket(z, a), b)
    assert parse_lie_expression("(z;ab)", ab) == bracket(bracket(z, a), b)
    assert parse_lie_expression("-2 [b, a] + 3*[a, b]", ab) == bracket(b, a) * -5
    assert parse_lie_expression("([b, a])", ab) == bracket(b, a)
    assert parse_lie_expression("[b, a] - [b, a]", ab) == 0


def test_lie_file_relations():
    pf = parse_presentation("letters: a < b < c  # three\nring: ZZ\nrelation: [c, b]\nrelation: [b, a]\n")
    res = resolve(pf)
    assert [r.id for r in res.relations] == ["R001", "R002"]
    assert res.relations.ring.name == "ZZ"


def test_kukin_file(tmp_path):
    (tmp_path / "sgp.txt").write_text("letters: y < x\nrule: xy = yx\n")
    (tmp_path / "k.txt").write_text("kukin: sgp.txt, bound=5\n")
    pf = parse_presentation((tmp_path / "k.txt").read_text())
    assert pf.kind == "kukin" and pf.options == {"source": "sgp.txt", "bound": 5}
    res = resolve(pf, tmp_path)
    assert res.semigroup.rules == [((1, 0), (0, 1))]


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("letters: a < a", 1, 14),
        ("letters: a < b\nrelation: [a, c]", 2, 15),
        ("letters: a < b\nrelation: [a, b", 2, 16),
        ("letters: a < b\nrelation: [a, b] $", 2, 18),
        ("frobnicate: 3", 1, 1),
        ("letters a b", 1, 1),
        ("dk: n=two", 1, 5),
        ("kukin: bound=0", 1, 8),
    ],
)
def test_errors_carry_location(text, line, column):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


@pytest.mark.parametrize(
    "text",
    [
        "relation: [a, b]",
        "letters: a < b\nrule: a = c",
        "letters: a < b\nrule: a b = b a\nrelation: [b, a]",
        "dk: n=4\nrule: a = b",
        "letters: x\nrule: = x",
        "letters: a\nletters: b",
        "dk: n=4\ndk: n=5",
        "letters: y < x\nrule: x = y\nring: QQ",
        "kind: lie\nletters: y < x\nrule: x = y",
        "kind: group",
        "dk: n=4\nkind: lie",
    ],
)
def test_malformed_files_are_rejected(text):
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(text)


CANONICAL = [
    "letters: y < x\nrule: x y = y x\n",
    "dk: n=6\n",
    "kind: semigroup\nletters: a < b\n",
    "kukin: sgp.txt, bound=8\n",
    "kukin: bound=3\nletters: y < x\nrule: x x = x\n",
    "letters: a < b < c\nring: ZZ\nrelation: [c, b] - 2 [[c, a], b]\nrelation: (c ; a b)\n",
]


@pytest.mark.parametrize("text", CANONICAL)
def test_round_trip(text):
    pf = parse_presentation(text)
    assert pf.serialize() == text
    assert parse_presentation(pf.serialize()) == pf


def test_round_trip_up_to_whitespace():
    messy = "  letters:y<x   \n\n# comment\nrule:   x   y=y x  # tail\n"
    pf = parse_presentation(messy)
    assert pf.serialize() == "letters: y < x\nrule: x y = y x\n"


names = st.sampled_from(["a", "b", "c", "x1", "t12"])


@st.composite
def presentation_files(draw):
    letters = draw(st.lists(names, min_size=1, max_size=4, unique=True))
    kind = draw(st.sampled_from(["lie", "semigroup"]))
    pf = PresentationFile(kind, letters)
    if kind == "semigroup":
        word = st.lists(st.sampled_from(letters), min_size=1, max_size=3).map(" ".join)
        pf.rules = draw(st.lists(st.tuples(word, word), max_size=3))
    else:
        gen = st.sampled_from(letters)
        expr = st.tuples(st.integers(1, 4), gen, gen).map(lambda t: f"{t[0]} [{t[1]}, {t[2]}]")
        pf.relations = draw(st.lists(expr, max_size=3))
        if draw(st.booleans()):
            pf.options["ring"] = draw(st.sampled_from(["ZZ", "QQ"]))
    return pf


@settings(max_examples=200, deadline=None)
@given(presentation_files())
def test_serialize_parse_round_trip(pf):
    assert parse_presentation(pf.serialize()) == pf


ALPHABET = Alphabet(["a", "b", "z"])
fragments = st.sampled_from(
    ["[", "]", "(", ")", ",", ";", "+", "-", "*", "2", "a", "b", "z", " ", "ab", "q", "^a", "\n", ":", "letters", "<", "rule", "=", "relation", "dk", "n=4", "#"]
)


@settings(max_examples=500, deadline=None)
@given(st.lists(fragments, max_size=25).map("".join))
def test_expression_parser_is_total(text):
    try:
        parse_lie_expression(text, ALPHABET)
    except PresentationSyntaxError:
        pass


@settings(max_examples=500, deadline=None)
@given(st.lists(fragments, max_size=25).map("".join) | st.text(max_size=60))
def test_file_parser_is_total(text):
    try:
        parse_presentation(text)
    except ShirshovError:
        pass


def test_deep_nesting_is_a_syntax_error():
    with pytest.raises(PresentationSyntaxError):
        parse_lie_expression("(" * 5000 + "a" + ")" * 5000, ALPHABET)
