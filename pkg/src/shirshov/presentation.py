"""Presentation files and the Lie expression syntax.

A presentation file is a list of ``key: value`` lines; ``#`` starts a comment::

    kind: semigroup         # only needed for a semigroup without rules
    letters: y < x          # ascending order
    ring: QQ                # or ZZ
    bound: 8                # degree bound for Kukin (3)' instances
    rule: x y = y x         # semigroup relation
    relation: [b, a] + 2 [c, a]
    dk: n=5                 # Drinfeld-Kohno shorthand
    kukin: sgp.txt, bound=8 # Kukin algebra of a semigroup file

Lie expressions use ``[f, g]`` for brackets, ``(z ; x y)`` for the
left-normed bracket of ``z`` with ``x y``, integer coefficients and ``+``/``-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .drinfeld_kohno import DKPresentation, dk_build
from .errors import AlphabetError, PresentationSyntaxError
from .gsb import RelationSet, make_relation
from .liepoly import LiePoly, Ring, bracket
from .semigroup import SgpPresentation
from .words import Alphabet

KINDS = ("lie", "semigroup", "kukin", "dk")
_KEYS = ("kind", "letters", "ring", "bound", "rule", "relation", "dk", "kukin")
_NAME = re.compile(r"\^?[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(\^?[A-Za-z_][A-Za-z0-9_]*)|(\d+)|([\[\](),;+\-*]))")


@dataclass
class PresentationFile:
    kind: str
    letters: list[str] = field(default_factory=list)
    rules: list[tuple[str, str]] = field(default_factory=list)
    relations: list[str] = field(default_factory=list)
    options: dict = field(default_factory=dict)

    def serialize(self) -> str:
        lines = []
        if self.kind == "dk":
            lines.append(f"dk: n={self.options['n']}")
        if self.kind == "kukin":
            parts = [self.options["source"]] if self.options.get("source") else []
            if "bound" in self.options:
                parts.append(f"bound={self.options['bound']}")
            lines.append("kukin: " + ", ".join(parts))
        if self.kind == "semigroup" and not self.rules:
            lines.append("kind: semigroup")
        if self.letters:
            lines.append("letters: " + " < ".join(self.letters))
        if "ring" in self.options:
            lines.append(f"ring: {self.options['ring']}")
        if "bound" in self.options and self.kind != "kukin":
            lines.append(f"bound: {self.options['bound']}")
        for u, v in self.rules:
            lines.append(f"rule: {u} = {v}")
        for expr in self.relations:
            lines.append(f"relation: {expr}")
        return "\n".join(lines) + "\n"


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _squash(text: str) -> str:
    return " ".join(text.split())


def parse_presentation(text: str) -> PresentationFile:
    """Parse the line-oriented presentation format; errors carry line and column."""
    letters: list[str] = []
    rules: list[tuple[str, str]] = []
    relations: list[str] = []
    relation_lines: list[tuple[str, int, int]] = []
    options: dict = {}
    kind = None
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        col = len(line) - len(line.lstrip()) + 1
        if not sep:
            raise PresentationSyntaxError("expected 'key: value'", lineno, col)
        if key not in _KEYS:
            raise PresentationSyntaxError(f"unknown key {key!r}", lineno, col)
        vcol = len(key) + col + 1 + (len(value) - len(value.lstrip()))
        value = value.strip()
        if key == "kind":
            if value not in ("lie", "semigroup") or declared:
                raise PresentationSyntaxError("kind must be declared once, as lie or semigroup", lineno, vcol)
            declared = value
        elif key == "letters":
            if letters:
                raise PresentationSyntaxError("letters declared twice", lineno, col)
            letters = _parse_letters(value, lineno, vcol)
        elif key == "ring":
            if value not in ("ZZ", "QQ"):
                raise PresentationSyntaxError("ring must be ZZ or QQ", lineno, vcol)
            options["ring"] = value
        elif key == "bound":
            options["bound"] = _parse_int(value, lineno, vcol, "bound")
        elif key == "rule":
            lhs, eq, rhs = value.partition("=")
            if not eq or not lhs.strip() or not rhs.strip() or "=" in rhs:
                raise PresentationSyntaxError("rule must read 'u = v' with nonempty words", lineno, vcol)
            rules.append((_squash(lhs), _squash(rhs)))
        elif key == "relation":
            if not value:
                raise PresentationSyntaxError("empty relation", lineno, vcol)
            relations.append(_squash(value))
            relation_lines.append((value, lineno, vcol))
        elif key == "dk":
            if kind is not None:
                raise PresentationSyntaxError("presentation kind declared twice", lineno, col)
            m = re.fullmatch(r"n\s*=\s*(\d+)", value)
            if not m:
                raise PresentationSyntaxError("expected 'dk: n=<integer>'", lineno, vcol)
            n = int(m.group(1))
            if n <= 2:
                raise PresentationSyntaxError("Drinfeld-Kohno needs n > 2", lineno, vcol)
            kind, options["n"] = "dk", n
        elif key == "kukin":
            if kind is not None:
                raise PresentationSyntaxError("presentation kind declared twice", lineno, col)
            kind = "kukin"
            for part in (p.strip() for p in value.split(",")):
                if not part:
                    continue
                m = re.fullmatch(r"bound\s*=\s*(\S+)", part)
                if m:
                    options["bound"] = _parse_int(m.group(1), lineno, vcol, "bound")
                elif "source" in options:
                    raise PresentationSyntaxError("kukin takes one semigroup file", lineno, vcol)
                else:
                    options["source"] = part
    if kind is not None and declared:
        raise PresentationSyntaxError(f"kind: {declared} conflicts with the {kind} shorthand")
    if kind is None:
        if rules and relations:
            raise PresentationSyntaxError("a file holds either semigroup rules or Lie relations, not both")
        kind = declared or ("semigroup" if rules else "lie")
        if (kind == "lie" and rules) or (kind == "semigroup" and relations):
            raise PresentationSyntaxError(f"a {kind} presentation cannot hold {'rules' if rules else 'relations'}")
    if kind == "dk" and letters:
        raise PresentationSyntaxError("dk presentations generate their own letters")
    if kind in ("lie", "semigroup") and not letters:
        raise PresentationSyntaxError("missing 'letters:' declaration")
    if kind == "kukin" and relations:
        raise PresentationSyntaxError("kukin presentations take semigroup rules, not Lie relations")
    if kind == "dk" and (rules or relations):
        raise PresentationSyntaxError("dk presentations generate their own relations")
    if kind in ("semigroup", "kukin") and "ring" in options:
        raise PresentationSyntaxError("ring applies to lie and dk presentations only")
    if kind == "kukin" and "source" in options and (letters or rules):
        raise PresentationSyntaxError("a kukin file either names a semigroup file or lists its rules")
    if kind == "kukin" and "source" not in options and not letters:
        raise PresentationSyntaxError("kukin needs a semigroup file or inline letters and rules")
    if letters:
        alphabet = Alphabet(letters)
        for u, v in rules:
            _check_word(alphabet, u)
            _check_word(alphabet, v)
        for text, lineno, col in relation_lines:
            try:
                parse_lie_expression(text, alphabet)
            except PresentationSyntaxError as exc:
                raise PresentationSyntaxError(exc.message, lineno, col + (exc.column or 1) - 1) from None
    return PresentationFile(kind, letters, rules, relations, options)


def _parse_int(value: str, line: int, col: int, what: str) -> int:
    if not re.fullmatch(r"\d+", value) or int(value) < 1:
        raise PresentationSyntaxError(f"{what} must be a positive integer", line, col)
    return int(value)


def _parse_letters(value: str, line: int, col: int) -> list[str]:
    names = []
    offset = 0
    for part in value.split("<"):
        name = part.strip()
        where = col + offset + (len(part) - len(part.lstrip()))
        offset += len(part) + 1
        if not _NAME.fullmatch(name):
            raise PresentationSyntaxError(f"invalid letter name {name!r}", line, where)
        if name in names:
            raise PresentationSyntaxError(f"duplicate letter {name!r}", line, where)
        names.append(name)
    return names


def _check_word(alphabet: Alphabet, text: str):
    try:
        return alphabet.word(text)
    except AlphabetError as exc:
        raise PresentationSyntaxError(str(exc)) from None


class _ExprParser:
    """Recursive descent over the token stream of one expression."""

    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                skip = len(text[pos:]) - len(text[pos:].lstrip())
                raise PresentationSyntaxError(f"unexpected character {text[pos + skip]!r}", 1, pos + skip + 1)
            kind = "name" if m.group(1) else "int" if m.group(2) else m.group(3)
            start = m.start(m.lastindex)
            self.tokens.append((kind, m.group(m.lastindex), start + 1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text) + 1)

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PresentationSyntaxError(f"expected {kind!r}, found {what}", 1, tok[2])
        self.i += 1
        return tok

    def parse(self) -> LiePoly:
        if not self.tokens:
            raise PresentationSyntaxError("empty expression", 1, 1)
        f = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            raise PresentationSyntaxError(f"unexpected {tok[1]!r}", 1, tok[2])
        return f

    def expr(self) -> LiePoly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        total = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            total = total + self.term() * sign
        return total

    def term(self) -> LiePoly:
        coeff = 1
        if self.peek()[0] == "int":
            coeff = int(self.take()[1])
            if self.peek()[0] == "*":
                self.take()
        return self.atom() * coeff

    def atom(self) -> LiePoly:
        kind, value, col = self.peek()
        if kind == "name":
            self.take()
            word = self._word(value, col)
            if len(word) != 1:
                raise PresentationSyntaxError(f"{value!r} is not a single generator", 1, col)
            return LiePoly.generator(word[0])
        if kind == "[":
            self.take()
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return bracket(left, right)
        if kind == "(":
            self.take()
            first = self.expr()
            if self.peek()[0] == ";":
                self.take()
                if len(first) != 1 or len(next(iter(first.terms))) != 1:
                    raise PresentationSyntaxError("left-normed bracket must start with a generator", 1, col)
                f = first
                while self.peek()[0] == "name":
                    _, name, ncol = self.take()
                    for x in self._word(name, ncol):
                        f = bracket(f, LiePoly.generator(x))
                self.take(")")
                return f
            self.take(")")
            return first
        what = "end of input" if kind == "end" else repr(value)
        raise PresentationSyntaxError(f"unexpected {what}", 1, col)

    def _word(self, name: str, col: int):
        try:
            return self.alphabet.word(name)
        except AlphabetError:
            raise PresentationSyntaxError(f"unknown letter {name!r}", 1, col) from None


def parse_lie_expression(text: str, alphabet: Alphabet, line: int | None = None) -> LiePoly:
    """Evaluate a Lie expression to NLSW coordinates."""
    try:
        return _ExprParser(text, alphabet).parse()
    except PresentationSyntaxError as exc:
        if line is not None:
            raise PresentationSyntaxError(exc.message, line, exc.column) from None
        raise
    except RecursionError:
        raise PresentationSyntaxError("expression nested too deeply", line) from None


def read_presentation(path: str | Path) -> PresentationFile:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


@dataclass
class Resolved:
    """A presentation turned into engine objects."""

    file: PresentationFile
    alphabet: Alphabet
    relations: RelationSet | None = None
    semigroup: SgpPresentation | None = None
    dk: DKPresentation | None = None


def resolve(pf: PresentationFile, base_dir: str | Path = ".") -> Resolved:
    """Build the relation set or semigroup presentation a file describes.

    A kukin file naming a semigroup file resolves to that semigroup; the path
    is taken relative to ``base_dir``.
    """
    ring = Ring[pf.options.get("ring", "ZZ" if pf.kind == "dk" else "QQ")]
    if pf.kind == "dk":
        dk = dk_build(pf.options["n"], ring)
        return Resolved(pf, dk.alphabet, relations=dk.relations, dk=dk)
    if pf.kind == "kukin" and "source" in pf.options:
        source = read_presentation(Path(base_dir) / pf.options["source"])
        if source.kind != "semigroup":
            raise PresentationSyntaxError(f"{pf.options['source']} is not a semigroup presentation")
        pf_rules, letters = source.rules, source.letters
    else:
        pf_rules, letters = pf.rules, pf.letters
    alphabet = Alphabet(letters)
    if pf.kind == "lie":
        rels = []
        for k, text in enumerate(pf.relations, start=1):
            poly = parse_lie_expression(text, alphabet)
            if not poly:
                raise PresentationSyntaxError(f"relation {k} is zero")
            rels.append(make_relation(poly, f"R{k:03d}", ring, family="R"))
        return Resolved(pf, alphabet, relations=RelationSet(rels, alphabet, ring))
    rules = [(alphabet.word(u), alphabet.word(v)) for u, v in pf_rules]
    return Resolved(pf, alphabet, semigroup=SgpPresentation(alphabet, rules))
