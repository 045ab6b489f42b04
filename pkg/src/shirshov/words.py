"""Associative and non-associative Lyndon-Shirshov words.

Letters are small integers; a larger integer is a greater letter. A word is a
tuple of letters and the empty tuple is the identity of the free monoid.
:class:`Alphabet` carries the printable names and validates words.

Two orders are used throughout:

* ``compare_lex`` -- lexicographic, except that a proper prefix is *greater*
  than the longer word (the empty word is the greatest word of all);
* ``compare_deglex`` -- longer words are greater, equal lengths use
  ``compare_lex``.
"""

from __future__ import annotations

import re
from enum import IntEnum
from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import AlphabetError, NotALSWError

Word = tuple  # tuple[int, ...]

_NAME = re.compile(r"\^?[A-Za-z_][A-Za-z0-9_]*\Z")


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Alphabet:
    """Totally ordered finite set of named letters; list position is the order."""

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        seen = set()
        for name in letters:
            if not isinstance(name, str) or not _NAME.match(name):
                raise AlphabetError(f"invalid letter name {name!r}")
            if name in seen:
                raise AlphabetError(f"duplicate letter {name!r}")
            seen.add(name)
        self.letters = letters
        self._index = {name: i for i, name in enumerate(letters)}
        self._compact = all(len(name) == 1 for name in letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({' < '.join(self.letters)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"unknown letter {name!r}") from None

    def name(self, letter: int) -> str:
        return self.letters[letter]

    def check(self, word: Sequence[int]) -> Word:
        """Return ``word`` as a tuple, raising if a letter lies outside the alphabet."""
        word = tuple(word)
        for x in word:
            if not isinstance(x, int) or not 0 <= x < len(self.letters):
                raise AlphabetError(f"letter {x!r} does not belong to {self!r}")
        return word

    def word(self, text: Union[str, Sequence[int]]) -> Word:
        """Parse ``"x y"`` or, when unambiguous, ``"xy"`` into a word.

        Tokens separated by whitespace are letter names; a token that is not
        a name is split greedily into the longest matching names.
        """
        if not isinstance(text, str):
            return self.check(text)
        out = []
        for token in text.split():
            if token in self._index:
                out.append(self._index[token])
                continue
            pos = 0
            while pos < len(token):
                for end in range(len(token), pos, -1):
                    if token[pos:end] in self._index:
                        out.append(self._index[token[pos:end]])
                        pos = end
                        break
                else:
                    raise AlphabetError(f"cannot read {token!r} as a word over {self!r}")
        return tuple(out)

    def format(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        sep = "" if self._compact else " "
        return sep.join(self.letters[x] for x in word)

    def compare_lex(self, u: Sequence[int], v: Sequence[int]) -> Ordering:
        return compare_lex(self.check(u), self.check(v))

    def compare_deglex(self, u: Sequence[int], v: Sequence[int]) -> Ordering:
        return compare_deglex(self.check(u), self.check(v))


def compare_lex(u: Word, v: Word) -> Ordering:
    for a, b in zip(u, v):
        if a != b:
            return Ordering.GREATER if a > b else Ordering.LESS
    if len(u) == len(v):
        return Ordering.EQUAL
    # the shorter word is a proper prefix of the longer one
    return Ordering.GREATER if len(u) < len(v) else Ordering.LESS


def compare_deglex(u: Word, v: Word) -> Ordering:
    if len(u) != len(v):
        return Ordering.GREATER if len(u) > len(v) else Ordering.LESS
    return compare_lex(u, v)


def deglex_key(w: Word):
    """Sort key realising the deg-lex order (ascending)."""
    return (len(w), w)


@lru_cache(maxsize=None)
def is_alsw(w: Word) -> bool:
    """True iff ``w`` is strictly greater than each of its proper rotations."""
    if not w:
        raise NotALSWError("the empty word is not an ALSW")
    return all(w > w[i:] + w[:i] for i in range(1, len(w)))


def alsw_factorization(c: Word) -> list[Word]:
    """Unique factorization of ``c`` into ALSWs, nondecreasing in ``compare_lex``.

    Built greedily from the right by stripping the longest ALSW suffix.
    """
    c = tuple(c)
    if not c:
        raise NotALSWError("cannot factorize the empty word")
    factors = []
    end = len(c)
    while end:
        start = next(s for s in range(end) if is_alsw(c[s:end]))
        factors.append(c[start:end])
        end = start
    factors.reverse()
    return factors


class Leaf(NamedTuple):
    letter: int


class Node(NamedTuple):
    left: "BracketTree"
    right: "BracketTree"


BracketTree = Union[Leaf, Node]


def carrier(t: BracketTree) -> Word:
    if isinstance(t, Leaf):
        return (t.letter,)
    return carrier(t.left) + carrier(t.right)


def tree_degree(t: BracketTree) -> int:
    if isinstance(t, Leaf):
        return 1
    return tree_degree(t.left) + tree_degree(t.right)


def longest_alsw_suffix(w: Word) -> Word:
    """Longest *proper* ALSW suffix of ``w`` (``len(w) >= 2``)."""
    for start in range(1, len(w)):
        if is_alsw(w[start:]):
            return w[start:]
    raise NotALSWError(f"{w!r} has no proper ALSW suffix")


@lru_cache(maxsize=None)
def standard_bracketing(w: Word) -> BracketTree:
    """The NLSW ``[w]`` of an ALSW ``w``."""
    if not w or not is_alsw(w):
        raise NotALSWError(f"{w!r} is not an ALSW")
    if len(w) == 1:
        return Leaf(w[0])
    v = longest_alsw_suffix(w)
    u = w[: len(w) - len(v)]
    return Node(standard_bracketing(u), standard_bracketing(v))


def is_nlsw(t: BracketTree) -> bool:
    """Check the three defining conditions of a non-associative LS word."""
    if isinstance(t, Leaf):
        return True
    if not is_alsw(carrier(t)):
        return False
    if not (is_nlsw(t.left) and is_nlsw(t.right)):
        return False
    if isinstance(t.left, Node):
        return compare_lex(carrier(t.left.right), carrier(t.right)) <= Ordering.EQUAL
    return True


def left_normed_tree(letters: Sequence[int]) -> BracketTree:
    it = iter(letters)
    tree: BracketTree = Leaf(next(it))
    for x in it:
        tree = Node(tree, Leaf(x))
    return tree


def special_bracketing_path(a: Word, u: Word, b: Word) -> tuple[BracketTree, tuple[int, ...]]:
    """Shirshov special bracketing of ``w = a u b`` relative to ``u``.

    Returns the tree together with the path (0 = left, 1 = right) from the
    root to the subtree ``[u]``.
    """
    a, u, b = tuple(a), tuple(u), tuple(b)
    w = a + u + b
    if not u or not is_alsw(u):
        raise NotALSWError(f"factor {u!r} is not an ALSW")
    if not is_alsw(w):
        raise NotALSWError(f"{w!r} is not an ALSW")
    pos = len(a)

    # locate [uc]: the smallest subtree of [w] starting at pos and covering u
    tree = standard_bracketing(w)
    path: list[int] = []
    node, start = tree, 0
    while True:
        size = tree_degree(node)
        if start == pos:
            if size < len(u):
                raise NotALSWError("u does not occur as a bracketed factor of [w]")
            if isinstance(node, Leaf) or tree_degree(node.left) < len(u):
                break
            node = node.left
            path.append(0)
            continue
        if isinstance(node, Leaf):
            raise NotALSWError("u does not occur as a bracketed factor of [w]")
        left_size = tree_degree(node.left)
        if pos < start + left_size:
            if pos + len(u) > start + left_size:
                raise NotALSWError("u straddles a bracket of [w]")
            node = node.left
            path.append(0)
        else:
            node = node.right
            path.append(1)
            start += left_size

    c = carrier(node)[len(u):]
    inner = standard_bracketing(u)
    inner_path = []
    if c:
        factors = alsw_factorization(c)
        for f in factors:
            inner = Node(inner, standard_bracketing(f))
        inner_path = [0] * len(factors)
    return _replace(tree, path, inner), tuple(path + inner_path)


def _replace(tree: BracketTree, path: Sequence[int], new: BracketTree) -> BracketTree:
    if not path:
        return new
    if path[0] == 0:
        return Node(_replace(tree.left, path[1:], new), tree.right)
    return Node(tree.left, _replace(tree.right, path[1:], new))


def special_bracketing(a: Word, u: Word, b: Word) -> BracketTree:
    return special_bracketing_path(a, u, b)[0]


def subtree_at(tree: BracketTree, path: Sequence[int]) -> BracketTree:
    for step in path:
        tree = tree[step]
    return tree


def all_words(q: int, degree: int):
    """All words of exactly ``degree`` letters over ``range(q)``."""
    return (tuple(w) for w in product(range(q), repeat=degree))


def alsws(q: int, degree: int) -> list[Word]:
    """All ALSWs of the given degree over ``range(q)``, ascending in deg-lex."""
    return [w for w in all_words(q, degree) if is_alsw(w)]


def format_tree(t: BracketTree, alphabet: Alphabet) -> str:
    if isinstance(t, Leaf):
        return alphabet.name(t.letter)
    return f"[{format_tree(t.left, alphabet)}, {format_tree(t.right, alphabet)}]"
