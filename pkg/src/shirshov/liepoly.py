"""Lie polynomials in the NLSW basis, embedded in the free associative algebra.

A :class:`LiePoly` stores coordinates in the basis of non-associative
Lyndon-Shirshov words, keyed by the carrier ALSW. Brackets are computed by
expanding into the associative algebra (``[u, v] = uv - vu``) and contracting
back with :func:`lie_from_assoc`.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; arithmetic is
exact. :class:`Ring` only matters where a division would be needed.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import NonUnitError, NotLieError, ZeroPolynomialError
from .words import (
    Alphabet,
    BracketTree,
    Leaf,
    Node,
    Word,
    carrier,
    deglex_key,
    format_tree,
    is_alsw,
    is_nlsw,
    standard_bracketing,
    subtree_at,
)

AssocPoly = dict  # Word -> coefficient, no zero entries


class Ring(Enum):
    ZZ = "ZZ"
    QQ = "QQ"

    def coerce(self, c):
        if self is Ring.ZZ:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise NonUnitError(f"{c} is not an integer")
                return c.numerator
            return int(c)
        return Fraction(c)

    def divide(self, c, d):
        """Exact ``c / d``; over ZZ only units (+1, -1) may divide."""
        if d == 0:
            raise ZeroDivisionError("division by zero coefficient")
        if self is Ring.ZZ:
            if d not in (1, -1):
                raise NonUnitError(f"non-unit leading coefficient {d}")
            return c * int(d)
        return Fraction(c) / d


def _heap_key(w: Word):
    # min-heap order == descending deg-lex
    return (-len(w), tuple(-x for x in w))


class LiePoly:
    """Finitely supported map ALSW -> coefficient; treat as immutable."""

    __slots__ = ("terms", "_lead")

    def __init__(self, terms: Mapping[Word, object] | Iterable = (), *, check: bool = True):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for w, c in items:
            w = tuple(w)
            if c == 0:
                continue
            if check and not is_alsw(w):
                raise NotLieError(f"{w!r} is not an ALSW, so not an NLSW coordinate")
            clean[w] = clean.get(w, 0) + c
            if clean[w] == 0:
                del clean[w]
        self.terms = clean
        self._lead = None

    @classmethod
    def _raw(cls, terms: dict) -> "LiePoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._lead = None
        return p

    @classmethod
    def basis(cls, w: Word, coeff=1) -> "LiePoly":
        return cls({tuple(w): coeff})

    @classmethod
    def generator(cls, x: int) -> "LiePoly":
        return cls._raw({(x,): 1})

    @classmethod
    def zero(cls) -> "LiePoly":
        return cls._raw({})

    # -- inspection -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LiePoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"LiePoly({self.terms!r})"

    def items(self):
        return self.terms.items()

    def coefficient(self, w: Word):
        return self.terms.get(tuple(w), 0)

    @property
    def lead(self) -> Word:
        """Deg-lex greatest support word (the leading word of the expansion)."""
        if self._lead is None:
            if not self.terms:
                raise ZeroPolynomialError("the zero polynomial has no leading word")
            self._lead = max(self.terms, key=deglex_key)
        return self._lead

    @property
    def lead_coefficient(self):
        return self.terms[self.lead]

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def letters(self) -> set[int]:
        return {x for w in self.terms for x in w}

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "LiePoly") -> "LiePoly":
        out = dict(self.terms)
        _axpy(out, 1, other.terms)
        return LiePoly._raw(out)

    def __sub__(self, other: "LiePoly") -> "LiePoly":
        out = dict(self.terms)
        _axpy(out, -1, other.terms)
        return LiePoly._raw(out)

    def __neg__(self) -> "LiePoly":
        return LiePoly._raw({w: -c for w, c in self.terms.items()})

    def __mul__(self, scalar) -> "LiePoly":
        if isinstance(scalar, LiePoly):
            return NotImplemented
        if scalar == 0:
            return LiePoly.zero()
        return LiePoly._raw({w: c * scalar for w, c in self.terms.items()})

    __rmul__ = __mul__

    def format(self, alphabet: Alphabet) -> str:
        """Human-readable sum of NLSWs, greatest word first."""
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=deglex_key, reverse=True):
            c = self.terms[w]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = format_tree(standard_bracketing(w), alphabet)
            text = body if mag == 1 else f"{mag} {body}"
            if not parts:
                parts.append(text if sign == "+" else f"- {text}")
            else:
                parts.append(f"{sign} {text}")
        return " ".join(parts)


def _axpy(target: dict, scale, source: Mapping) -> None:
    """``target += scale * source`` in place, dropping zeros."""
    for w, c in source.items():
        v = target.get(w, 0) + scale * c
        if v:
            target[w] = v
        else:
            target.pop(w, None)


# -- associative side ------------------------------------------------------

def expand(t: BracketTree) -> AssocPoly:
    """Associative expansion of a bracket tree."""
    if isinstance(t, Leaf):
        return {(t.letter,): 1}
    return _commutator(expand(t.left), expand(t.right))


def _commutator(p: Mapping, q: Mapping) -> AssocPoly:
    out: dict = defaultdict(int)
    for u, a in p.items():
        for v, b in q.items():
            ab = a * b
            out[u + v] += ab
            out[v + u] -= ab
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _nlsw_expansion(w: Word) -> tuple:
    return tuple(expand(standard_bracketing(w)).items())


def nlsw_expansion(w: Word) -> AssocPoly:
    return dict(_nlsw_expansion(tuple(w)))


def expand_lie(f: LiePoly) -> AssocPoly:
    """Linear extension of :func:`expand` over the NLSW support of ``f``."""
    out: dict = {}
    for w, c in f.terms.items():
        _axpy(out, c, dict(_nlsw_expansion(w)))
    return out


def lie_from_assoc(p: Mapping) -> LiePoly:
    """NLSW coordinates of an associative polynomial that lies in Lie(X).

    Repeatedly takes the leading word, which must be an ALSW, and subtracts
    the matching multiple of the expansion of its NLSW.
    """
    rest = {w: c for w, c in p.items() if c}
    heap = [_heap_key(w) + (w,) for w in rest]
    heapq.heapify(heap)
    queued = set(rest)
    out = {}
    while heap:
        w = heapq.heappop(heap)[-1]
        queued.discard(w)
        c = rest.pop(w, 0)
        if not c:
            continue
        if not is_alsw(w):
            raise NotLieError(f"leading word {w!r} is not an ALSW: input is not a Lie element")
        # an NLSW expands with leading coefficient +1, so no division occurs
        out[w] = c
        for v, d in _nlsw_expansion(w):
            if v == w:
                continue
            val = rest.get(v, 0) - c * d
            if val:
                rest[v] = val
                if v not in queued:
                    queued.add(v)
                    heapq.heappush(heap, _heap_key(v) + (v,))
            else:
                rest.pop(v, None)
    return LiePoly._raw(out)


# -- brackets --------------------------------------------------------------

@lru_cache(maxsize=500_000)
def _bracket_basis(u: Word, v: Word) -> tuple:
    """``[[u], [v]]`` in NLSW coordinates, as a tuple of items."""
    if u == v:
        return ()
    if u < v if len(u) == len(v) else len(u) < len(v):
        return tuple((w, -c) for w, c in _bracket_basis(v, u))
    tree = Node(standard_bracketing(u), standard_bracketing(v))
    if is_nlsw(tree):
        return ((u + v, 1),)
    prod = _commutator(dict(_nlsw_expansion(u)), dict(_nlsw_expansion(v)))
    return tuple(lie_from_assoc(prod).terms.items())


def bracket(f: LiePoly, g: LiePoly) -> LiePoly:
    """Lie bracket; bilinear extension of the bracket of NLSW basis elements."""
    out: dict = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            _axpy(out, a * b, dict(_bracket_basis(u, v)))
    return LiePoly._raw(out)


def left_normed(z: int, u: Sequence[int]) -> LiePoly:
    """``[...[[z, x1], x2], ..., xm]`` for ``u = x1 ... xm``."""
    f = LiePoly.generator(z)
    for x in u:
        f = bracket(f, LiePoly.generator(x))
    return f


def lie_value(t: BracketTree) -> LiePoly:
    """The Lie element denoted by an arbitrary bracket tree."""
    if isinstance(t, Leaf):
        return LiePoly.generator(t.letter)
    w = carrier(t)
    if is_alsw(w) and standard_bracketing(w) == t:
        return LiePoly._raw({w: 1})
    return bracket(lie_value(t.left), lie_value(t.right))


def substitute(tree: BracketTree, path: Sequence[int], poly: LiePoly) -> LiePoly:
    """Value of ``tree`` with the subtree at ``path`` replaced by ``poly``."""
    if not path:
        return poly
    if path[0] == 0:
        return bracket(substitute(tree.left, path[1:], poly), lie_value(tree.right))
    return bracket(lie_value(tree.left), substitute(tree.right, path[1:], poly))


def leading_word(p: Mapping) -> Word:
    if not p:
        raise ZeroPolynomialError("the zero polynomial has no leading word")
    return max(p, key=deglex_key)


__all__ = [
    "AssocPoly",
    "LiePoly",
    "Ring",
    "bracket",
    "expand",
    "expand_lie",
    "left_normed",
    "lie_from_assoc",
    "lie_value",
    "leading_word",
    "nlsw_expansion",
    "substitute",
    "subtree_at",
]
