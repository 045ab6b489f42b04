"""Kukin's Lie algebra attached to a semigroup presentation.

For a semigroup alphabet ``A`` the Lie alphabet is ``A``, a new letter ``z``
and a hatted copy ``^a`` of each ``a``, ordered

    unhatted letters  <  z  <  hatted letters

with both copies of ``A`` keeping the semigroup order. The relation set S1:

    K1  [^a, b]                 for all a, b in A
    K2  [^a, z] + [z, a]        for all a in A
    K3  (z; u) - (z; v)         for (u, v) congruent, u > v, |u| <= bound

where ``(z; u)`` is the left-normed bracket. Two semigroup words are equal
iff their left-normed brackets with ``z`` have the same normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundExceededError, IncompleteSystemError
from .gsb import (
    CENSORED,
    FAIL,
    INCLUSION,
    INTERSECTION,
    CompositionReport,
    RelationSet,
    check_gsb,
    make_relation,
    reduce,
)
from .liepoly import LiePoly, Ring, bracket
from .semigroup import SgpPresentation, StringRS, congruence_pairs, knuth_bendix, orient, rewrite
from .words import Alphabet, Word

DEFAULT_BOUND = 8


@dataclass
class KukinContext:
    """Semigroup data plus the ordered Lie alphabet and the (3)' degree bound."""

    rs: StringRS
    bound: int = DEFAULT_BOUND
    z_name: str = "z"
    alphabet: Alphabet = field(init=False)
    _nested: dict = field(default_factory=dict, init=False, repr=False)
    _s1: RelationSet | None = field(default=None, init=False, repr=False)
    _nf: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if not self.rs.complete:
            raise IncompleteSystemError("the Kukin construction needs a complete rewriting system")
        if self.bound < 1:
            raise ValueError("bound must be positive")
        base = self.rs.alphabet.letters
        if self.z_name in base:
            raise ValueError(f"letter {self.z_name!r} clashes with the semigroup alphabet")
        self.alphabet = Alphabet(list(base) + [self.z_name] + ["^" + a for a in base])

    @classmethod
    def from_presentation(cls, p: SgpPresentation, bound: int = DEFAULT_BOUND, *, max_len: int = 20, max_iter: int = 50):
        rs = knuth_bendix(orient(p), max_len=max_len, max_iter=max_iter)
        if not rs.complete:
            raise IncompleteSystemError("Knuth-Bendix completion did not finish within its bounds")
        return cls(rs, bound)

    @property
    def base_size(self) -> int:
        return len(self.rs.alphabet)

    @property
    def z(self) -> int:
        return self.base_size

    def hat(self, a: int) -> int:
        return self.base_size + 1 + a

    def left_normed(self, u: Word) -> LiePoly:
        """``(z; u)``, memoized on prefixes."""
        u = tuple(u)
        f = self._nested.get(u)
        if f is None:
            if not u:
                f = LiePoly.generator(self.z)
            else:
                f = bracket(self.left_normed(u[:-1]), LiePoly.generator(u[-1]))
            self._nested[u] = f
        return f

    def s1(self) -> RelationSet:
        if self._s1 is None:
            self._s1 = build_s1(self)
        return self._s1

    def check_word(self, u: Word) -> Word:
        u = tuple(u)
        if any(not 0 <= x < self.base_size for x in u):
            raise ValueError("word must use only unhatted semigroup letters")
        if len(u) > self.bound:
            raise BoundExceededError(f"word length {len(u)} exceeds the bound {self.bound}")
        return u

    def normal_form(self, u: Word) -> LiePoly:
        """Normal form of ``(z; u)`` modulo S1."""
        u = self.check_word(u)
        nf = self._nf.get(u)
        if nf is None:
            nf = self._nf[u] = reduce(self.left_normed(u), self.s1())
        return nf


def build_s1(ctx: KukinContext) -> RelationSet:
    rels = []
    m = ctx.base_size
    ring = Ring.QQ
    name = ctx.alphabet.name
    for a in range(m):
        for b in range(m):
            poly = bracket(LiePoly.generator(ctx.hat(a)), LiePoly.generator(b))
            rels.append(make_relation(poly, f"K1:{name(ctx.hat(a))},{name(b)}", ring, family="K1", params=(a, b)))
    for a in range(m):
        poly = bracket(LiePoly.generator(ctx.hat(a)), LiePoly.generator(ctx.z)) + bracket(
            LiePoly.generator(ctx.z), LiePoly.generator(a)
        )
        rels.append(make_relation(poly, f"K2:{name(a)}", ring, family="K2", params=(a,)))
    # for a fixed u, the least id pairs u with its semigroup normal form
    rank: dict[Word, int] = {}
    for u, v in congruence_pairs(ctx.rs, ctx.bound):
        k = rank.get(u, 0)
        rank[u] = k + 1
        poly = ctx.left_normed(u) - ctx.left_normed(v)
        ident = f"K3:{_word_id(ctx, u)}:{k:05d}"
        rels.append(make_relation(poly, ident, ring, family="K3", params=(u, v)))
    return RelationSet(rels, ctx.alphabet, ring)


def _word_id(ctx: KukinContext, u: Word) -> str:
    return ".".join(ctx.alphabet.name(x) for x in u)


def s1_family(kind: str, fam_f: str, fam_g: str) -> str | None:
    if kind == INTERSECTION and fam_f == "K2" and fam_g == "K3":
        return "(2)^(3)'"
    if kind == INCLUSION and fam_f == "K3" and fam_g == "K3":
        return "(3)'^(3)'"
    return None


def verify_s1(ctx: KukinContext, *, parallel: bool = False) -> CompositionReport:
    """Check all compositions of the truncated S1.

    A nonzero remainder that keeps a word of degree above the largest (3)'
    leading word is marked ``censored``: clearing it would need (3)'
    instances beyond the bound. Records get family labels; unexpected pairings are labelled
    ``unclassified``.
    """
    S = ctx.s1()
    report = check_gsb(S, parallel=parallel)
    limit = ctx.bound + 1
    for rec in report.records:
        label = s1_family(rec.kind, S[rec.f_id].family, S[rec.g_id].family)
        rec.family = label or "unclassified"
        if rec.status == FAIL and max(rec.remainder.degrees()) > limit:
            rec.status = CENSORED
    return report


def lie_word_equal(u: Word, v: Word, ctx: KukinContext) -> bool:
    """Decide ``(z; u) = (z; v)`` in the Kukin algebra by comparing normal forms."""
    return ctx.normal_form(u) == ctx.normal_form(v)


def semigroup_normal_form(u: Word, ctx: KukinContext) -> Word:
    return rewrite(u, ctx.rs.rules)
