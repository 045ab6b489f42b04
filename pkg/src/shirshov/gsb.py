"""Compositions, reduction and Gröbner-Shirshov basis verification in Lie(X).

Relations are monic Lie polynomials. A :class:`RelationSet` indexes them by
leading word so that reduction and the ambiguity search only look at
relations that can actually fire.
"""

from __future__ import annotations

import heapq
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import UnverifiedBasisError, ZeroPolynomialError
from .liepoly import LiePoly, Ring, _heap_key, lie_value, substitute
from .words import Alphabet, Word, deglex_key, is_alsw, special_bracketing_path

INCLUSION = "inclusion"
INTERSECTION = "intersection"


@dataclass(frozen=True, eq=False)
class Relation:
    """A monic Lie polynomial with a stable id.

    Equality and hashing are by identity, so a relation can key caches.
    """

    id: str
    poly: LiePoly
    lead: Word
    negated: bool = False
    family: str = ""
    params: tuple = ()

    def __repr__(self) -> str:
        return f"Relation({self.id!r}, lead={self.lead!r})"


def make_relation(poly: LiePoly, id: str, ring: Ring = Ring.QQ, *, family: str = "", params: tuple = ()) -> Relation:
    """Normalize ``poly`` to be monic; over ZZ only a sign flip is allowed."""
    if not poly:
        raise ZeroPolynomialError(f"relation {id} is zero")
    lc = poly.lead_coefficient
    negated = False
    if lc != 1:
        poly = poly * ring.divide(1, lc)
        negated = lc == -1
    return Relation(id, poly, poly.lead, negated, family, tuple(params))


class RelationSet:
    """Ordered collection of monic relations over one alphabet."""

    def __init__(self, relations: Iterable[Relation], alphabet: Alphabet | None = None, ring: Ring = Ring.QQ):
        self.relations = list(relations)
        self.alphabet = alphabet
        self.ring = ring
        self.by_id = {}
        self._by_lead: dict[Word, list[Relation]] = {}
        for r in self.relations:
            if r.id in self.by_id:
                raise ValueError(f"duplicate relation id {r.id!r}")
            if r.poly.lead != r.lead or r.poly.lead_coefficient != 1:
                raise ValueError(f"relation {r.id!r} is not monic")
            self.by_id[r.id] = r
            self._by_lead.setdefault(r.lead, []).append(r)
        for rels in self._by_lead.values():
            rels.sort(key=lambda r: r.id)
        self._lengths = sorted({len(w) for w in self._by_lead})
        self._prefixes: dict[Word, list[Relation]] | None = None

    def __iter__(self) -> Iterator[Relation]:
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def __getitem__(self, id: str) -> Relation:
        return self.by_id[id]

    def leads(self) -> set[Word]:
        return set(self._by_lead)

    def with_lead(self, w: Word) -> list[Relation]:
        return self._by_lead.get(tuple(w), [])

    def without(self, *ids: str) -> "RelationSet":
        return RelationSet([r for r in self.relations if r.id not in ids], self.alphabet, self.ring)

    def extended(self, extra: Iterable[Relation]) -> "RelationSet":
        return RelationSet(self.relations + list(extra), self.alphabet, self.ring)

    def occurrences(self, w: Word) -> list[tuple[Relation, int]]:
        """Every (relation, position) with the relation's leading word inside ``w``."""
        out = []
        n = len(w)
        for length in self._lengths:
            if length > n:
                break
            for pos in range(n - length + 1):
                for r in self._by_lead.get(w[pos : pos + length], ()):
                    out.append((r, pos))
        return out

    def find(self, w: Word) -> tuple[Relation, int] | None:
        """Least-id relation whose leading word occurs in ``w``; leftmost occurrence."""
        best = None
        n = len(w)
        for length in self._lengths:
            if length > n:
                break
            for pos in range(n - length + 1):
                rels = self._by_lead.get(w[pos : pos + length])
                if rels and (best is None or (rels[0].id, pos) < (best[0].id, best[1])):
                    best = (rels[0], pos)
        return best

    def with_prefix(self, p: Word) -> list[Relation]:
        """Relations whose leading word properly extends ``p``."""
        if self._prefixes is None:
            index: dict[Word, list[Relation]] = {}
            for r in self.relations:
                for i in range(1, len(r.lead)):
                    index.setdefault(r.lead[:i], []).append(r)
            self._prefixes = index
        return self._prefixes.get(tuple(p), [])


# -- special normal S-words ---------------------------------------------------

@lru_cache(maxsize=1 << 18)
def special_normal_word(rel: Relation, a: Word, b: Word) -> LiePoly:
    """``[a s b]`` relative to the leading word of ``s``, with ``s`` substituted.

    Its leading word is ``a + lead + b`` with coefficient 1.
    """
    tree, path = special_bracketing_path(a, rel.lead, b)
    if not a and not b:
        return rel.poly
    return substitute(tree, path, rel.poly)


# -- ambiguities and compositions ------------------------------------------------

@dataclass(frozen=True)
class Ambiguity:
    kind: str
    word: Word
    offset: int  # position of the second leading word inside ``word``


def find_ambiguities(f: Relation, g: Relation) -> list[Ambiguity]:
    """Inclusion ``lead(f) = a lead(g) b`` and proper intersection ``lead(f) b = a lead(g)``."""
    fl, gl = f.lead, g.lead
    out = []
    if len(gl) <= len(fl):
        for pos in range(len(fl) - len(gl) + 1):
            if fl[pos : pos + len(gl)] == gl and not (f is g and pos == 0 and len(fl) == len(gl)):
                out.append(Ambiguity(INCLUSION, fl, pos))
    # overlap: a proper suffix of lead(f) is a proper prefix of lead(g)
    for pos in range(max(1, len(fl) - len(gl) + 1), len(fl)):
        overlap = len(fl) - pos
        if fl[pos:] == gl[:overlap]:
            out.append(Ambiguity(INTERSECTION, fl + gl[overlap:], pos))
    return out


def composition(f: Relation, g: Relation, amb: Ambiguity) -> LiePoly:
    """The composition of ``f`` and ``g`` at ``amb``."""
    w = amb.word
    if amb.kind == INCLUSION:
        if w != f.lead or w[amb.offset : amb.offset + len(g.lead)] != g.lead:
            raise ValueError("ambiguity does not match the relations")
        a, b = w[: amb.offset], w[amb.offset + len(g.lead) :]
        return f.poly - special_normal_word(g, a, b)
    if amb.kind == INTERSECTION:
        if w[: len(f.lead)] != f.lead or w[amb.offset :] != g.lead or amb.offset == 0:
            raise ValueError("ambiguity does not match the relations")
        if len(f.lead) + len(g.lead) <= len(w):
            raise ValueError("intersection ambiguity must overlap")
        b = w[len(f.lead) :]
        a = w[: amb.offset]
        return special_normal_word(f, (), b) - special_normal_word(g, a, ())
    raise ValueError(f"unknown ambiguity kind {amb.kind!r}")


# -- reduction ------------------------------------------------------------------

def reduce(h: LiePoly, S: RelationSet, rng: random.Random | None = None) -> LiePoly:
    """Full normal form of ``h`` modulo ``S``.

    Deterministic strategy: repeatedly take the greatest support word that
    contains a leading word, use the least-id relation at its leftmost
    occurrence. With ``rng`` the reducible word, relation and occurrence are
    picked at random instead (used to probe confluence).
    """
    if rng is not None:
        return _reduce_random(h, S, rng)
    terms = dict(h.terms)
    heap = [_heap_key(w) + (w,) for w in terms]
    heapq.heapify(heap)
    queued = set(terms)
    result = {}
    while heap:
        t = heapq.heappop(heap)[-1]
        queued.discard(t)
        c = terms.pop(t, 0)
        if not c:
            continue
        hit = S.find(t)
        if hit is None:
            result[t] = c
            continue
        rel, pos = hit
        sub = special_normal_word(rel, t[:pos], t[pos + len(rel.lead) :])
        if sub.terms.get(t) != 1:
            raise AssertionError(f"special normal word for {rel.id} does not lead with {t!r}")
        for w, d in sub.terms.items():
            if w == t:
                continue
            val = terms.get(w, 0) - c * d
            if val:
                terms[w] = val
                if w not in queued:
                    queued.add(w)
                    heapq.heappush(heap, _heap_key(w) + (w,))
            else:
                terms.pop(w, None)
    return LiePoly._raw(result)


def _reduce_random(h: LiePoly, S: RelationSet, rng: random.Random) -> LiePoly:
    terms = dict(h.terms)
    while True:
        reducible = sorted((w for w in terms if S.find(w) is not None), key=deglex_key)
        if not reducible:
            return LiePoly._raw(terms)
        t = rng.choice(reducible)
        hits = sorted(S.occurrences(t), key=lambda rp: (rp[0].id, rp[1]))
        rel, pos = rng.choice(hits)
        c = terms[t]
        sub = special_normal_word(rel, t[:pos], t[pos + len(rel.lead) :])
        for w, d in sub.terms.items():
            val = terms.get(w, 0) - c * d
            if val:
                terms[w] = val
            else:
                terms.pop(w, None)


# -- verification ---------------------------------------------------------------

PASS, FAIL, CENSORED = "pass", "fail", "censored"


@dataclass
class CompositionRecord:
    f_id: str
    g_id: str
    kind: str
    word: Word
    offset: int
    remainder: LiePoly
    status: str
    lead_below: bool = True
    family: str = ""

    def sort_key(self):
        return (self.f_id, self.g_id, deglex_key(self.word), self.offset, self.kind)


@dataclass
class CompositionReport:
    records: list[CompositionRecord] = field(default_factory=list)
    alphabet: Alphabet | None = None

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    @property
    def failures(self) -> list[CompositionRecord]:
        return [r for r in self.records if r.status == FAIL]

    @property
    def censored(self) -> list[CompositionRecord]:
        return [r for r in self.records if r.status == CENSORED]

    def __len__(self) -> int:
        return len(self.records)

    def _word(self, w: Word) -> str:
        if self.alphabet is None:
            return ".".join(map(str, w))
        return self.alphabet.format(w)

    def lines(self) -> list[str]:
        """One tab-separated record per ambiguity: ids, kind, word, remainder size, status."""
        out = []
        for r in self.records:
            out.append(
                "\t".join(
                    [r.f_id, r.g_id, r.kind, self._word(r.word), str(len(r.remainder)), r.status.upper()]
                )
            )
        return out

    def to_records(self) -> list[dict]:
        out = []
        for r in self.records:
            rec = {
                "f": r.f_id,
                "g": r.g_id,
                "kind": r.kind,
                "word": self._word(r.word),
                "remainder_size": len(r.remainder),
                "status": r.status,
            }
            if r.family:
                rec["family"] = r.family
            if r.remainder and self.alphabet is not None:
                rec["remainder"] = r.remainder.format(self.alphabet)
            out.append(rec)
        return out


def candidate_pairs(S: RelationSet) -> list[tuple[Relation, Relation]]:
    """Ordered pairs of relations whose leading words nest or overlap."""
    pairs = {}
    for f in S:
        fl = f.lead
        for length in range(1, len(fl) + 1):
            for pos in range(len(fl) - length + 1):
                for g in S.with_lead(fl[pos : pos + length]):
                    pairs[(f.id, g.id)] = (f, g)
        for pos in range(1, len(fl)):
            for g in S.with_prefix(fl[pos:]):
                pairs[(f.id, g.id)] = (f, g)
    return [pairs[k] for k in sorted(pairs)]


def _check_pair(f: Relation, g: Relation, S: RelationSet) -> list[CompositionRecord]:
    out = []
    for amb in find_ambiguities(f, g):
        comp = composition(f, g, amb)
        lead_below = not comp or deglex_key(comp.lead) < deglex_key(amb.word)
        rem = reduce(comp, S)
        status = PASS if not rem else FAIL
        out.append(CompositionRecord(f.id, g.id, amb.kind, amb.word, amb.offset, rem, status, lead_below))
    return out


_WORKER_SET: RelationSet | None = None


def _worker_init(S: RelationSet) -> None:
    global _WORKER_SET
    _WORKER_SET = S


def _worker_run(id_pairs: list[tuple[str, str]]) -> list[CompositionRecord]:
    S = _WORKER_SET
    out = []
    for fid, gid in id_pairs:
        out.extend(_check_pair(S[fid], S[gid], S))
    return out


def check_gsb(S: RelationSet, *, parallel: bool = False, workers: int | None = None) -> CompositionReport:
    """Compute and reduce every composition of ``S``.

    The verdict passes iff every remainder is zero. Records are ordered by
    (relation ids, ambiguity word) whether or not ``parallel`` is used.
    """
    pairs = candidate_pairs(S)
    records: list[CompositionRecord] = []
    if parallel and len(pairs) > 1:
        ids = [(f.id, g.id) for f, g in pairs]
        chunk = max(1, len(ids) // (8 * (workers or 4)))
        batches = [ids[i : i + chunk] for i in range(0, len(ids), chunk)]
        with ProcessPoolExecutor(max_workers=workers, initializer=_worker_init, initargs=(S,)) as pool:
            for part in pool.map(_worker_run, batches):
                records.extend(part)
    else:
        for f, g in pairs:
            records.extend(_check_pair(f, g, S))
    records.sort(key=CompositionRecord.sort_key)
    return CompositionReport(records, S.alphabet)


def irr_enumerate(S: RelationSet, max_deg: int, q: int | None = None) -> list[Word]:
    """ALSWs of degree <= ``max_deg`` avoiding every leading word of ``S``.

    Returned in ascending deg-lex order.
    """
    if max_deg < 1:
        raise ValueError("max_deg must be at least 1")
    if q is None:
        if S.alphabet is None:
            raise ValueError("alphabet size unknown")
        q = len(S.alphabet)
    leads = S.leads()
    lengths = sorted({len(w) for w in leads})

    def clean_suffixes(w: Word) -> bool:
        # only suffixes are new when a letter is appended
        return not any(w[len(w) - k :] in leads for k in lengths if k <= len(w))

    out = []
    layer = [()]
    for _ in range(max_deg):
        layer = [w + (x,) for w in layer for x in range(q) if clean_suffixes(w + (x,))]
        out.extend(w for w in layer if is_alsw(w))
    return sorted(out, key=deglex_key)


def ideal_member(f: LiePoly, S: RelationSet, report: CompositionReport | None) -> bool:
    """Membership in the ideal generated by ``S``; needs a passing report for ``S``."""
    if report is None or not report.passed:
        raise UnverifiedBasisError("ideal membership needs a passing Gröbner-Shirshov check")
    return not reduce(f, S)


def complete(S: RelationSet, max_deg: int, max_iter: int = 10) -> tuple[RelationSet, CompositionReport]:
    """Bounded completion: add reduced nonzero compositions as new relations.

    Stops when the check passes, when ``max_iter`` rounds have run, or when no
    remainder of degree <= ``max_deg`` is left to add.
    """
    report = check_gsb(S)
    for it in range(max_iter):
        if report.passed:
            break
        new, seen = [], set()
        for k, rec in enumerate(report.failures):
            rem = reduce(rec.remainder, S.extended(new)) if new else rec.remainder
            if not rem or max(rem.degrees()) > max_deg or rem.lead in seen:
                continue
            rel = make_relation(rem, f"C{it:02d}_{k:04d}", S.ring, family="completion")
            seen.add(rel.lead)
            new.append(rel)
        if not new:
            break
        S = S.extended(new)
        report = check_gsb(S)
    return S, report


__all__ = [
    "Ambiguity",
    "CompositionRecord",
    "CompositionReport",
    "INCLUSION",
    "INTERSECTION",
    "Relation",
    "RelationSet",
    "candidate_pairs",
    "check_gsb",
    "complete",
    "composition",
    "find_ambiguities",
    "ideal_member",
    "irr_enumerate",
    "lie_value",
    "make_relation",
    "reduce",
    "special_normal_word",
]
