"""The Drinfeld-Kohno Lie algebra L_n over the integers.

Generators ``t_ij`` (``1 <= i < j <= n-1``) are ordered by first index, then
second index. The relation families carry stable ids ``DK4``, ``DK5`` and
``DK6``::

    DK4  [t_ij, t_kl]                       k < i < j, k < l, l not in {i, j}
    DK5  [t_jk, t_ij] + [t_ik, t_ij]         i < j < k
    DK6  [t_jk, t_ik] - [t_ik, t_ij]         i < j < k
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .gsb import CompositionReport, RelationSet, check_gsb, irr_enumerate, make_relation
from .liepoly import LiePoly, Ring, bracket
from .words import Alphabet, Word, is_alsw

# family labels used in the ambiguity inventory: DK4 -> (1), DK5 -> (2), DK6 -> (3)
FAMILY_LABEL = {"DK4": "1", "DK5": "2", "DK6": "3"}


def witt(q: int, d: int) -> int:
    """Dimension of the degree-``d`` part of the free Lie algebra on ``q`` generators."""
    from sympy import divisors, mobius

    if d < 1 or q < 0:
        return 0
    total = sum(int(mobius(e)) * q ** (d // e) for e in divisors(d))
    return total // d


def generator_pairs(n: int) -> list[tuple[int, int]]:
    if n <= 2:
        raise ValueError("Drinfeld-Kohno algebras need n > 2")
    return [(i, j) for i in range(1, n) for j in range(i + 1, n)]


def generator_name(i: int, j: int, n: int) -> str:
    return f"t{i}{j}" if n <= 10 else f"t{i}_{j}"


@dataclass
class DKPresentation:
    n: int
    alphabet: Alphabet
    pairs: list[tuple[int, int]]
    relations: RelationSet

    def letter(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.pairs.index((i, j))

    def indices(self, w: Word) -> list[tuple[int, int]]:
        return [self.pairs[x] for x in w]


def dk_build(n: int, ring: Ring = Ring.ZZ) -> DKPresentation:
    pairs = generator_pairs(n)
    alphabet = Alphabet(generator_name(i, j, n) for i, j in pairs)
    letter = {p: x for x, p in enumerate(pairs)}

    def t(i, j):
        return LiePoly.generator(letter[(i, j)])

    rels = []
    idx = range(1, n)
    for k, i, j, l in product(idx, repeat=4):
        if k < i < j and k < l and l not in (i, j):
            poly = bracket(t(i, j), t(k, l))
            rels.append(make_relation(poly, f"DK4:{i},{j},{k},{l}", ring, family="DK4", params=(i, j, k, l)))
    for i, j, k in product(idx, repeat=3):
        if i < j < k:
            poly = bracket(t(j, k), t(i, j)) + bracket(t(i, k), t(i, j))
            rels.append(make_relation(poly, f"DK5:{i},{j},{k}", ring, family="DK5", params=(i, j, k)))
            poly = bracket(t(j, k), t(i, k)) - bracket(t(i, k), t(i, j))
            rels.append(make_relation(poly, f"DK6:{i},{j},{k}", ring, family="DK6", params=(i, j, k)))
    return DKPresentation(n, alphabet, pairs, RelationSet(rels, alphabet, ring))


def classify(fam_f: str, fam_g: str, w: list[tuple[int, int]]) -> str | None:
    """Name the family ``(a)^(b)`` of an ambiguity ``t_.. t_.. t_..`` or return None."""
    if len(w) != 3:
        return None
    (p, q), (s, u), (m, r) = w
    a, b = FAMILY_LABEL.get(fam_f), FAMILY_LABEL.get(fam_g)
    if a == "1":
        # f = t_ij t_kl with (i, j, k, l) = (p, q, s, u)
        i, j, k, l = p, q, s, u
        base = k < i < j and k < l and l not in (i, j)
        if not base:
            return None
        if b == "1" and m < k < l and m < r and r not in (k, l):
            return "(1)^(1)"
        if b == "2" and r == k and m < k < l:
            return "(1)^(2)"
        if b == "3" and r == l and m < k < l:
            return "(1)^(3)"
        return None
    if a == "2":
        # f = t_jk t_ij
        j, k, i = p, q, s
        if u != j or not (m < i < j < k):
            return None
        if b == "1" and m < r and r not in (i, j):
            return "(2)^(1)"
        if b == "2" and r == i:
            return "(2)^(2)"
        if b == "3" and r == j:
            return "(2)^(3)"
        return None
    if a == "3":
        # f = t_jk t_ik
        j, k, i = p, q, s
        if u != k or not (m < i < j < k):
            return None
        if b == "1" and m < r and r not in (i, k):
            return "(3)^(1)"
        if b == "2" and r == i:
            return "(3)^(2)"
        if b == "3" and r == k:
            return "(3)^(3)"
        return None
    return None


def ambiguity_inventory(n: int) -> set[tuple[str, tuple]]:
    """The nine ambiguity families instantiated over all valid index tuples.

    Independent of the ambiguity search: built from index conditions only.
    Elements are ``(label, ((i, j), (k, l), (m, r)))``.
    """
    idx = range(1, n)
    out = set()
    for i, j, k, l, m, r in product(idx, repeat=6):
        if k < i < j and k < l and l not in (i, j):
            if m < k < l and m < r and r not in (k, l):
                out.add(("(1)^(1)", ((i, j), (k, l), (m, r))))
            if m < k < l:
                out.add(("(1)^(2)", ((i, j), (k, l), (m, k))))
                out.add(("(1)^(3)", ((i, j), (k, l), (m, l))))
    for i, j, k, m, r in product(idx, repeat=5):
        if m < i < j < k:
            if m < r and r not in (i, j):
                out.add(("(2)^(1)", ((j, k), (i, j), (m, r))))
            out.add(("(2)^(2)", ((j, k), (i, j), (m, i))))
            out.add(("(2)^(3)", ((j, k), (i, j), (m, j))))
            if m < r and r not in (i, k):
                out.add(("(3)^(1)", ((j, k), (i, k), (m, r))))
            out.add(("(3)^(2)", ((j, k), (i, k), (m, i))))
            out.add(("(3)^(3)", ((j, k), (i, k), (m, k))))
    return out


def label_report(dk: DKPresentation, report: CompositionReport) -> CompositionReport:
    """Attach family labels to each record; unmatched records get ``unclassified``."""
    for rec in report.records:
        fam_f = dk.relations[rec.f_id].family
        fam_g = dk.relations[rec.g_id].family
        label = classify(fam_f, fam_g, dk.indices(rec.word)) if rec.kind == "intersection" else None
        rec.family = label or "unclassified"
    return report


def dk_check(n: int, *, parallel: bool = False, relations: RelationSet | None = None) -> CompositionReport:
    """Check every composition over ZZ and label it by family.

    ``relations`` substitutes a (possibly mutated) relation set for the
    standard one; the labels still refer to the standard families.
    """
    dk = dk_build(n)
    if relations is not None:
        dk = DKPresentation(dk.n, dk.alphabet, dk.pairs, relations)
    return label_report(dk, check_gsb(dk.relations, parallel=parallel))


def stragglers(report: CompositionReport) -> list:
    return [r for r in report.records if r.family == "unclassified"]


def constant_first_index(dk: DKPresentation, w: Word) -> bool:
    return len({i for i, _ in dk.indices(w)}) == 1


def dk_basis(n: int, max_deg: int) -> list[Word]:
    """Irr words up to ``max_deg``; each is an ALSW with a constant first index."""
    dk = dk_build(n)
    words = irr_enumerate(dk.relations, max_deg)
    for w in words:
        if not (is_alsw(w) and constant_first_index(dk, w)):
            raise RuntimeError(f"basis word {dk.alphabet.format(w)} breaks the constant-first-index form")
    return words


def dk_ranks(n: int, max_deg: int) -> list[int]:
    """Number of basis words in each degree ``1..max_deg``."""
    counts = [0] * max_deg
    for w in dk_basis(n, max_deg):
        counts[len(w) - 1] += 1
    return counts


def witt_ranks(n: int, max_deg: int) -> list[int]:
    """Rank oracle: sum of free Lie algebra dimensions of the semidirect factors."""
    return [sum(witt(n - 1 - i, d) for i in range(1, n - 1)) for d in range(1, max_deg + 1)]
