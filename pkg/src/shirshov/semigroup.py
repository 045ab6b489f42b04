"""String rewriting for finitely presented semigroups.

Rules are oriented by deg-lex (longer is greater, then letter by letter).
:func:`knuth_bendix` completes a system under explicit bounds and reports
failure to finish as an incomplete system rather than silently succeeding.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product

from .errors import IncompleteSystemError
from .words import Alphabet, Word, deglex_key

Rule = tuple  # (lhs, rhs), lhs > rhs


class IncompleteSystemWarning(UserWarning):
    pass


@dataclass
class SgpPresentation:
    alphabet: Alphabet
    rules: list[tuple[Word, Word]] = field(default_factory=list)

    def __post_init__(self):
        self.rules = [(self.alphabet.check(u), self.alphabet.check(v)) for u, v in self.rules]
        for u, v in self.rules:
            if not u or not v:
                raise ValueError("semigroup relations relate nonempty words")


@dataclass
class StringRS:
    alphabet: Alphabet
    rules: list[Rule]
    complete: bool = False
    pending: list[tuple[Word, Word]] = field(default_factory=list)

    def __post_init__(self):
        for lhs, rhs in self.rules:
            if deglex_key(lhs) <= deglex_key(rhs):
                raise ValueError(f"rule {lhs!r} -> {rhs!r} does not decrease")

    def format_rules(self) -> list[str]:
        f = self.alphabet.format
        return [f"{f(l)} -> {f(r)}" for l, r in self.rules]


def _orient(u: Word, v: Word) -> Rule | None:
    if u == v:
        return None
    return (u, v) if deglex_key(u) > deglex_key(v) else (v, u)


def orient(p: SgpPresentation) -> StringRS:
    rules = []
    for u, v in p.rules:
        r = _orient(u, v)
        if r is not None and r not in rules:
            rules.append(r)
    rules.sort(key=lambda r: (deglex_key(r[0]), deglex_key(r[1])))
    pending = unresolved_pairs(rules)
    return StringRS(p.alphabet, rules, complete=not pending, pending=pending)


def rewrite(u: Word, rules: list[Rule]) -> Word:
    """Rewrite to an irreducible word, always firing the leftmost redex."""
    u = tuple(u)
    by_len = sorted(rules, key=lambda r: (len(r[0]), r[0]))
    changed = True
    while changed:
        changed = False
        for pos in range(len(u)):
            for lhs, rhs in by_len:
                if u[pos : pos + len(lhs)] == lhs:
                    u = u[:pos] + rhs + u[pos + len(lhs) :]
                    changed = True
                    break
            if changed:
                break
    return u


def sgp_normal_form(u: Word, rs: StringRS) -> Word:
    if not rs.complete:
        warnings.warn("rewriting system is not complete; result may not be canonical", IncompleteSystemWarning, stacklevel=2)
    return rewrite(u, rs.rules)


def critical_pairs(rules: list[Rule]) -> list[tuple[Word, Word, Word]]:
    """``(word, reduct1, reduct2)`` for every overlap and inclusion of left-hand sides."""
    out = []
    for i, (l1, r1) in enumerate(rules):
        for j, (l2, r2) in enumerate(rules):
            if i != j and len(l2) <= len(l1):
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos : pos + len(l2)] == l2:
                        out.append((l1, r1, l1[:pos] + r2 + l1[pos + len(l2) :]))
            for k in range(1, min(len(l1), len(l2))):
                # suffix of l1 of length k equals prefix of l2
                if l1[-k:] == l2[:k]:
                    w = l1 + l2[k:]
                    out.append((w, r1 + l2[k:], l1[:-k] + r2))
    return out


def unresolved_pairs(rules: list[Rule]) -> list[tuple[Word, Word]]:
    """Critical pairs whose two reducts rewrite to different normal forms."""
    out = []
    for _, a, b in critical_pairs(rules):
        na, nb = rewrite(a, rules), rewrite(b, rules)
        if na != nb:
            out.append((na, nb))
    return out


def _interreduce(rules: list[Rule]) -> list[Rule]:
    """Drop rules made redundant by others and normalize both sides."""
    rules = list(dict.fromkeys(rules))
    changed = True
    while changed:
        changed = False
        for idx, (lhs, rhs) in enumerate(rules):
            others = rules[:idx] + rules[idx + 1 :]
            new_lhs, new_rhs = rewrite(lhs, others), rewrite(rhs, others)
            if (new_lhs, new_rhs) != (lhs, rhs):
                rules = others
                r = _orient(new_lhs, new_rhs)
                if r is not None and r not in rules:
                    rules.append(r)
                changed = True
                break
    return sorted(rules, key=lambda r: (deglex_key(r[0]), deglex_key(r[1])))


def knuth_bendix(rs: StringRS, max_len: int = 20, max_iter: int = 50) -> StringRS:
    """Critical-pair completion under deg-lex.

    Returns a system flagged ``complete`` or, when a bound is hit, an
    incomplete one whose ``pending`` lists the unresolved critical pairs.
    """
    if max_len < 1 or max_iter < 1:
        raise ValueError("bounds must be positive")
    rules = _interreduce(rs.rules)
    for _ in range(max_iter):
        pending = unresolved_pairs(rules)
        if not pending:
            return StringRS(rs.alphabet, rules, complete=True)
        new = []
        for a, b in pending:
            r = _orient(a, b)
            if r is not None and r not in new:
                new.append(r)
        if any(len(l) > max_len for l, _ in new):
            return StringRS(rs.alphabet, rules, complete=False, pending=pending)
        rules = _interreduce(rules + new)
    pending = unresolved_pairs(rules)
    return StringRS(rs.alphabet, rules, complete=not pending, pending=pending)


def words_up_to(q: int, max_len: int):
    for length in range(1, max_len + 1):
        for w in product(range(q), repeat=length):
            yield tuple(w)


def congruence_pairs(rs: StringRS, max_len: int) -> list[tuple[Word, Word]]:
    """All ``(u, v)`` with ``u > v``, both of length <= ``max_len``, in one congruence class.

    Pairs are sorted by ``u`` then ``v`` ascending in deg-lex.
    """
    if not rs.complete:
        raise IncompleteSystemError("congruence pairs need a complete rewriting system")
    classes: dict[Word, list[Word]] = {}
    for w in words_up_to(len(rs.alphabet), max_len):
        classes.setdefault(rewrite(w, rs.rules), []).append(w)
    pairs = []
    for members in classes.values():
        members.sort(key=deglex_key)
        for hi in range(len(members)):
            for lo in range(hi):
                pairs.append((members[hi], members[lo]))
    pairs.sort(key=lambda p: (deglex_key(p[0]), deglex_key(p[1])))
    return pairs


def sgp_equal(u: Word, v: Word, rs: StringRS) -> bool:
    if not rs.complete:
        raise IncompleteSystemError("equality needs a complete rewriting system")
    return rewrite(u, rs.rules) == rewrite(v, rs.rules)
