"""Independent reference computations used by the tests.

Nothing here calls into the engine's combinatorics: rotations, necklaces,
factorizations, Witt numbers and congruence closures are all recomputed by
brute force.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def words(q: int, d: int):
    return [tuple(w) for w in product(range(q), repeat=d)]


def lex_greater(u, v) -> bool:
    """Letterwise comparison; a proper prefix beats its extensions."""
    for a, b in zip(u, v):
        if a != b:
            return a > b
    return len(u) < len(v)


def brute_is_alsw(w) -> bool:
    rotations = [w[i:] + w[:i] for i in range(1, len(w))]
    return all(w > r for r in rotations)


def necklace_count(q: int, d: int) -> int:
    """Number of primitive necklaces: rotation classes of size exactly ``d``."""
    classes = set()
    for w in words(q, d):
        rots = {w[i:] + w[:i] for i in range(d)}
        if len(rots) == d:
            classes.add(max(rots))
    return len(classes)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_number(q: int, d: int) -> int:
    total = sum(_mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


def all_alsw_factorizations(w):
    """Every split of ``w`` into ALSW factors, nondecreasing in lex order."""
    if not w:
        return [[]]
    out = []
    for k in range(1, len(w) + 1):
        head = w[:k]
        if not brute_is_alsw(head):
            continue
        for rest in all_alsw_factorizations(w[k:]):
            if not rest or not lex_greater(head, rest[0]):
                out.append([head] + rest)
    return out


def assoc_expand(tree):
    """Expand a bracket tree (``Leaf``/``Node`` tuples) into ``{word: coeff}``."""
    if len(tree) == 1:
        return {(tree[0],): 1}
    p, q = assoc_expand(tree[0]), assoc_expand(tree[1])
    out: dict = {}
    for (u, a), (v, b) in product(p.items(), q.items()):
        out[u + v] = out.get(u + v, 0) + a * b
        out[v + u] = out.get(v + u, 0) - a * b
    return {w: c for w, c in out.items() if c}


def deglex_max(p):
    return max(p, key=lambda w: (len(w), w))


def exact_rank(rows: list[dict]) -> int:
    """Rank over QQ of sparse rows, by sympy's exact DomainMatrix."""
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    columns = sorted({w for r in rows for w in r})
    if not rows or not columns:
        return 0
    index = {w: k for k, w in enumerate(columns)}
    dense = [[QQ(0)] * len(columns) for _ in rows]
    for i, r in enumerate(rows):
        for w, c in r.items():
            c = Fraction(c)
            dense[i][index[w]] = QQ(c.numerator, c.denominator)
    return DomainMatrix(dense, (len(rows), len(columns)), QQ).rank()


def congruence_classes(q: int, rules, max_len: int):
    """Union-find closure of single-step replacements among words of length <= ``max_len``."""
    universe = [w for d in range(1, max_len + 1) for w in words(q, d)]
    parent = {w: w for w in universe}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in universe:
        for lhs, rhs in rules:
            for l, r in ((lhs, rhs), (rhs, lhs)):
                for i in range(len(w) - len(l) + 1):
                    if w[i : i + len(l)] == l:
                        t = w[:i] + r + w[i + len(l) :]
                        if t in parent:
                            parent[find(w)] = find(t)
    return find
