"""
Permutations of {1, ..., n} in one-line notation, classical pattern
containment, and the symmetry operations on patterns and pattern sets.

A permutation is a plain tuple of 1-based values, e.g. ``(4, 5, 2, 1, 3)``
for the one-line word 45213.  The empty tuple is the empty permutation and
is the two-sided identity of the direct sum.  A classical pattern is just a
(short) permutation; a pattern set is a frozenset of them.

Text notation: plain digit strings for length <= 9 ("45213"),
comma-separated values otherwise ("10,3,1,2,4,5,6,7,8,9").  Pattern sets
are written with braces, "{12345,12354}"; the braces may be omitted.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
PatternSet = frozenset[Perm]


def make_perm(values: Iterable[int]) -> Perm:
    """
    Validate and return a permutation tuple.

    >>> make_perm([4, 5, 2, 1, 3])
    (4, 5, 2, 1, 3)
    >>> make_perm([])
    ()
    >>> make_perm([1, 1, 2])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 2)
    """
    w = tuple(values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_perm(text: str) -> Perm:
    """
    Parse one-line notation: "45213" or "10,3,1,2,4,5,6,7,8,9".

    >>> parse_perm("45213")
    (4, 5, 2, 1, 3)
    >>> parse_perm("10,3,1,2,4,5,6,7,8,9")[:3]
    (10, 3, 1)
    >>> parse_perm("")
    ()
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        values = [int(tok) for tok in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation notation: {text!r}")
        values = [int(ch) for ch in text]
    return make_perm(values)


def format_perm(w: Perm) -> str:
    """
    One-line notation: digits for n <= 9, comma-separated otherwise.

    >>> format_perm((4, 5, 2, 1, 3))
    '45213'
    >>> format_perm(tuple(range(1, 11)))
    '1,2,3,4,5,6,7,8,9,10'
    """
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of {1..n} in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def reverse(w: Perm) -> Perm:
    """
    >>> reverse((4, 5, 1, 2, 3))
    (3, 2, 1, 5, 4)
    """
    return w[::-1]


def complement(w: Perm) -> Perm:
    """
    >>> complement((4, 5, 1, 2, 3))
    (2, 1, 5, 4, 3)
    """
    n = len(w)
    return tuple(n + 1 - v for v in w)


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((4, 5, 1, 2, 3))
    (3, 4, 5, 1, 2)
    >>> inverse(()) == ()
    True
    """
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


_SYMMETRY_OPS = {"r": reverse, "c": complement, "i": inverse}


def apply_ops(w: Perm, ops: str) -> Perm:
    """
    Apply a word in {r, c, i} left to right: apply_ops(w, "rc") == complement(reverse(w)).

    >>> apply_ops((1, 2, 3, 5, 4), "rc")
    (2, 1, 3, 4, 5)
    """
    for op in ops:
        try:
            w = _SYMMETRY_OPS[op](w)
        except KeyError:
            raise ValueError(f"unknown symmetry op {op!r} (expected r, c or i)") from None
    return w


def direct_sum(a: Perm, b: Perm) -> Perm:
    """
    Concatenate with the second block shifted above the first.

    >>> format_perm(direct_sum(parse_perm("13425"), parse_perm("2431")))
    '134257986'
    >>> direct_sum((), (2, 1))
    (2, 1)
    """
    m = len(a)
    return a + tuple(v + m for v in b)


# ---------------------------------------------------------------------------
# pattern sets

def make_pattern_set(patterns: Iterable[Sequence[int]]) -> PatternSet:
    return frozenset(make_perm(p) for p in patterns)


def parse_pattern_set(text: str) -> PatternSet:
    """
    Parse "{12345,12354}" (braces optional).  Each member uses digit
    notation, so members are limited to length <= 9.

    >>> sorted(parse_pattern_set("{312,321,231}"))
    [(2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    if not text:
        raise ValueError("empty pattern set")
    return frozenset(parse_perm(tok.strip()) for tok in text.split(","))


def format_pattern_set(patterns: PatternSet) -> str:
    """
    >>> format_pattern_set(frozenset({(1, 2), (2, 1)}))
    '{12,21}'
    """
    return "{" + ",".join(format_perm(p) for p in sorted(patterns)) + "}"


def set_reverse(patterns: PatternSet) -> PatternSet:
    return frozenset(reverse(p) for p in patterns)


def set_complement(patterns: PatternSet) -> PatternSet:
    return frozenset(complement(p) for p in patterns)


def set_inverse(patterns: PatternSet) -> PatternSet:
    return frozenset(inverse(p) for p in patterns)


def set_apply_ops(patterns: PatternSet, ops: str) -> PatternSet:
    return frozenset(apply_ops(p, ops) for p in patterns)


def set_direct_sum(left: Iterable[Perm], right: Iterable[Perm]) -> PatternSet:
    """
    Elementwise direct sum {a + b : a in left, b in right}.

    >>> format_pattern_set(set_direct_sum({(1, 2, 3), (2, 1, 3)}, {(1, 2)}))
    '{12345,21345}'
    """
    return frozenset(direct_sum(a, b) for a in left for b in right)


# ---------------------------------------------------------------------------
# occurrence search
#
# Occurrences are found by a depth-first walk over index tuples with
# pruning: thanks to order-isomorphism, the candidate value at pattern
# position j is constrained only by the values chosen for the pattern's
# nearest smaller and nearest larger entries among positions < j.

@lru_cache(maxsize=None)
def _tight_refs(p: Perm) -> tuple[tuple[int, int], ...]:
    refs = []
    for j, pj in enumerate(p):
        lo = hi = -1
        for a in range(j):
            if p[a] < pj and (lo < 0 or p[a] > p[lo]):
                lo = a
            elif p[a] > pj and (hi < 0 or p[a] < p[hi]):
                hi = a
        refs.append((lo, hi))
    return tuple(refs)


def contains(p: Perm, w: Perm, *, through: int | None = None) -> bool:
    """
    Does the pattern p occur in w?  With ``through`` set (1-based), only
    occurrences using that index of w are considered.

    >>> contains((1, 2, 3), (3, 1, 4, 2, 5))
    True
    >>> contains((1, 2), (1,))
    False
    >>> contains((2, 1), (1, 3, 2), through=1)
    False
    """
    k, n = len(p), len(w)
    if k == 0:
        return True
    if k > n:
        return False
    anchor = -1
    if through is not None:
        if not 1 <= through <= n:
            raise ValueError(f"index {through} out of range 1..{n}")
        anchor = through - 1
    refs = _tight_refs(p)
    chosen = [0] * k

    def walk(j: int, start: int, used: bool) -> bool:
        if j == k:
            return used
        if not used and anchor < start:
            return False
        lo, hi = refs[j]
        lov = chosen[lo] if lo >= 0 else 0
        hiv = chosen[hi] if hi >= 0 else n + 1
        for i in range(start, n - (k - j - 1)):
            if not used and i > anchor:
                break
            v = w[i]
            if lov < v < hiv:
                chosen[j] = v
                if walk(j + 1, i + 1, used or i == anchor):
                    return True
        return False

    return walk(0, 0, anchor < 0)


def occurrences(p: Perm, w: Perm) -> Iterator[tuple[int, ...]]:
    """
    Yield 1-based index tuples of all occurrences of p in w, in
    lexicographic order.

    >>> list(occurrences((1, 2, 3), (3, 1, 4, 2, 5)))
    [(1, 3, 5), (2, 3, 5), (2, 4, 5)]
    """
    k, n = len(p), len(w)
    if k == 0:
        yield ()
        return
    if k > n:
        return
    refs = _tight_refs(p)
    idxs = [0] * k
    chosen = [0] * k

    def walk(j: int, start: int) -> Iterator[tuple[int, ...]]:
        if j == k:
            yield tuple(i + 1 for i in idxs)
            return
        lo, hi = refs[j]
        lov = chosen[lo] if lo >= 0 else 0
        hiv = chosen[hi] if hi >= 0 else n + 1
        for i in range(start, n - (k - j - 1)):
            v = w[i]
            if lov < v < hiv:
                idxs[j] = i
                chosen[j] = v
                yield from walk(j + 1, i + 1)

    yield from walk(0, 0)


def pattern_occurrences(p: Perm, w: Perm) -> int:
    """
    Number of occurrences of the classical pattern p in w.

    >>> pattern_occurrences((1, 2, 3), (3, 1, 4, 2, 5))
    3
    >>> pattern_occurrences((1, 2), (1,))
    0
    """
    return sum(1 for _ in occurrences(p, w))


def avoids_all(patterns: Iterable[Perm], w: Perm) -> bool:
    """
    True iff no pattern in the set occurs in w.

    >>> avoids_all({(1, 2, 3, 4, 5), (1, 2, 3, 5, 4)}, (4, 3, 2, 1))
    True
    >>> avoids_all({(1, 2, 3, 4, 5), (1, 2, 3, 5, 4)}, (1, 2, 3, 4, 5))
    False
    """
    return not any(contains(p, w) for p in patterns)
