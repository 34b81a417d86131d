"""
Counting engines and reports for Wilf- and shape-Wilf-equivalence.

Two pattern sets are Wilf-equivalent when they have the same number of
avoiders in S_n for every n, and shape-Wilf-equivalent when they have the
same number of avoiding fillings on every Ferrers board; the second
implies the first (the full square is a board).

Avoiders are counted with an extension tree: every avoider of length n
arises uniquely by inserting the new maximum value into a gap of an
avoider of length n-1 (deleting the maximum preserves avoidance), so only
occurrences through the new maximum need testing.  All counts are exact
Python integers, so there is no overflow to detect.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .perms import (
    PatternSet,
    Perm,
    all_perms,
    avoids_all,
    contains,
    format_pattern_set,
    parse_perm,
    set_apply_ops,
    set_complement,
    set_direct_sum,
    set_inverse,
    set_reverse,
)
from .boards import Board, count_fillings, enumerate_boards


@dataclass(frozen=True)
class CountSequence:
    """Counts of avoiders of one pattern set, indexed by n starting at 1."""

    patterns: PatternSet
    terms: tuple[int, ...]


@dataclass
class WilfRow:
    n: int
    left_count: int
    right_count: int

    @property
    def equal(self) -> bool:
        return self.left_count == self.right_count


@dataclass
class ShapeWilfRow:
    n: int
    board: Board
    left_count: int
    right_count: int

    @property
    def equal(self) -> bool:
        return self.left_count == self.right_count


@dataclass
class EquivalenceReport:
    kind: str  # "wilf" | "shape-wilf"
    left: PatternSet
    right: PatternSet
    n_max: int
    rows: list = field(default_factory=list)
    verdict: str = "equal-up-to-n_max"
    first_divergence: Optional[object] = None  # n, or (n, board)

    @property
    def equal(self) -> bool:
        return self.verdict == "equal-up-to-n_max"

    def describe(self) -> str:
        lhs, rhs = format_pattern_set(self.left), format_pattern_set(self.right)
        if self.equal:
            return f"{lhs} vs {rhs}: equal up to n={self.n_max} ({self.kind})"
        return f"{lhs} vs {rhs}: diverges at {self.first_divergence} ({self.kind})"


# ---------------------------------------------------------------------------
# avoider generation

def _insertions(w: Perm, patterns: Iterable[Perm]) -> Iterator[Perm]:
    """Avoiding children of w: insert the new maximum into every gap."""
    n = len(w) + 1
    for gap in range(n):
        child = w[:gap] + (n,) + w[gap:]
        if not any(contains(p, child, through=gap + 1) for p in patterns):
            yield child


def avoiders(patterns: Iterable[Perm], n: int) -> list[Perm]:
    """
    All permutations of length n avoiding every given pattern, by
    breadth-first extension-tree generation.

    >>> sorted(avoiders({(1, 2, 3)}, 3))
    [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    patterns = sorted(set(patterns))
    if n < 0:
        raise ValueError("n must be >= 0")
    frontier: list[Perm] = [()]
    for _ in range(n):
        frontier = [c for w in frontier for c in _insertions(w, patterns)]
    return frontier


def avoider_counts(patterns: Iterable[Perm], n_max: int) -> list[int]:
    """
    Counts of avoiders for n = 1..n_max (breadth-first; the whole frontier
    is kept, which is fine for the desk scales this library targets).

    >>> avoider_counts({(1, 2, 3, 4, 5), (1, 2, 3, 5, 4)}, 5)
    [1, 2, 6, 24, 118]
    """
    patterns = sorted(set(patterns))
    counts = []
    frontier: list[Perm] = [()]
    for _ in range(n_max):
        frontier = [c for w in frontier for c in _insertions(w, patterns)]
        counts.append(len(frontier))
    return counts


def _count_dfs(patterns: list[Perm], w: Perm, remaining: int) -> int:
    if remaining == 0:
        return 1
    return sum(
        _count_dfs(patterns, child, remaining - 1)
        for child in _insertions(w, patterns)
    )


def count_avoiders(patterns: Iterable[Perm], n: int, *, method: str = "auto") -> int:
    """
    Number of permutations of length n avoiding every given pattern.

    ``method`` is "bfs" (keeps the frontier), "dfs" (streams, constant
    memory) or "auto" (bfs up to n=10, dfs above).

    >>> count_avoiders({(1, 2, 3, 4, 5), (1, 2, 3, 5, 4)}, 4)
    24
    >>> count_avoiders({(1, 2)}, 3)
    1
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if method == "auto":
        method = "bfs" if n <= 10 else "dfs"
    if method == "bfs":
        return avoider_counts(patterns, n)[-1] if n else 1
    if method == "dfs":
        return _count_dfs(sorted(set(patterns)), (), n)
    raise ValueError(f"unknown method {method!r}")


def count_avoiders_naive(patterns: Iterable[Perm], n: int) -> int:
    """Independent oracle: filter all of S_n by direct containment tests."""
    patterns = sorted(set(patterns))
    return sum(1 for w in all_perms(n) if avoids_all(patterns, w))


def count_sequence(patterns: PatternSet, n_max: int) -> CountSequence:
    return CountSequence(frozenset(patterns), tuple(avoider_counts(patterns, n_max)))


# ---------------------------------------------------------------------------
# equivalence tables

def wilf_table(
    left: PatternSet, right: PatternSet, n_max: int, *, fail_fast: bool = True
) -> EquivalenceReport:
    """
    Per-n avoider counts for both sets up to n_max.

    >>> wilf_table(frozenset({(1, 2, 3)}), frozenset({(1, 2)}), 3).first_divergence
    2
    """
    report = EquivalenceReport("wilf", frozenset(left), frozenset(right), n_max)
    lcounts = avoider_counts(left, n_max)
    rcounts = avoider_counts(right, n_max)
    for n in range(1, n_max + 1):
        row = WilfRow(n, lcounts[n - 1], rcounts[n - 1])
        report.rows.append(row)
        if not row.equal and report.verdict == "equal-up-to-n_max":
            report.verdict = "diverges"
            report.first_divergence = n
            if fail_fast:
                break
    return report


def shape_wilf_table(
    left: PatternSet, right: PatternSet, n_max: int, *, fail_fast: bool = True
) -> EquivalenceReport:
    """
    Per-board avoiding-filling counts for every board with up to n_max
    columns, in deterministic board order.
    """
    report = EquivalenceReport("shape-wilf", frozenset(left), frozenset(right), n_max)
    left = sorted(left)
    right = sorted(right)
    for n in range(1, n_max + 1):
        for board in enumerate_boards(n):
            row = ShapeWilfRow(
                n, board, count_fillings(board, left), count_fillings(board, right)
            )
            report.rows.append(row)
            if not row.equal and report.verdict == "equal-up-to-n_max":
                report.verdict = "diverges"
                report.first_divergence = (n, board)
                if fail_fast:
                    return report
    return report


def find_shape_wilf_divergence(
    left: PatternSet, right: PatternSet, n_limit: int
) -> Optional[ShapeWilfRow]:
    """
    Smallest board (by column count, then enumeration order) on which the
    two sets have different avoiding-filling counts, or None.
    """
    for n in range(1, n_limit + 1):
        for board in enumerate_boards(n):
            lc = count_fillings(board, left)
            rc = count_fillings(board, right)
            if lc != rc:
                return ShapeWilfRow(n, board, lc, rc)
    return None


# ---------------------------------------------------------------------------
# symmetry orbits

def symmetry_orbit(patterns: PatternSet) -> list[PatternSet]:
    """
    Orbit of a pattern set under elementwise reverse, complement and
    inverse, sorted canonically.
    """
    start = frozenset(patterns)
    seen = {start}
    queue = [start]
    while queue:
        s = queue.pop()
        for image in (set_reverse(s), set_complement(s), set_inverse(s)):
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen, key=lambda s: sorted(s))


def trivial_symmetry_class(patterns: PatternSet) -> PatternSet:
    """
    Canonical representative: the lexicographically least member of the
    orbit under reverse/complement/inverse.

    >>> format_pattern_set(trivial_symmetry_class(frozenset({(2, 1)})))
    '{12}'
    """
    return symmetry_orbit(patterns)[0]


# ---------------------------------------------------------------------------
# symbolic set expressions
#
# Grammar (whitespace ignored):
#   expr := term ('+' term)*          '+' is the direct sum
#   term := atom ('^' [rci]+)?        postfix symmetries, applied left to right
#   atom := perm | '{' perm (',' perm)* '}' | '(' expr ')'
# Single permutations denote singleton sets.

class ExpressionError(ValueError):
    pass


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ExpressionError:
        return ExpressionError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> PatternSet:
        result = self.expr()
        if self.peek():
            raise self.error("trailing input")
        return result

    def expr(self) -> PatternSet:
        result = self.term()
        while self.peek() == "+":
            self.take("+")
            result = set_direct_sum(result, self.term())
        return result

    def term(self) -> PatternSet:
        result = self.atom()
        if self.peek() == "^":
            self.take("^")
            ops = ""
            while self.peek() in ("r", "c", "i"):
                ops += self.text[self.pos]
                self.pos += 1
            if not ops:
                raise self.error("expected symmetry ops after '^'")
            result = set_apply_ops(result, ops)
        return result

    def atom(self) -> PatternSet:
        ch = self.peek()
        if ch == "(":
            self.take("(")
            result = self.expr()
            self.take(")")
            return result
        if ch == "{":
            self.take("{")
            members = [self.perm_literal()]
            while self.peek() == ",":
                self.take(",")
                members.append(self.perm_literal())
            self.take("}")
            return frozenset(members)
        if ch.isdigit():
            return frozenset({self.perm_literal()})
        raise self.error("expected a permutation, '{' or '('")

    def perm_literal(self) -> Perm:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a permutation literal")
        try:
            return parse_perm(self.text[start : self.pos])
        except ValueError as exc:
            raise self.error(str(exc)) from None


def evaluate_set_expression(text: str) -> PatternSet:
    """
    Evaluate an expression over pattern sets with direct sum '+' and
    postfix symmetry words '^r', '^c', '^i' (composable, left to right).

    >>> format_pattern_set(evaluate_set_expression("({123,213}+12)^rc"))
    '{12345,12354}'
    """
    return _ExprParser(text).parse()


def symmetry_identity_check(lhs: PatternSet, expression: str) -> bool:
    """
    Exact set equality between lhs and the evaluated expression.

    >>> symmetry_identity_check(frozenset({(1,2,5,4,3), (2,1,5,4,3)}), "{12,21}+321")
    True
    """
    return frozenset(lhs) == evaluate_set_expression(expression)
