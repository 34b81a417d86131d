"""
Constructive bijections between avoiding fillings of a Ferrers board,
with a verification harness.

All maps here preserve the board shape exactly and send fillings avoiding
one pattern set to fillings avoiding another, establishing per-board count
equalities (shape-Wilf-equivalences) constructively:

* ``fan_bijection`` -- between two "fan" pattern sets of the same size
  (all patterns whose maximum sits at a fixed position).  The filling is
  peeled one top row at a time together with the column of its 1; the 1's
  column is one of min(k-1, l) valid slots, and slots are matched by
  left-to-right rank on the two sides.
* ``fan_to_bottom_last`` -- from the fan with apex at the last position to
  the set of patterns whose minimum sits at the last position; same
  recursion transposed, peeling the rightmost column and the row of its 1.
* ``wedge_valley_bijection`` -- between any two of the six size-3 pattern
  pairs handled by the top-row recursion; for the valley-like pairs the
  two valid slots flank the column holding the highest 1 below the top row
  among the top-row columns.
* ``direct_sum_transfer`` -- lifts any inner bijection for S ~ S' to one
  for S (+) T ~ S' (+) T by splitting the board into a "red" region (cells
  with an in-board occurrence of some pattern of T strictly above and to
  the right) and a "blue" rest, mapping the squashed red subfilling with
  the inner bijection, and reinserting the blue rows and columns.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .perms import PatternSet, Perm, format_pattern_set, set_direct_sum
from .perms import _tight_refs
from .boards import (
    Board,
    Filling,
    enumerate_boards,
    filling_avoids_all,
    fillings,
    format_filling,
    make_filling,
)
from .pops import fan_pop, below_all_pop, pop_to_pattern_set

_EMPTY = Filling((), ())


class BijectionError(ValueError):
    """Precondition or internal-consistency violation in a bijection run."""


@dataclass(frozen=True)
class BijectionOracle:
    """A named shape-preserving map between avoidance classes."""

    name: str
    source: PatternSet
    target: PatternSet
    apply: Callable[[Filling], Filling]


Trace = Optional[list]
# slot rule: (top row length, filling below the top row, trace) -> valid
# 1-based insertion columns in increasing order
SlotRule = Callable[[int, Filling, Trace], list[int]]


# ---------------------------------------------------------------------------
# peel / rebuild moves

def _peel_top(f: Filling) -> tuple[int, int, Filling]:
    """Remove the top row and the column of its 1.

    Returns (top row length, 1-based column of the top-row 1, smaller filling).
    The smaller board does not depend on which full-height column held the 1.
    """
    board, rows = f
    height = board[0]
    ell = 1
    while ell < len(board) and board[ell] == height:
        ell += 1
    col = rows.index(height) + 1  # the unique 1 in the top row
    b = list(board)
    del b[col - 1]
    for i in range(ell - 1):
        b[i] -= 1
    r = list(rows)
    del r[col - 1]
    return ell, col, Filling(tuple(b), tuple(r))


def _unpeel_top(below: Filling, ell: int, col: int) -> Filling:
    """Re-add a top row of length ell and a new full-height column at ``col``
    carrying the 1 in its top cell."""
    height = (below.board[0] if below.board else 0) + 1
    if not 1 <= col <= ell or ell > len(below.board) + 1:
        raise BijectionError(f"bad top-row reinsertion ell={ell} col={col}")
    b = list(below.board)
    for i in range(ell - 1):
        if b[i] != height - 1:
            raise BijectionError("top-row reinsertion does not fit the board")
        b[i] = height
    b.insert(col - 1, height)
    r = list(below.rows)
    r.insert(col - 1, height)
    return Filling(tuple(b), tuple(r))


def _peel_right(f: Filling) -> tuple[int, int, Filling]:
    """Remove the rightmost column and the row of its 1.

    The removed row spans every column (its index is at most the minimum
    column height), so the smaller board does not depend on it.
    """
    board, rows = f
    ell = board[-1]
    row = rows[-1]
    b = tuple(h - 1 for h in board[:-1])
    r = tuple(v - 1 if v > row else v for v in rows[:-1])
    return ell, row, Filling(b, r)


def _unpeel_right(below: Filling, ell: int, row: int) -> Filling:
    """Re-add a full-width row at position ``row`` and a rightmost column of
    height ell whose 1 sits in that row."""
    if not 1 <= row <= ell:
        raise BijectionError(f"bad right-column reinsertion ell={ell} row={row}")
    if below.board and ell > below.board[-1] + 1:
        raise BijectionError("right-column reinsertion does not fit the board")
    if not below.board and ell != 1:
        raise BijectionError("right-column reinsertion does not fit the board")
    b = tuple(h + 1 for h in below.board) + (ell,)
    r = tuple(v + 1 if v >= row else v for v in below.rows) + (row,)
    return Filling(b, r)


# ---------------------------------------------------------------------------
# generic rank-matched recursions

class SlotRecord(NamedTuple):
    """One peel level: length of the removed row/column, the slot the
    removed 1 occupied among the valid insertions, and its rank."""

    ell: int
    position: int
    rank: int


def _run_rank_matched(
    f: Filling,
    peel: Callable,
    unpeel: Callable,
    slots_src: SlotRule,
    slots_tgt: SlotRule,
    trace: Trace,
) -> Filling:
    records: list[SlotRecord] = []
    cur = f
    level = 0
    while cur.board:
        level += 1
        ell, pos, below = peel(cur)
        slots = slots_src(ell, below, trace)
        if pos not in slots:
            raise BijectionError(
                f"input filling violates the source avoidance at level {level}: "
                f"position {pos} not among valid slots {slots}"
            )
        rank = slots.index(pos)
        if trace is not None:
            trace.append(f"peel level {level}: ell={ell} pos={pos} slots={slots} rank={rank}")
        records.append(SlotRecord(ell, pos, rank))
        cur = below
    out = _EMPTY
    for level, record in enumerate(reversed(records), 1):
        slots = slots_tgt(record.ell, out, trace)
        pos = slots[record.rank]
        if trace is not None:
            trace.append(
                f"rebuild level {level}: ell={record.ell} slots={slots} "
                f"rank={record.rank} pos={pos}"
            )
        out = unpeel(out, record.ell, pos)
    return out


def _fan_slots(ell: int, k: int, apex: int) -> list[int]:
    # Placing the top-row 1 at column i creates an occurrence (apex at the
    # new maximum) exactly when both sides hold enough columns:
    # i > apex-1 and i < ell-(k-apex)+1.  For ell < k every column is safe.
    left = set(range(1, min(apex, ell + 1)))
    right = set(range(max(1, ell - (k - apex) + 1), ell + 1))
    return sorted(left | right)


def _fan_rule(k: int, apex: int) -> SlotRule:
    def rule(ell: int, below: Filling, trace: Trace) -> list[int]:
        return _fan_slots(ell, k, apex)

    return rule


def _highest_below(ell: int, below: Filling) -> int:
    """1-based index, among the ell-1 full-height columns below the new top
    row, of the column holding the highest 1."""
    prefix = below.rows[: ell - 1]
    return 1 + prefix.index(max(prefix))


def _flag_single_slot(trace: Trace) -> list[int]:
    if trace is not None:
        trace.append(
            "note: top-row columns hold no 1 below the top row; "
            "all (one) insertion slots valid"
        )
    return [1]


def _valley_rule(ell: int, below: Filling, trace: Trace) -> list[int]:
    # {213,312}: safe slots flank the column of the highest 1
    if ell == 1:
        return _flag_single_slot(trace)
    c = _highest_below(ell, below)
    return [c, c + 1]


def _low_first_rule(ell: int, below: Filling, trace: Trace) -> list[int]:
    # {132,213}: leftmost slot, or just right of the highest 1
    if ell == 1:
        return _flag_single_slot(trace)
    c = _highest_below(ell, below)
    return [1, c + 1]


def _high_last_rule(ell: int, below: Filling, trace: Trace) -> list[int]:
    # {231,312}: just left of the highest 1, or the rightmost slot
    if ell == 1:
        return _flag_single_slot(trace)
    c = _highest_below(ell, below)
    return [c, ell]


def _pset(*words: str) -> PatternSet:
    return frozenset(tuple(int(ch) for ch in word) for word in words)


# the six size-3 pattern pairs handled by the top-row recursion
TOP_ROW_PAIRS: dict[PatternSet, SlotRule] = {
    _pset("312", "321"): _fan_rule(3, 1),
    _pset("132", "231"): _fan_rule(3, 2),
    _pset("123", "213"): _fan_rule(3, 3),
    _pset("213", "312"): _valley_rule,
    _pset("132", "213"): _low_first_rule,
    _pset("231", "312"): _high_last_rule,
}


# ---------------------------------------------------------------------------
# public bijections

def fan_bijection(
    f: Filling, k: int, source_apex: int, target_apex: int, trace: Trace = None
) -> Filling:
    """
    Map a filling avoiding the fan set with apex ``source_apex`` to one of
    the same board avoiding the fan set with apex ``target_apex``; the two
    runs with swapped apexes are mutually inverse.
    """
    source = pop_to_pattern_set(fan_pop(k, source_apex))
    if not filling_avoids_all(f, source):
        raise BijectionError(
            f"input filling contains a pattern of {format_pattern_set(source)}"
        )
    return _run_rank_matched(
        f,
        _peel_top,
        _unpeel_top,
        _fan_rule(k, source_apex),
        _fan_rule(k, target_apex),
        trace,
    )


def fan_to_bottom_last(f: Filling, k: int, trace: Trace = None) -> Filling:
    """
    Map a filling avoiding the fan set with apex k (patterns with maximum
    last) to one avoiding the patterns with minimum last.  Peels the
    rightmost column; valid reinsertion rows are the k-1 bottommost squares
    on the source side and the k-1 topmost on the target side.
    """
    source = pop_to_pattern_set(fan_pop(k, k))
    if not filling_avoids_all(f, source):
        raise BijectionError(
            f"input filling contains a pattern of {format_pattern_set(source)}"
        )

    def src(ell: int, below: Filling, trace: Trace) -> list[int]:
        return list(range(1, min(k - 1, ell) + 1))

    def tgt(ell: int, below: Filling, trace: Trace) -> list[int]:
        return list(range(max(1, ell - k + 2), ell + 1))

    return _run_rank_matched(f, _peel_right, _unpeel_right, src, tgt, trace)


def wedge_valley_bijection(
    f: Filling, source: PatternSet, target: PatternSet, trace: Trace = None
) -> Filling:
    """
    Map between avoiders of any two of the six size-3 pairs in
    TOP_ROW_PAIRS (the three wedge/fan pairs, the valley pair {213,312},
    and the pairs {132,213} and {231,312}); every pair admits exactly
    min(2, top-row length) insertion slots, matched by rank.
    """
    source = frozenset(source)
    target = frozenset(target)
    try:
        src_rule = TOP_ROW_PAIRS[source]
        tgt_rule = TOP_ROW_PAIRS[target]
    except KeyError as missing:
        known = ", ".join(sorted(format_pattern_set(s) for s in TOP_ROW_PAIRS))
        raise BijectionError(
            f"no top-row slot rule for {format_pattern_set(frozenset(missing.args[0]))}; "
            f"known pairs: {known}"
        ) from None
    if not filling_avoids_all(f, source):
        raise BijectionError(
            f"input filling contains a pattern of {format_pattern_set(source)}"
        )
    return _run_rank_matched(f, _peel_top, _unpeel_top, src_rule, tgt_rule, trace)


# ---------------------------------------------------------------------------
# direct sum transfer

def _subset_inboard_contains(
    board: Board, rows: Perm, cols: list[int], p: Perm
) -> bool:
    """In-board occurrence of p among the 1s of the given columns only."""
    k = len(p)
    if k == 0 or k > len(cols):
        return k == 0
    refs = _tight_refs(p)
    top = board[0] + 1
    chosen = [0] * k

    def walk(j: int, start: int, cur_max: int) -> bool:
        lo, hi = refs[j]
        lov = chosen[lo] if lo >= 0 else 0
        hiv = chosen[hi] if hi >= 0 else top
        last = j == k - 1
        for t in range(start, len(cols) - (k - j - 1)):
            c = cols[t]
            v = rows[c - 1]
            if lov < v < hiv:
                new_max = v if v > cur_max else cur_max
                if last:
                    if new_max <= board[c - 1]:
                        return True
                else:
                    chosen[j] = v
                    if walk(j + 1, t + 1, new_max):
                        return True
        return False

    return walk(0, 0, 0)


def direct_sum_transfer(
    f: Filling, tail: PatternSet, inner: BijectionOracle, trace: Trace = None
) -> Filling:
    """
    Map a filling avoiding ``inner.source (+) tail`` to one avoiding
    ``inner.target (+) tail`` on the same board.

    Every board cell with an in-board occurrence of some tail pattern
    strictly above and to its right is red, the rest blue; rows and columns
    of blue 1s are deleted, the red remainder is squashed bottom-left into
    a smaller Ferrers board (verified, not assumed), mapped with the inner
    bijection, and the blue rows and columns are reinserted unchanged.  A
    filling avoiding the tail everywhere is all blue and maps to itself.
    """
    tail = frozenset(tail)
    source = set_direct_sum(inner.source, tail)
    if not filling_avoids_all(f, source):
        raise BijectionError(
            f"input filling contains a pattern of {format_pattern_set(source)}"
        )
    board, rows = f
    m = len(board)
    if m == 0:
        return f
    tail_sorted = sorted(tail)

    def is_red(c: int, r: int) -> bool:
        ne_cols = [c2 for c2 in range(c + 1, m + 1) if rows[c2 - 1] > r]
        return any(
            _subset_inboard_contains(board, rows, ne_cols, p) for p in tail_sorted
        )

    # red cells form a bottom-left-closed region; per column they are the
    # bottom run of rows, so only the run length is needed
    red_top = []
    for c in range(1, m + 1):
        t = 0
        while t < board[c - 1] and is_red(c, t + 1):
            t += 1
        red_top.append(t)

    surv_cols = [c for c in range(1, m + 1) if rows[c - 1] <= red_top[c - 1]]
    surv_col_set = set(surv_cols)
    blue_rows = {rows[c - 1] for c in range(1, m + 1) if c not in surv_col_set}
    surv_rows = [r for r in range(1, board[0] + 1) if r not in blue_rows]
    row_rank = {r: t + 1 for t, r in enumerate(surv_rows)}

    sub_board = tuple(
        bisect_right(surv_rows, red_top[c - 1]) for c in surv_cols
    )
    sub_rows = tuple(row_rank[rows[c - 1]] for c in surv_cols)
    try:
        sub = make_filling(sub_board, sub_rows)
    except ValueError as exc:
        raise BijectionError(
            f"squashed red region is not a Ferrers transversal: {exc}"
        ) from exc
    if trace is not None:
        trace.append(
            f"transfer: {len(surv_cols)} red columns -> inner board "
            f"{format_filling(sub)}; blue rows {sorted(blue_rows)}"
        )

    mapped = inner.apply(sub)
    if mapped.board != sub.board:
        raise BijectionError(
            f"inner oracle {inner.name!r} changed the board shape: "
            f"{mapped.board} != {sub.board}"
        )

    out_rows = list(rows)
    for t, c in enumerate(surv_cols):
        out_rows[c - 1] = surv_rows[mapped.rows[t] - 1]
    return make_filling(board, out_rows)


# ---------------------------------------------------------------------------
# oracle builders

def fan_oracle(k: int, source_apex: int, target_apex: int) -> BijectionOracle:
    return BijectionOracle(
        name=f"fan k={k} apex {source_apex}->{target_apex}",
        source=pop_to_pattern_set(fan_pop(k, source_apex)),
        target=pop_to_pattern_set(fan_pop(k, target_apex)),
        apply=lambda f: fan_bijection(f, k, source_apex, target_apex),
    )


def fan_bottom_last_oracle(k: int) -> BijectionOracle:
    return BijectionOracle(
        name=f"fan-bottom-last k={k}",
        source=pop_to_pattern_set(fan_pop(k, k)),
        target=pop_to_pattern_set(below_all_pop(k, k)),
        apply=lambda f: fan_to_bottom_last(f, k),
    )


def wedge_valley_oracle(source: PatternSet, target: PatternSet) -> BijectionOracle:
    source = frozenset(source)
    target = frozenset(target)
    for patterns in (source, target):
        if patterns not in TOP_ROW_PAIRS:
            known = ", ".join(sorted(format_pattern_set(s) for s in TOP_ROW_PAIRS))
            raise BijectionError(
                f"no top-row slot rule for {format_pattern_set(patterns)}; "
                f"known pairs: {known}"
            )
    return BijectionOracle(
        name=f"wedge-valley {format_pattern_set(source)}->{format_pattern_set(target)}",
        source=source,
        target=target,
        apply=lambda f: wedge_valley_bijection(f, source, target),
    )


def transfer_oracle(inner: BijectionOracle, tail: PatternSet) -> BijectionOracle:
    tail = frozenset(tail)
    return BijectionOracle(
        name=f"transfer[{inner.name}] (+) {format_pattern_set(tail)}",
        source=set_direct_sum(inner.source, tail),
        target=set_direct_sum(inner.target, tail),
        apply=lambda f: direct_sum_transfer(f, tail, inner),
    )


# ---------------------------------------------------------------------------
# verification harness

@dataclass
class Violation:
    kind: str  # domain | codomain | shape | injectivity | count
    board: Board
    witness: object
    detail: str


@dataclass
class VerificationReport:
    oracle: str
    n_max: int
    boards_checked: int = 0
    fillings_checked: int = 0
    violation: Optional[Violation] = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def describe(self) -> str:
        if self.ok:
            return (
                f"{self.oracle}: OK on {self.boards_checked} boards / "
                f"{self.fillings_checked} fillings (n <= {self.n_max})"
            )
        v = self.violation
        return (
            f"{self.oracle}: {v.kind} violation on board "
            f"{v.board}: {v.detail}"
        )


def verify_bijection(oracle: BijectionOracle, n_max: int) -> VerificationReport:
    """
    Exhaustively check the oracle on every board with up to n_max columns:
    inputs avoid the source set, outputs stay on the same board and avoid
    the target set, the map is injective per board, and source/target
    counts agree (surjectivity).  Stops at the first violation.
    """
    report = VerificationReport(oracle.name, n_max)
    source = sorted(oracle.source)
    target = sorted(oracle.target)
    for n in range(1, n_max + 1):
        for board in enumerate_boards(n):
            report.boards_checked += 1
            sources = list(fillings(board, source))
            target_count = sum(1 for _ in fillings(board, target))
            seen: dict[Filling, Filling] = {}
            for f in sources:
                report.fillings_checked += 1
                if not filling_avoids_all(f, source):
                    report.violation = Violation(
                        "domain", board, f, f"{format_filling(f)} contains the source set"
                    )
                    return report
                try:
                    g = oracle.apply(f)
                except BijectionError as exc:
                    report.violation = Violation(
                        "domain", board, f, f"{format_filling(f)}: {exc}"
                    )
                    return report
                if g.board != board:
                    report.violation = Violation(
                        "shape", board, (f, g),
                        f"{format_filling(f)} mapped off-board to {format_filling(g)}",
                    )
                    return report
                if not filling_avoids_all(g, target):
                    report.violation = Violation(
                        "codomain", board, (f, g),
                        f"{format_filling(f)} -> {format_filling(g)} contains the target set",
                    )
                    return report
                if g in seen:
                    report.violation = Violation(
                        "injectivity", board, (seen[g], f),
                        f"{format_filling(seen[g])} and {format_filling(f)} "
                        f"both map to {format_filling(g)}",
                    )
                    return report
                seen[g] = f
            if len(sources) != target_count:
                report.violation = Violation(
                    "count", board, None,
                    f"{len(sources)} source avoiders vs {target_count} target avoiders",
                )
                return report
    return report
