"""
Ferrers boards and their transversal fillings.

A board is a tuple of weakly decreasing column heights (bottom-left
justified), e.g. ``(6, 6, 5, 4, 3, 3)``.  A filling places exactly one 1
in every row and every column of the board; with m columns it is encoded
by a permutation w of {1..m} where w_i is the row of the 1 in column i.

A filling contains a pattern p in-board when some columns c_1 < ... < c_k
carry 1's order-isomorphic to p and the top-right corner cell
(c_k, max chosen row) lies inside the board; for a Ferrers board this
single corner test is equivalent to requiring the whole k x k submatrix
grid to sit inside the board.

Text notation: board "[6,6,5,4,3,3]", filling "[6,6,5,4,3,3]/561423".
"""
from __future__ import annotations

import csv
import io
from typing import Iterable, Iterator, NamedTuple

from .perms import Perm, make_perm, parse_perm, format_perm
from .perms import _tight_refs  # shared pruning tables

Board = tuple[int, ...]


class OutOfBoardError(ValueError):
    """A requested 1 falls outside the board; ``column`` is 1-based."""

    def __init__(self, column: int, row: int, height: int):
        self.column = column
        super().__init__(
            f"column {column}: row {row} exceeds column height {height}"
        )


def make_board(heights: Iterable[int]) -> Board:
    """
    Validate weakly decreasing positive column heights.

    >>> make_board([3, 2, 2])
    (3, 2, 2)
    >>> make_board([2, 3])
    Traceback (most recent call last):
        ...
    ValueError: column heights must be weakly decreasing: (2, 3)
    """
    b = tuple(heights)
    if any(h < 1 for h in b):
        raise ValueError(f"column heights must be positive: {b}")
    if any(b[i] < b[i + 1] for i in range(len(b) - 1)):
        raise ValueError(f"column heights must be weakly decreasing: {b}")
    return b


def parse_board(text: str) -> Board:
    """
    >>> parse_board("[6,6,5,4,3,3]")
    (6, 6, 5, 4, 3, 3)
    >>> parse_board("[]")
    ()
    """
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad board notation: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return make_board(int(tok) for tok in inner.split(","))


def format_board(board: Board) -> str:
    return "[" + ",".join(str(h) for h in board) + "]"


def board_from_row_lengths(lengths: Iterable[int]) -> Board:
    """
    Convert bottom-up row lengths to column heights.

    >>> board_from_row_lengths([6, 6, 6, 4, 3, 2])
    (6, 6, 5, 4, 3, 3)
    """
    rows = make_board(lengths)  # same weakly-decreasing shape constraint
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r >= i) for i in range(1, rows[0] + 1))


def cell_in_board(board: Board, column: int, row: int) -> bool:
    """Is the unit square with 1-based coordinates (column, row) in the board?"""
    return 1 <= column <= len(board) and 1 <= row <= board[column - 1]


def board_size(board: Board) -> int:
    return sum(board)


def staircase_board(n: int) -> Board:
    """(n, n-1, ..., 1), the minimal board admitting a (unique) filling."""
    return tuple(range(n, 0, -1))


def square_board(n: int) -> Board:
    return (n,) * n


def admits_filling(board: Board) -> bool:
    """
    True iff the board has a transversal: as many rows as columns and
    every column tall enough to contain the staircase.

    >>> admits_filling((3, 2, 1))
    True
    >>> admits_filling((2, 2, 2))
    False
    >>> admits_filling((3, 1, 1))
    False
    """
    m = len(board)
    if m == 0:
        return True
    return board[0] == m and all(board[i] >= m - i for i in range(m))


def enumerate_boards(n: int) -> list[Board]:
    """
    All boards with n columns admitting at least one filling, in
    descending lexicographic order of heights; there are Catalan(n).

    >>> enumerate_boards(3)
    [(3, 3, 3), (3, 3, 2), (3, 3, 1), (3, 2, 2), (3, 2, 1)]
    """
    if n < 1:
        return []
    out: list[Board] = []
    heights = [n]

    def grow(i: int) -> None:
        if i == n:
            out.append(tuple(heights))
            return
        # column i+1 (1-based) needs height >= n - i to keep the staircase
        for h in range(heights[-1], n - i - 1, -1):
            heights.append(h)
            grow(i + 1)
            heights.pop()

    grow(1)
    return out


# ---------------------------------------------------------------------------
# fillings

class Filling(NamedTuple):
    board: Board
    rows: Perm

    def __str__(self) -> str:
        return format_filling(self)


def make_filling(board: Board, rows: Iterable[int]) -> Filling:
    """Validate that rows is a transversal of the board."""
    b = tuple(board)
    r = make_perm(rows)
    if len(r) != len(b):
        raise ValueError(f"{len(r)} rows for {len(b)} columns")
    if b and b[0] != len(b):
        raise ValueError(f"board {b} has {b[0]} rows but {len(b)} columns")
    for i, row in enumerate(r):
        if row > b[i]:
            raise OutOfBoardError(i + 1, row, b[i])
    return Filling(b, r)


def filling_from_permutation(board: Board, w: Perm) -> Filling:
    """
    The filling with w_i in column i; raises OutOfBoardError naming the
    first offending column (checked left to right).

    >>> filling_from_permutation((3, 2, 1), (1, 2, 3))
    Traceback (most recent call last):
        ...
    shapewilf.boards.OutOfBoardError: column 3: row 3 exceeds column height 1
    """
    if len(w) != len(board):
        raise ValueError(f"permutation length {len(w)} != {len(board)} columns")
    return make_filling(board, w)


def parse_filling(text: str) -> Filling:
    """
    >>> parse_filling("[3,2,1]/321").rows
    (3, 2, 1)
    """
    left, sep, right = text.partition("/")
    if not sep:
        raise ValueError(f"bad filling notation (missing '/'): {text!r}")
    return filling_from_permutation(parse_board(left), parse_perm(right))


def format_filling(f: Filling) -> str:
    return f"{format_board(f.board)}/{format_perm(f.rows)}"


def filling_contains(f: Filling, p: Perm) -> bool:
    """
    In-board containment of the classical pattern p.

    >>> fig = filling_from_permutation(board_from_row_lengths((6, 6, 6, 4, 3, 2)), parse_perm("561423"))
    >>> filling_contains(fig, (3, 1, 2))
    False
    >>> filling_contains(fig, (1, 2, 3))
    True
    """
    heights, rows = f.board, f.rows
    k, m = len(p), len(rows)
    if k == 0:
        return True
    if k > m:
        return False
    refs = _tight_refs(p)
    chosen = [0] * k

    def walk(j: int, start: int, cur_max: int) -> bool:
        lo, hi = refs[j]
        lov = chosen[lo] if lo >= 0 else 0
        hiv = chosen[hi] if hi >= 0 else m + 1
        last = j == k - 1
        for i in range(start, m - (k - j - 1)):
            v = rows[i]
            if lov < v < hiv:
                new_max = v if v > cur_max else cur_max
                if last:
                    if new_max <= heights[i]:
                        return True
                else:
                    chosen[j] = v
                    if walk(j + 1, i + 1, new_max):
                        return True
        return False

    return walk(0, 0, 0)


def filling_avoids_all(f: Filling, patterns: Iterable[Perm]) -> bool:
    return not any(filling_contains(f, p) for p in patterns)


def _occurrence_ending_at(p, refs, placed_rows, bound, r) -> bool:
    """Occurrence of p whose last column is the new one: the new 1 at row r,
    corner capped by the new column's height ``bound``."""
    k = len(p)
    if r > bound:
        return False
    if k == 1:
        return True
    pk = p[-1]
    n = len(placed_rows)
    if n < k - 1:
        return False
    chosen = [0] * (k - 1)
    cap = bound + 1

    def walk(j: int, start: int) -> bool:
        if j == k - 1:
            return True
        lo, hi = refs[j]
        lov = chosen[lo] if lo >= 0 else 0
        hiv = chosen[hi] if hi >= 0 else cap
        # fold in the comparison against the fixed last value r
        if p[j] < pk:
            if r < hiv:
                hiv = r
        elif r > lov:
            lov = r
        if hiv > cap:
            hiv = cap
        for i in range(start, n - (k - 2 - j)):
            v = placed_rows[i]
            if lov < v < hiv:
                chosen[j] = v
                if walk(j + 1, i + 1):
                    return True
        return False

    return walk(0, 0)


def fillings(board: Board, avoid: Iterable[Perm] = ()) -> Iterator[Filling]:
    """
    All fillings of the board avoiding every pattern in ``avoid``,
    generated column by column (left to right), rows ascending.
    Avoidance is checked incrementally on each placed 1, searching only
    occurrences whose last column is the new one.

    >>> [f.rows for f in fillings((3, 2, 1))]
    [(3, 2, 1)]
    >>> sum(1 for _ in fillings((3, 3, 3), {(1, 2, 3), (2, 1, 3)}))
    4
    """
    m = len(board)
    if m == 0:
        yield Filling((), ())
        return
    if board[0] != m:
        return
    patterns = sorted(set(avoid))
    refs = [_tight_refs(p) for p in patterns]
    rows: list[int] = []
    used = [False] * (m + 1)

    def place(c: int) -> Iterator[Filling]:
        if c == m:
            yield Filling(board, tuple(rows))
            return
        h = board[c]
        for r in range(1, h + 1):
            if used[r]:
                continue
            if any(
                _occurrence_ending_at(p, pr, rows, h, r)
                for p, pr in zip(patterns, refs)
            ):
                continue
            rows.append(r)
            used[r] = True
            yield from place(c + 1)
            used[r] = False
            rows.pop()

    yield from place(0)


def count_fillings(board: Board, avoid: Iterable[Perm] = ()) -> int:
    """
    >>> count_fillings((3, 3, 1))
    2
    >>> count_fillings((3, 3, 3), {(1, 2, 3), (2, 1, 3)})
    4
    """
    return sum(1 for _ in fillings(board, avoid))


def transversal_count_formula(board: Board) -> int:
    """
    Closed-form transversal count for boards with no patterns forbidden:
    the product over i of (height of column m+1-i, minus i-1).

    >>> transversal_count_formula((3, 2, 1))
    1
    >>> transversal_count_formula((3, 3, 3))
    6
    """
    m = len(board)
    total = 1
    for i in range(1, m + 1):
        factor = board[m - i] - (i - 1)
        if factor <= 0:
            return 0
        total *= factor
    return total


def board_counts_to_csv(table: dict[Board, int]) -> str:
    """CSV export of a board -> count table, columns ``board,count``."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["board", "count"])
    for board, count in table.items():
        writer.writerow([format_board(board), count])
    return buf.getvalue()
