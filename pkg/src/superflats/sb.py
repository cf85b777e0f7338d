"""The superboolean semiring SB = {0, 1, 1nu} and matrices over it.

Elements are encoded as the ints ZERO = 0, ONE = 1, ONE_NU = 2.  The
defining relation is ONE + ONE = ONE_NU; addition saturates at ONE_NU and
multiplication treats ONE_NU as an absorbing "plural one".
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionError, ShapeError, SizeLimitError
from .limits import LIMITS

ZERO, ONE, ONE_NU = 0, 1, 2

_ADD = ((ZERO, ONE, ONE_NU),
        (ONE, ONE_NU, ONE_NU),
        (ONE_NU, ONE_NU, ONE_NU))
_MUL = ((ZERO, ZERO, ZERO),
        (ZERO, ONE, ONE_NU),
        (ZERO, ONE_NU, ONE_NU))

_REPR = {ZERO: "0", ONE: "1", ONE_NU: "1v"}


def sb_add(a: int, b: int) -> int:
    return _ADD[a][b]


def sb_mul(a: int, b: int) -> int:
    return _MUL[a][b]


def sb_repr(a: int) -> str:
    return _REPR[a]


@dataclass(frozen=True)
class SBMatrix:
    """Immutable rectangular matrix over SB."""

    rows: int
    cols: int
    entries: tuple  # row-major tuple of row tuples

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "SBMatrix":
        grid = tuple(tuple(row) for row in rows)
        nrows = len(grid)
        ncols = len(grid[0]) if grid else 0
        for row in grid:
            if len(row) != ncols:
                raise ShapeError("ragged rows")
            for e in row:
                if e not in (ZERO, ONE, ONE_NU):
                    raise ShapeError(f"bad SB entry {e!r}")
        return cls(nrows, ncols, grid)

    @classmethod
    def identity(cls, n: int) -> "SBMatrix":
        return cls.from_rows([[ONE if i == j else ZERO for j in range(n)]
                              for i in range(n)])

    @classmethod
    def filled(cls, rows: int, cols: int, value: int) -> "SBMatrix":
        return cls.from_rows([[value] * cols for _ in range(rows)])

    @property
    def is_boolean(self) -> bool:
        return all(e != ONE_NU for row in self.entries for e in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]

    def transpose(self) -> "SBMatrix":
        return SBMatrix(self.cols, self.rows,
                        tuple(zip(*self.entries)) if self.entries else ())

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "SBMatrix":
        return SBMatrix.from_rows(
            [[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __str__(self) -> str:
        return "\n".join(" ".join(_REPR[e] for e in row) for row in self.entries)


def permanent(m: SBMatrix, limit: int | None = None) -> int:
    """Per M = sum over permutations of the entry products, evaluated in SB.

    Counts all-one permutation products with early exit at two; any
    permutation whose product contains ONE_NU forces the result ONE_NU.
    """
    if not m.is_square:
        raise ShapeError("permanent requires a square matrix")
    n = m.rows
    cap = LIMITS.permanent_side if limit is None else limit
    if n > cap:
        raise SizeLimitError(f"permanent side {n} exceeds limit {cap}")
    if n == 0:
        return ONE  # empty sum over the single empty permutation

    # nonzero-support masks, rows ordered by ascending support for pruning
    masks = [sum(1 << j for j in range(n) if m.entries[i][j] != ZERO)
             for i in range(n)]
    nu_masks = [sum(1 << j for j in range(n) if m.entries[i][j] == ONE_NU)
                for i in range(n)]
    order = sorted(range(n), key=lambda i: bin(masks[i]).count("1"))

    ones = 0
    saw_nu = False

    def rec(k: int, used: int, prod_nu: bool) -> bool:
        # returns True once the result is forced to ONE_NU
        nonlocal ones, saw_nu
        if k == n:
            if prod_nu:
                saw_nu = True
            else:
                ones += 1
            return saw_nu or ones >= 2
        i = order[k]
        avail = masks[i] & ~used
        # quick infeasibility: some later row with no available column
        for k2 in range(k + 1, n):
            if masks[order[k2]] & ~used == 0:
                return False
        while avail:
            bit = avail & -avail
            avail ^= bit
            if rec(k + 1, used | bit, prod_nu or bool(nu_masks[i] & bit)):
                return True
        return False

    rec(0, 0, False)
    if saw_nu or ones >= 2:
        return ONE_NU
    return ONE if ones == 1 else ZERO


def _triangular_search(masks: Sequence[int], rows_left: int, cols_left: int,
                       memo: set) -> bool:
    """Can rows/cols be permuted to lower-triangular with 1-diagonal, 0-above?

    Peels marker rows (exactly one 1 among the remaining columns) recursively.
    """
    if cols_left == 0:
        return True
    state = (rows_left, cols_left)
    if state in memo:
        return False
    rl = rows_left
    while rl:
        rbit = rl & -rl
        rl ^= rbit
        sup = masks[rbit.bit_length() - 1] & cols_left
        if sup and sup & (sup - 1) == 0:  # exactly one 1
            if _triangular_search(masks, rows_left ^ rbit, cols_left ^ sup, memo):
                return True
    memo.add(state)
    return False


def triangular_nonsingular(m: SBMatrix) -> bool:
    """Independent oracle for nonsingularity via triangular-form search."""
    if not m.is_square:
        raise ShapeError("requires a square matrix")
    if not m.is_boolean:
        raise PreconditionError("triangular search requires a boolean matrix")
    n = m.rows
    masks = [sum(1 << j for j in range(n) if m.entries[i][j] == ONE)
             for i in range(n)]
    return _triangular_search(masks, (1 << n) - 1, (1 << n) - 1, set())


def is_nonsingular(m: SBMatrix) -> bool:
    """True iff the permanent is exactly ONE."""
    return permanent(m) == ONE


def is_witness(m: SBMatrix, row_set: Iterable[int], col_set: Iterable[int]) -> bool:
    """True iff m[I, J] is nonsingular (I certifies the columns J)."""
    I = sorted(set(row_set))
    J = sorted(set(col_set))
    if len(I) != len(J):
        raise ShapeError(f"|I| = {len(I)} != |J| = {len(J)}")
    return is_nonsingular(m.submatrix(I, J))


def find_marker_row(m: SBMatrix) -> int:
    """Index of a row with exactly one 1; exists in any nonsingular matrix."""
    if not is_nonsingular(m):
        raise PreconditionError("find_marker_row requires a nonsingular matrix")
    for i, row in enumerate(m.entries):
        if sum(1 for e in row if e == ONE) == 1 and all(e != ONE_NU for e in row):
            return i
    raise AssertionError("nonsingular matrix without a marker row")


class ColumnIndependence:
    """Memoized column-independence oracle for a boolean matrix.

    A column set J is independent iff some row is a marker for some j in J
    (a 1 at j, 0 at every other column of J) and J \\ {j} is independent.
    """

    def __init__(self, m: SBMatrix):
        if not m.is_boolean:
            raise PreconditionError("column independence requires a boolean matrix")
        self.m = m
        self.col_rows = [sum(1 << i for i in range(m.rows)
                             if m.entries[i][j] == ONE)
                         for j in range(m.cols)]
        self._indep = lru_cache(maxsize=None)(self._indep_raw)

    def _indep_raw(self, jmask: int) -> bool:
        if jmask == 0:
            return True
        union = 0
        bits = []
        rest = jmask
        while rest:
            bit = rest & -rest
            rest ^= bit
            j = bit.bit_length() - 1
            bits.append((bit, j))
            union |= self.col_rows[j]
        for bit, j in bits:
            others = 0
            for bit2, j2 in bits:
                if bit2 != bit:
                    others |= self.col_rows[j2]
            if self.col_rows[j] & ~others and self._indep(jmask ^ bit):
                return True
        return False

    def independent(self, cols: Iterable[int]) -> bool:
        return self._indep(sum(1 << j for j in set(cols)))

    def independent_mask(self, jmask: int) -> bool:
        return self._indep(jmask)


def sb_rank(m: SBMatrix, limit: int | None = None) -> int:
    """Maximum size of a column set admitting a witness (Per = 1 submatrix).

    Branch-and-bound over column subsets; columns are tried in decreasing
    zero-count order, which tends to expose triangular structure early.
    """
    if not m.is_boolean:
        raise PreconditionError("sb_rank requires a boolean matrix")
    cap = LIMITS.rank_dim if limit is None else limit
    if min(m.rows, m.cols) > cap:
        raise SizeLimitError(
            f"rank dimension {min(m.rows, m.cols)} exceeds limit {cap}")
    if m.cols > m.rows:
        m = m.transpose()  # rank is transpose-invariant; search fewer columns
    oracle = ColumnIndependence(m)
    ncols = m.cols
    zeros = [m.rows - bin(oracle.col_rows[j]).count("1") for j in range(ncols)]
    order = sorted(range(ncols), key=lambda j: (-zeros[j], j))
    best = 0

    def extend(jmask: int, size: int, start: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for k in range(start, ncols):
            if size + (ncols - k) <= best:
                return
            j = order[k]
            cand = jmask | (1 << j)
            if oracle.independent_mask(cand):
                extend(cand, size + 1, k + 1)

    extend(0, 0, 0)
    return best
