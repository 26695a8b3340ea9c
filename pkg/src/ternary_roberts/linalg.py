"""Exact linear algebra over Q: reduced row echelon form and linear solves.

Rows are kept sparse (column -> Fraction).  Elimination is plain
Gauss-Jordan with the first nonzero column as pivot; no magnitude pivoting
is needed because nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

SparseRow = Dict[Hashable, Fraction]


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise DimensionError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v:
                clean[(r, c)] = Fraction(v)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = Fraction(v)
        return cls(len(rows), ncols, entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, {(k, k): Fraction(1) for k in range(n)})

    def __getitem__(self, rc: Tuple[int, int]) -> Fraction:
        return self.entries.get(rc, Fraction(0))

    def to_rows(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def sparse_rows(self) -> List[SparseRow]:
        out: List[SparseRow] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        right = other.sparse_rows()
        entries: Dict[Tuple[int, int], Fraction] = {}
        for (r, k), v in self.entries.items():
            for c, w in right[k].items():
                entries[(r, c)] = entries.get((r, c), 0) + v * w
        return RationalMatrix(self.rows, other.cols, entries)

    def apply(self, x: Sequence) -> List[Fraction]:
        if len(x) != self.cols:
            raise DimensionError(f"vector length {len(x)} != {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for (r, c), v in self.entries.items():
            out[r] += v * x[c]
        return out


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a row space.

    Columns may be any hashables; ``order`` ranks them for pivot choice.
    """

    def __init__(self, order=None):
        self.order = order or (lambda c: c)
        self.pivots: Dict[Hashable, SparseRow] = {}

    def reduce(self, row: Mapping[Hashable, Fraction]) -> SparseRow:
        """Remainder of ``row`` after eliminating every pivot column."""
        out = {c: Fraction(v) for c, v in row.items() if v}
        for c in [c for c in out if c in self.pivots]:
            f = out.get(c)
            if not f:
                continue
            for k, v in self.pivots[c].items():
                s = out.get(k, 0) - f * v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def add(self, row: Mapping[Hashable, Fraction]) -> bool:
        """Insert a row; return False if it was already in the span."""
        rem = self.reduce(row)
        if not rem:
            return False
        pc = min(rem, key=self.order)
        inv = 1 / rem[pc]
        rem = {k: v * inv for k, v in rem.items()}
        for other in self.pivots.values():
            f = other.get(pc)
            if f:
                for k, v in rem.items():
                    s = other.get(k, 0) - f * v
                    if s:
                        other[k] = s
                    else:
                        other.pop(k, None)
        self.pivots[pc] = rem
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> List[Tuple[Hashable, SparseRow]]:
        return sorted(self.pivots.items(), key=lambda kv: self.order(kv[0]))


def rref(m: RationalMatrix) -> Tuple[RationalMatrix, int, List[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    basis = EchelonBasis()
    for row in m.sparse_rows():
        basis.add(row)
    entries = {}
    pivots = []
    for r, (pc, row) in enumerate(basis.rows()):
        pivots.append(pc)
        for c, v in row.items():
            entries[(r, c)] = v
    return RationalMatrix(m.rows, m.cols, entries), basis.rank, pivots


def rank(m: RationalMatrix) -> int:
    return rref(m)[1]


UNIQUE = "unique"
UNDERDETERMINED = "underdetermined"
INCONSISTENT = "inconsistent"


@dataclass
class SolveReport:
    status: str
    solution: Optional[List[Fraction]]
    rank: int
    free_columns: List[int]


def solve(m: RationalMatrix, b: Sequence) -> SolveReport:
    """Solve m x = b exactly.

    For an underdetermined system the returned solution is the particular
    one with every free column set to zero.  Any solution is re-checked by
    substitution before it is returned.
    """
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {m.rows}")
    aug = m.cols
    basis = EchelonBasis()
    for r, row in enumerate(m.sparse_rows()):
        if b[r]:
            row[aug] = Fraction(b[r])
        basis.add(row)
    pivot_rows = basis.rows()
    pivots = [pc for pc, _ in pivot_rows]
    if aug in basis.pivots:
        return SolveReport(INCONSISTENT, None, basis.rank - 1, _free(m.cols, pivots))
    x = [Fraction(0)] * m.cols
    for pc, row in pivot_rows:
        x[pc] = row.get(aug, Fraction(0))
    residual = m.apply(x)
    if any(residual[r] != b[r] for r in range(m.rows)):
        raise ArithmeticError("solution failed exact re-verification")
    free = _free(m.cols, pivots)
    return SolveReport(UNIQUE if not free else UNDERDETERMINED, x, len(pivots), free)


def _free(ncols: int, pivots: Sequence[int]) -> List[int]:
    ps = set(pivots)
    return [c for c in range(ncols) if c not in ps]
