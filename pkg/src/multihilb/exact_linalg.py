"""Exact rank computation for dense rational matrices.

Scalars are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator. Rank over Q goes through a
fraction-free (Bareiss) echelon pass on an integer copy of the matrix:
each row is first scaled by the lcm of its denominators, which does not
change the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Scalar = Fraction


class BadPrimeError(ValueError):
    """A denominator of the matrix vanishes modulo the chosen prime."""


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> ExactMatrix:
        """Build from nested sequences of ints, Fractions or rational strings."""
        n_cols = len(rows[0]) if rows else (cols or 0)
        flat: list[Fraction] = []
        for row in rows:
            if len(row) != n_cols:
                raise ValueError("ragged rows")
            flat.extend(Fraction(v) for v in row)
        return cls(len(rows), n_cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (scale // x.denominator) for x in row])
    return out


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix via fraction-free Bareiss echelon form.

    Pivot is the first nonzero entry in the current column at or below the
    current pivot row. Every division by the previous pivot is exact.
    """
    a = [list(r) for r in rows]
    a = [r for r in a if any(r)]
    n_rows = len(a)
    if n_rows == 0:
        return 0
    n_cols = len(a[0])
    rank_ = 0
    prev = 1
    for col in range(n_cols):
        if rank_ == n_rows:
            break
        pivot_row = next((i for i in range(rank_, n_rows) if a[i][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != rank_:
            a[rank_], a[pivot_row] = a[pivot_row], a[rank_]
        prow = a[rank_]
        p = prow[col]
        for i in range(rank_ + 1, n_rows):
            row = a[i]
            f = row[col]
            if f:
                a[i] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                a[i] = [(p * x) // prev for x in row]
        prev = p
        rank_ += 1
    return rank_


def rank(m: ExactMatrix) -> int:
    """Rank of ``m`` over the rationals. Empty matrices have rank 0."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return integer_rank(_integer_rows(m))


def rank_mod_p(m: ExactMatrix, p: int) -> int:
    """Rank of the reduction of ``m`` modulo the prime ``p``.

    Never exceeds ``rank(m)``, and can be strictly smaller for an unlucky
    prime, so this is only a fast path and never a substitute for ``rank``.
    """
    if p < 2:
        raise ValueError("p must be a prime")
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = []
    for i in range(m.rows):
        row = []
        for x in m.row(i):
            if x.denominator % p == 0:
                raise BadPrimeError(f"denominator {x.denominator} vanishes mod {p}")
            row.append(x.numerator * pow(x.denominator, -1, p) % p)
        rows.append(row)

    rank_ = 0
    for col in range(m.cols):
        if rank_ == m.rows:
            break
        pivot_row = next((i for i in range(rank_, m.rows) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[rank_], rows[pivot_row] = rows[pivot_row], rows[rank_]
        prow = rows[rank_]
        inv = pow(prow[col], -1, p)
        prow[:] = [x * inv % p for x in prow]
        for i in range(rank_ + 1, m.rows):
            f = rows[i][col]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        rank_ += 1
    return rank_
