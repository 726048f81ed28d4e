"""Hilbert functions of point sets via ranks of evaluation matrices.

For reduced points the forms of multidegree ``d`` vanishing on ``X`` are
the kernel of evaluation at the points, so ``H_X(d)`` is the rank of the
``|X| x dim R_d`` matrix of monomial values. No ideal arithmetic is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Iterator, Sequence

import numpy as np

from .exact_linalg import ExactMatrix, integer_rank
from .points import PointSet, projection_counts

MultiDegree = tuple[int, ...]


@dataclass(frozen=True)
class DegreeBox:
    """All multidegrees ``d`` with ``0 <= d <= upper`` componentwise."""

    upper: MultiDegree

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(int(u) for u in self.upper))
        if any(u < 0 for u in self.upper):
            raise ValueError(f"box upper corner must be nonnegative, got {self.upper}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(u + 1 for u in self.upper)

    def __iter__(self) -> Iterator[MultiDegree]:
        return itertools.product(*(range(n) for n in self.shape))

    def __contains__(self, d) -> bool:
        return len(d) == len(self.upper) and all(0 <= a <= u for a, u in zip(d, self.upper))


def ring_dimension(d: Sequence[int]) -> int:
    """Number of monomials of multidegree ``d``: one factor ``d_a + 1`` per axis."""
    if any(a < 0 for a in d):
        return 0
    return prod(a + 1 for a in d)


def monomial_exponents(d: Sequence[int]) -> list[MultiDegree]:
    """Exponent tuples ``e`` for the monomials ``prod u_a^e_a v_a^(d_a - e_a)``.

    Lexicographic order, axis 0 most significant.
    """
    return list(itertools.product(*(range(a + 1) for a in d)))


def _check_arity(x: PointSet, d: Sequence[int]) -> None:
    if len(d) != x.arity:
        raise ValueError(f"degree {tuple(d)} has {len(d)} entries, point set has arity {x.arity}")


def evaluation_matrix(x: PointSet, d: Sequence[int]) -> ExactMatrix:
    """Rows are points, columns the monomials of degree ``d`` in lex order."""
    _check_arity(x, d)
    exps = monomial_exponents(d)
    entries: list[Fraction] = []
    for p in x:
        for e in exps:
            entries.append(
                prod((c.u ** ea) * (c.v ** (da - ea)) for c, ea, da in zip(p.coords, e, d))
            )
    return ExactMatrix(len(x), len(exps), tuple(entries))


def _integer_rows(x: PointSet, d: Sequence[int]) -> list[list[int]]:
    # Same matrix as evaluation_matrix up to a nonzero scale per row: each
    # coordinate pair is cleared of denominators before taking monomials.
    rows = []
    for pairs in _integer_coords(x):
        row = [1]
        for (u, v), da in zip(pairs, d):
            w = [u**e * v ** (da - e) for e in range(da + 1)]
            row = [a * b for a in row for b in w]
        rows.append(row)
    return rows


@lru_cache(maxsize=4096)
def _integer_coords(x: PointSet) -> list[list[tuple[int, int]]]:
    out = []
    for p in x:
        pairs = []
        for c in p.coords:
            s = lcm(c.u.denominator, c.v.denominator)
            pairs.append((int(c.u * s), int(c.v * s)))
        out.append(pairs)
    return out


def _gram_rows(x: PointSet, d: Sequence[int]) -> list[list[int]]:
    # M M^T for the integer evaluation matrix M. Over Q, rank(M M^T) = rank(M),
    # and each entry factors over the axes, so the wide matrix is never built.
    pts = _integer_coords(x)
    n = len(pts)
    g = [[1] * n for _ in range(n)]
    for a, da in enumerate(d):
        for i in range(n):
            ui, vi = pts[i][a]
            for j in range(i, n):
                uj, vj = pts[j][a]
                uu, vv = ui * uj, vi * vj
                # sum_{e=0}^{da} uu^e vv^(da-e)
                if uu == vv:
                    s = (da + 1) * uu**da
                else:
                    s = (uu ** (da + 1) - vv ** (da + 1)) // (uu - vv)
                g[i][j] *= s
                if j != i:
                    g[j][i] *= s
    return g


@lru_cache(maxsize=65536)
def _cached_value(x: PointSet, d: MultiDegree) -> int:
    if ring_dimension(d) > len(x):
        return integer_rank(_gram_rows(x, d))
    return integer_rank(_integer_rows(x, d))


def hilbert_value(x: PointSet, d: Sequence[int]) -> int:
    """``H_X(d)``; zero if any entry of ``d`` is negative or ``X`` is empty."""
    _check_arity(x, d)
    d = tuple(int(a) for a in d)
    if len(x) == 0 or any(a < 0 for a in d):
        return 0
    return _cached_value(x, d)


def stabilization_corner(x: PointSet) -> MultiDegree:
    """``(t_1 - 1, ..., t_r - 1)`` where ``t_a`` counts distinct coordinates on axis ``a``."""
    if len(x) == 0:
        raise ValueError("the stabilization corner of an empty set is undefined")
    return tuple(t - 1 for t in projection_counts(x))


@dataclass(frozen=True, eq=False)
class HilbertTable:
    box: DegreeBox
    values: np.ndarray
    point_count: int
    projection_counts: tuple[int, ...]

    @property
    def arity(self) -> int:
        return len(self.box.upper)

    @property
    def corner(self) -> MultiDegree | None:
        if self.point_count == 0:
            return None
        return tuple(t - 1 for t in self.projection_counts)

    def __getitem__(self, d: Sequence[int]) -> int:
        return int(self.values[tuple(d)])

    def extended(self, d: Sequence[int]) -> int:
        """Value at any degree, using that ``H(d) = H(min(d, corner))``.

        Only valid where ``min(d, corner)`` lies inside the box.
        """
        if any(a < 0 for a in d):
            return 0
        corner = self.corner
        if corner is None:
            return 0
        clipped = tuple(min(a, c) for a, c in zip(d, corner))
        if clipped not in self.box:
            raise KeyError(f"{tuple(d)} is not determined by this table")
        return self[clipped]

    def to_dict(self) -> dict:
        return {
            "arity": self.arity,
            "box": list(self.box.upper),
            "point_count": self.point_count,
            "t": list(self.projection_counts),
            "stabilization_corner": None if self.corner is None else list(self.corner),
            "values": self.values.tolist(),
        }


def hilbert_table(x: PointSet, box: DegreeBox | Sequence[int]) -> HilbertTable:
    if not isinstance(box, DegreeBox):
        box = DegreeBox(tuple(box))
    _check_arity(x, box.upper)
    values = np.zeros(box.shape, dtype=np.int64)
    for d in box:
        values[d] = hilbert_value(x, d)
    values.setflags(write=False)
    t = projection_counts(x) if len(x) else (0,) * x.arity
    return HilbertTable(box, values, len(x), t)


@dataclass(frozen=True)
class DifferenceSequence:
    """First differences of ``H`` along ``free_axis`` with the other degrees fixed."""

    fixed: MultiDegree
    free_axis: int
    values: tuple[int, ...]

    def degree(self, k: int) -> MultiDegree:
        return insert_axis(self.fixed, self.free_axis, k)


def insert_axis(fixed: Sequence[int], axis: int, k: int) -> MultiDegree:
    fixed = tuple(fixed)
    return fixed[:axis] + (k,) + fixed[axis:]


def difference_sequence(
    x: PointSet, fixed: Sequence[int], free_axis: int, k_max: int | None = None
) -> DifferenceSequence:
    """``d_k = H(fixed, k) - H(fixed, k - 1)`` for ``k = 0..k_max`` (default ``|X|``)."""
    if len(fixed) != x.arity - 1:
        raise ValueError(f"need {x.arity - 1} fixed degrees, got {len(fixed)}")
    if not 0 <= free_axis < x.arity:
        raise IndexError(f"axis {free_axis} out of range for arity {x.arity}")
    if k_max is None:
        k_max = len(x)
    h = [hilbert_value(x, insert_axis(fixed, free_axis, k)) for k in range(-1, k_max + 1)]
    return DifferenceSequence(tuple(fixed), free_axis, tuple(b - a for a, b in zip(h, h[1:])))


def collinear_closed_form(s: int, k: int) -> int:
    """Hilbert function of ``s`` points on one line, at free-axis degree ``k``."""
    if s < 1:
        raise ValueError("s must be positive")
    if k < 0:
        return 0
    return min(k + 1, s)
