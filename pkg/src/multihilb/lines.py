"""Counting points on lines, directly and from the Hilbert function.

A line with free axis ``a`` fixes every coordinate except the one on
factor ``a``. ``r_n`` is the number of such lines holding exactly ``n``
points of ``X``. Reading ``r_n`` back off ``H_X`` uses the slice through
the stabilization corner ``T`` (all axes except ``a``): the second
difference ``2H(T,k) - H(T,k-1) - H(T,k+1)`` equals ``r_{k+1}``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .hilbert import (
    difference_sequence,
    hilbert_value,
    insert_axis,
    stabilization_corner,
)
from .points import LineKey, PointSet, group_by_line, line_sizes


class NegativeMultiplicityError(ArithmeticError):
    """A second difference of ``H`` at the corner came out negative."""


@dataclass(frozen=True)
class RProfile:
    free_axis: int
    counts: Mapping[int, int]

    def __post_init__(self) -> None:
        counts = {int(n): int(c) for n, c in sorted(self.counts.items()) if c}
        if any(n < 1 or c < 0 for n, c in counts.items()):
            raise ValueError(f"invalid profile {counts}")
        object.__setattr__(self, "counts", counts)

    def __getitem__(self, n: int) -> int:
        return self.counts.get(n, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RProfile):
            return NotImplemented
        return self.free_axis == other.free_axis and self.counts == other.counts

    def __hash__(self) -> int:
        return hash((self.free_axis, tuple(self.counts.items())))

    @property
    def point_total(self) -> int:
        return sum(n * c for n, c in self.counts.items())

    @property
    def line_total(self) -> int:
        return sum(self.counts.values())

    def tail(self, k: int) -> int:
        """Number of lines with more than ``k`` points."""
        return sum(c for n, c in self.counts.items() if n > k)

    def truncated_sum(self, k: int) -> int:
        """``sum_n min(n, k + 1) * r_n``."""
        return sum(min(n, k + 1) * c for n, c in self.counts.items())

    def __str__(self) -> str:
        return " ".join(f"r_{n}={c}" for n, c in self.counts.items()) or "(empty)"

    def __add__(self, other: RProfile) -> RProfile:
        if self.free_axis != other.free_axis:
            raise ValueError("profiles for different axes cannot be added")
        return RProfile(self.free_axis, Counter(self.counts) + Counter(other.counts))


def corner_slice(x: PointSet, free_axis: int) -> tuple[int, ...]:
    """The stabilization corner with the free axis removed."""
    corner = stabilization_corner(x)
    return corner[:free_axis] + corner[free_axis + 1 :]


def geometric_r_profile(x: PointSet, free_axis: int) -> RProfile:
    if len(x) == 0:
        raise ValueError("empty point set")
    return RProfile(free_axis, line_sizes(x, free_axis))


def hilbert_r_profile(x: PointSet, free_axis: int, k_max: int | None = None) -> RProfile:
    """Recover ``r_1 .. r_{k_max+1}`` from Hilbert values alone.

    ``k_max`` defaults to ``|X|``; no line holds more than ``|X|`` points.
    """
    if len(x) == 0:
        raise ValueError("empty point set")
    if k_max is None:
        k_max = len(x)
    fixed = corner_slice(x, free_axis)
    h = [hilbert_value(x, insert_axis(fixed, free_axis, k)) for k in range(-1, k_max + 2)]
    counts = {}
    for k in range(k_max + 1):
        r = 2 * h[k + 1] - h[k] - h[k + 2]
        if r < 0:
            raise NegativeMultiplicityError(
                f"second difference {r} at degree {insert_axis(fixed, free_axis, k)}"
            )
        counts[k + 1] = r
    return RProfile(free_axis, counts)


def sum_formula_check(x: PointSet, free_axis: int, k: int) -> tuple[int, int]:
    """``(H(T, k), sum_n min(n, k+1) * r_n)`` with ``r_n`` counted geometrically."""
    fixed = corner_slice(x, free_axis)
    lhs = hilbert_value(x, insert_axis(fixed, free_axis, k))
    rhs = geometric_r_profile(x, free_axis).truncated_sum(k)
    return lhs, rhs


class LineMissesError(ValueError):
    pass


class LineContainsError(ValueError):
    pass


def split_by_line(x: PointSet, line: LineKey) -> tuple[PointSet, PointSet]:
    """``(X minus line, X on line)``."""
    on = [p for p in x if line.contains(p)]
    off = [p for p in x if not line.contains(p)]
    return x.subset(off), x.subset(on)


def glue_additivity_check(x: PointSet, line: LineKey) -> list[tuple[int, int, int]]:
    """``(k, H_X(T,k), H_X1(T,k) + H_X2(T,k))`` for ``k = 0..|X|``.

    ``X2`` is the part of ``X`` on ``line`` and ``X1`` the rest. All three
    values use the corner ``T`` of the full set.
    """
    if len(line.fixed_coords) != x.arity - 1:
        raise ValueError("line and point set have different arity")
    rest, on = split_by_line(x, line)
    if len(on) == 0:
        raise LineMissesError(f"line {line} misses X")
    if len(rest) == 0:
        raise LineContainsError(f"X is contained in line {line}")
    fixed = corner_slice(x, line.free_axis)
    out = []
    for k in range(len(x) + 1):
        d = insert_axis(fixed, line.free_axis, k)
        out.append((k, hilbert_value(x, d), hilbert_value(rest, d) + hilbert_value(on, d)))
    return out


@dataclass
class AxisResult:
    free_axis: int
    geometric: RProfile
    hilbert: RProfile | None
    d_sequence: tuple[int, ...]
    sum_checks: list[tuple[int, int, int]] = field(default_factory=list)
    error: str | None = None

    @property
    def agree(self) -> bool:
        return self.hilbert is not None and self.hilbert == self.geometric

    @property
    def first_discrepancy(self) -> int | None:
        """Smallest multiplicity ``n`` where the two profiles differ."""
        if self.hilbert is None:
            return 1
        keys = sorted(set(self.geometric.counts) | set(self.hilbert.counts))
        return next((n for n in keys if self.geometric[n] != self.hilbert[n]), None)

    @property
    def sum_formula_ok(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.sum_checks)


@dataclass
class TheoremReport:
    point_count: int
    axes: list[AxisResult]

    @property
    def ok(self) -> bool:
        return all(a.agree and a.sum_formula_ok for a in self.axes)


def verify_theorem(x: PointSet) -> TheoremReport:
    """Compare both profiles and the sum formula on every axis.

    Disagreements are recorded in the report, never raised.
    """
    if len(x) == 0:
        raise ValueError("empty point set")
    results = []
    for axis in range(x.arity):
        geo = geometric_r_profile(x, axis)
        fixed = corner_slice(x, axis)
        dseq = difference_sequence(x, fixed, axis, len(x)).values
        try:
            hil, err = hilbert_r_profile(x, axis), None
        except NegativeMultiplicityError as exc:
            hil, err = None, str(exc)
        sums = [(k, *sum_formula_check(x, axis, k)) for k in range(len(x) + 1)]
        results.append(AxisResult(axis, geo, hil, dseq, sums, err))
    return TheoremReport(len(x), results)


def lines_meeting(x: PointSet, free_axis: int) -> list[LineKey]:
    return list(group_by_line(x, free_axis))
