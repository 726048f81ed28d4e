"""Points of (P^1)^r with exact rational coordinates.

A point is stored as r canonical homogeneous pairs ``[u:v]``: if ``u`` is
nonzero it is scaled to 1, otherwise ``v`` is. Two points are equal exactly
when their canonical forms agree, so nothing here ever compares with a
tolerance.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Sequence

MIN_ARITY = 2


class InputError(ValueError):
    """Base class for malformed or invalid point input."""


class ZeroCoordinateError(InputError):
    pass


class PointParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"parse error at line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DuplicatePointError(InputError):
    def __init__(self, point: Point, first: int, second: int):
        super().__init__(
            f"duplicate point {point}: entries {first} and {second} are equal"
        )
        self.point = point
        self.indices = (first, second)


class MixedArityError(InputError):
    pass


@dataclass(frozen=True, order=True)
class ProjCoordinate:
    """A point ``[u:v]`` of one P^1 factor, always in canonical form."""

    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        u, v = Fraction(self.u), Fraction(self.v)
        if u == 0 and v == 0:
            raise ZeroCoordinateError("[0:0] is not a point of P^1")
        if u != 0:
            u, v = Fraction(1), v / u
        else:
            v = Fraction(1)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @classmethod
    def affine(cls, c) -> ProjCoordinate:
        """The coordinate ``[1:c]``."""
        return cls(Fraction(1), Fraction(c))

    def __str__(self) -> str:
        return f"{self.u}:{self.v}"


def canonicalize(c: ProjCoordinate | tuple) -> ProjCoordinate:
    """Return the canonical representative of ``[u:v]``.

    ``ProjCoordinate`` canonicalizes on construction, so this is the
    identity on coordinates and a constructor for raw ``(u, v)`` pairs.
    """
    if isinstance(c, ProjCoordinate):
        return c
    u, v = c
    return ProjCoordinate(Fraction(u), Fraction(v))


@dataclass(frozen=True)
class Point:
    coords: tuple[ProjCoordinate, ...]

    def __post_init__(self) -> None:
        coords = tuple(canonicalize(c) for c in self.coords)
        if len(coords) < MIN_ARITY:
            raise MixedArityError(f"points need at least {MIN_ARITY} factors, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def affine(cls, *values) -> Point:
        """The point ``[1:c_1] x ... x [1:c_r]``."""
        return cls(tuple(ProjCoordinate.affine(c) for c in values))

    @property
    def arity(self) -> int:
        return len(self.coords)

    def drop(self, axis: int) -> tuple[ProjCoordinate, ...]:
        return self.coords[:axis] + self.coords[axis + 1 :]

    def __str__(self) -> str:
        return " | ".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class PointSet:
    """A finite set of distinct points of a common arity, in input order."""

    points: tuple[Point, ...]
    arity: int

    def __post_init__(self) -> None:
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if self.arity < MIN_ARITY:
            raise MixedArityError(f"arity must be at least {MIN_ARITY}")
        seen: dict[Point, int] = {}
        for idx, p in enumerate(points):
            if p.arity != self.arity:
                raise MixedArityError(
                    f"point {idx} has {p.arity} factors, expected {self.arity}"
                )
            if p in seen:
                raise DuplicatePointError(p, seen[p], idx)
            seen[p] = idx
        object.__setattr__(self, "_hash", hash((points, self.arity)))

    def __hash__(self) -> int:
        # used as a cache key on every Hilbert value lookup
        return self._hash

    @classmethod
    def of(cls, points: Iterable[Point], arity: int | None = None) -> PointSet:
        points = tuple(points)
        if arity is None:
            if not points:
                raise InputError("cannot infer the arity of an empty point set")
            arity = points[0].arity
        return cls(points, arity)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def subset(self, points: Iterable[Point]) -> PointSet:
        return PointSet(tuple(points), self.arity)

    def same_points(self, other: PointSet) -> bool:
        return self.arity == other.arity and set(self.points) == set(other.points)


@dataclass(frozen=True, order=True)
class LineKey:
    """One line with a single free axis, named by its fixed coordinates."""

    free_axis: int
    fixed_coords: tuple[ProjCoordinate, ...]

    def contains(self, p: Point) -> bool:
        return p.drop(self.free_axis) == self.fixed_coords

    def __str__(self) -> str:
        parts = [str(c) for c in self.fixed_coords]
        parts.insert(self.free_axis, "*")
        return " | ".join(parts)


def projection_count(x: PointSet, axis: int) -> int:
    """Number of distinct coordinates of ``x`` on factor ``axis``."""
    _check_axis(x, axis)
    return len({p.coords[axis] for p in x})


def projection_counts(x: PointSet) -> tuple[int, ...]:
    return tuple(projection_count(x, a) for a in range(x.arity))


def group_by_line(x: PointSet, free_axis: int) -> dict[LineKey, PointSet]:
    """Partition ``x`` by the lines through its points with ``free_axis`` free.

    Only lines that meet ``x`` appear; groups come out in order of first
    appearance.
    """
    _check_axis(x, free_axis)
    groups: dict[LineKey, list[Point]] = {}
    for p in x:
        groups.setdefault(LineKey(free_axis, p.drop(free_axis)), []).append(p)
    return {key: x.subset(pts) for key, pts in groups.items()}


def line_sizes(x: PointSet, free_axis: int) -> Counter:
    """Histogram: multiplicity n -> number of lines holding exactly n points."""
    return Counter(len(g) for g in group_by_line(x, free_axis).values())


def _check_axis(x: PointSet, axis: int) -> None:
    if not 0 <= axis < x.arity:
        raise IndexError(f"axis {axis} out of range for arity {x.arity}")


# -- text formats -----------------------------------------------------------

_NUMBER = re.compile(r"\s*([+-]?\d+(?:/\d+)?)\s*")


def _parse_number(text: str, line: int, column: int) -> Fraction:
    m = _NUMBER.fullmatch(text)
    if not m:
        raise PointParseError(f"expected an integer or p/q, got {text.strip()!r}", line, column)
    try:
        return Fraction(m.group(1))
    except ZeroDivisionError:
        raise PointParseError(f"zero denominator in {m.group(1)!r}", line, column) from None


def _parse_plain(text: str) -> list[tuple[Point, int]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        coords = []
        col = 1
        for factor in body.split("|"):
            if factor.count(":") != 1:
                raise PointParseError(f"factor {factor.strip()!r} is not of the form u:v", lineno, col)
            left, right = factor.split(":")
            u = _parse_number(left, lineno, col)
            v = _parse_number(right, lineno, col + len(left) + 1)
            try:
                coords.append(ProjCoordinate(u, v))
            except ZeroCoordinateError as exc:
                raise PointParseError(str(exc), lineno, col) from None
            col += len(factor) + 1
        try:
            out.append((Point(tuple(coords)), lineno))
        except MixedArityError as exc:
            raise PointParseError(str(exc), lineno, 1) from None
    return out


def _parse_json(text: str) -> list[tuple[Point, int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, list):
        raise PointParseError("top level must be an array of points", 1, 1)
    out = []
    for idx, raw_point in enumerate(data):
        where = f"point {idx}"
        if not isinstance(raw_point, list):
            raise InputError(f"{where}: expected an array of [u, v] pairs")
        coords = []
        for pair in raw_point:
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(s, str) for s in pair)):
                raise InputError(f"{where}: each factor must be a two-element array of strings")
            try:
                u, v = (Fraction(s.strip()) for s in pair)
            except (ValueError, ZeroDivisionError):
                raise InputError(f"{where}: bad rational in {pair!r}") from None
            coords.append(ProjCoordinate(u, v))
        try:
            out.append((Point(tuple(coords)), idx))
        except MixedArityError as exc:
            raise InputError(f"{where}: {exc}") from None
    return out


def parse_point_set(text: str, format: Literal["plain", "json"] = "plain") -> PointSet:
    """Parse points, canonicalize them and check arity and distinctness.

    The arity is taken from the first point. An input with no points is an
    error.
    """
    if format == "plain":
        parsed = _parse_plain(text)
    elif format == "json":
        parsed = _parse_json(text)
    else:
        raise ValueError(f"unknown format {format!r}")
    if not parsed:
        raise PointParseError("no points in input", 1, 1)
    arity = parsed[0][0].arity
    for p, where in parsed:
        if p.arity != arity:
            raise MixedArityError(
                f"{'line' if format == 'plain' else 'point'} {where}: "
                f"{p.arity} factors, expected {arity}"
            )
    return PointSet(tuple(p for p, _ in parsed), arity)


def format_point_set(x: PointSet, format: Literal["plain", "json"] = "plain") -> str:
    if format == "plain":
        return "".join(f"{p}\n" for p in x)
    if format == "json":
        return json.dumps([[[str(c.u), str(c.v)] for c in p.coords] for p in x]) + "\n"
    raise ValueError(f"unknown format {format!r}")


def apply_coordinate_change(x: PointSet, axis: int, matrix: Sequence[Sequence]) -> PointSet:
    """Apply the invertible map ``[u:v] -> [a u + b v : c u + d v]`` on one factor."""
    (a, b), (c, d) = [[Fraction(e) for e in row] for row in matrix]
    if a * d - b * c == 0:
        raise ValueError("coordinate change must be invertible")
    moved = []
    for p in x:
        q = p.coords[axis]
        coords = list(p.coords)
        coords[axis] = ProjCoordinate(a * q.u + b * q.v, c * q.u + d * q.v)
        moved.append(Point(tuple(coords)))
    return x.subset(moved)


def permute_axes(x: PointSet, order: Sequence[int]) -> PointSet:
    """Reorder the factors of every point: new axis ``i`` is old axis ``order[i]``."""
    if sorted(order) != list(range(x.arity)):
        raise ValueError(f"{order!r} is not a permutation of the axes")
    return x.subset(Point(tuple(p.coords[a] for a in order)) for p in x)
