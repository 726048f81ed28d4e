"""Builtin point sets and seeded random configurations."""

from __future__ import annotations

import random

from .points import Point, PointSet, ProjCoordinate

# Index triples (i, j, k) of the points [1:i] x [1:j] x [1:k].
_EXAMPLES = {
    "3.3": ["111", "112", "113", "121", "122", "123", "212", "211", "311", "221", "131"],
    "3.5": ["111", "121", "122", "132", "133", "211", "221", "222", "232", "233"],
}


def builtin_ids() -> list[str]:
    return sorted(_EXAMPLES)


def builtin_example(example_id: str) -> PointSet:
    try:
        triples = _EXAMPLES[example_id]
    except KeyError:
        raise KeyError(f"unknown example {example_id!r}; choose from {builtin_ids()}") from None
    return PointSet.of(Point.affine(*(int(c) for c in t)) for t in triples)


def random_point_set(
    arity: int, count: int, pool: int, seed: int, allow_infinity: bool = False
) -> PointSet:
    """``count`` distinct points with every coordinate drawn from ``[1:0] .. [1:pool-1]``.

    With ``allow_infinity`` the point ``[0:1]`` joins the pool. Sampling is
    by rejection and fully determined by ``seed``.
    """
    if arity < 2:
        raise ValueError("arity must be at least 2")
    if count < 1 or pool < 1:
        raise ValueError("count and pool must be positive")
    choices = [ProjCoordinate.affine(c) for c in range(pool)]
    if allow_infinity:
        choices.append(ProjCoordinate(0, 1))
    if count > len(choices) ** arity:
        raise ValueError(
            f"cannot draw {count} distinct points from {len(choices)}^{arity} = "
            f"{len(choices) ** arity} candidates"
        )
    rng = random.Random(seed)
    seen: dict[Point, None] = {}
    while len(seen) < count:
        p = Point(tuple(rng.choice(choices) for _ in range(arity)))
        seen.setdefault(p, None)
    return PointSet.of(seen, arity)


def collinear_point_set(arity: int, count: int, free_axis: int | None = None) -> PointSet:
    """``count`` points on one line: fixed coordinates ``[1:1]``, free one varies."""
    if free_axis is None:
        free_axis = arity - 1
    free = [ProjCoordinate(0, 1)] + [ProjCoordinate.affine(c) for c in range(count - 1)]
    pts = []
    for c in free:
        coords = [ProjCoordinate.affine(1)] * arity
        coords[free_axis] = c
        pts.append(Point(tuple(coords)))
    return PointSet.of(pts, arity)
