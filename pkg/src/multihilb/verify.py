"""The full invariant suite run by ``multihilb verify``.

Each check yields a :class:`Check`; a failing check carries the degree
(or line) where it first broke.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

from .hilbert import collinear_closed_form, hilbert_value, insert_axis, stabilization_corner
from .lines import (
    corner_slice,
    geometric_r_profile,
    glue_additivity_check,
    split_by_line,
    verify_theorem,
)
from .points import PointSet, group_by_line, projection_count


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: list | str | None = None


@dataclass
class VerificationReport:
    point_count: int
    arity: int
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "point_count": self.point_count,
            "arity": self.arity,
            "checks": [asdict(c) for c in self.checks],
        }


def _stabilization_offsets(n: int) -> list[tuple[int, ...]]:
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return units + [(1,) * n, (2,) * n, (3,) * n]


def run_checks(x: PointSet) -> VerificationReport:
    n = len(x)
    r = x.arity
    corner = stabilization_corner(x)
    checks: list[Check] = []

    theorem = verify_theorem(x)
    for res in theorem.axes:
        a = res.free_axis
        wit = None
        if not res.agree:
            wit = f"r_{res.first_discrepancy}"
        checks.append(Check(
            f"line-profile[axis={a}]", res.agree,
            f"hilbert {res.hilbert} / geometric {res.geometric}"
            + (f" ({res.error})" if res.error else ""),
            wit,
        ))

        bad = next(((k, lhs, rhs) for k, lhs, rhs in res.sum_checks if lhs != rhs), None)
        checks.append(Check(
            f"sum-formula[axis={a}]", bad is None,
            "H(T,k) = sum_n min(n,k+1) r_n for k = 0..|X|",
            None if bad is None else list(insert_axis(corner_slice(x, a), a, bad[0])),
        ))

        geo = res.geometric
        d = res.d_sequence
        bad_k = next((k for k, v in enumerate(d) if v != geo.tail(k)), None)
        checks.append(Check(
            f"d-sequence-tail[axis={a}]", bad_k is None,
            "d_k = number of lines with more than k points",
            None if bad_k is None else list(insert_axis(corner_slice(x, a), a, bad_k)),
        ))
        bad_k = next(
            (k for k in range(len(d)) if d[k] < 0 or (k + 1 < len(d) and d[k + 1] > d[k])),
            None,
        )
        checks.append(Check(
            f"d-sequence-monotone[axis={a}]", bad_k is None,
            f"d = {list(d)} nonnegative and nonincreasing",
            None if bad_k is None else list(insert_axis(corner_slice(x, a), a, bad_k)),
        ))
        ok = geo.point_total == n and sum(d) == n
        checks.append(Check(
            f"conservation[axis={a}]", ok,
            f"sum n r_n = {geo.point_total}, sum d_k = {sum(d)}, |X| = {n}",
        ))

        fixed = corner_slice(x, a)
        bad_deg = None
        for k in range(n + 1):
            ref = hilbert_value(x, insert_axis(fixed, a, k))
            for off in _stabilization_offsets(r - 1):
                deg = insert_axis(tuple(f + o for f, o in zip(fixed, off)), a, k)
                if hilbert_value(x, deg) != ref:
                    bad_deg = list(deg)
                    break
            if bad_deg:
                break
        checks.append(Check(
            f"stabilization[axis={a}]", bad_deg is None,
            "H is constant beyond the corner on the non-free axes", bad_deg,
        ))

        t = projection_count(x, a)
        bad_i = next(
            (i for i in range(t + 2)
             if hilbert_value(x, insert_axis((0,) * (r - 1), a, i)) != min(i + 1, t)),
            None,
        )
        checks.append(Check(
            f"axis-slice[axis={a}]", bad_i is None,
            f"H(i e_a) = min(i+1, t_a) with t_a = {t}",
            None if bad_i is None else list(insert_axis((0,) * (r - 1), a, bad_i)),
        ))

        groups = group_by_line(x, a)
        if len(groups) == 1:
            bad_deg = None
            for deg in itertools.product(*(range(3 if b != a else n + 3) for b in range(r))):
                if hilbert_value(x, deg) != collinear_closed_form(n, deg[a]):
                    bad_deg = list(deg)
                    break
            checks.append(Check(
                f"collinear-closed-form[axis={a}]", bad_deg is None,
                "H(d) = min(d_a + 1, |X|) for a set on one line", bad_deg,
            ))
        else:
            for line in groups:
                rows = glue_additivity_check(x, line)
                bad = next((k for k, h, s in rows if h != s), None)
                rest, on = split_by_line(x, line)
                profiles_add = (
                    geometric_r_profile(rest, a) + geometric_r_profile(on, a)
                    == geometric_r_profile(x, a)
                )
                checks.append(Check(
                    f"glue-additivity[line={line}]", bad is None and profiles_add,
                    "H_X(T,k) = H_X1(T,k) + H_X2(T,k); profiles add",
                    None if bad is None else list(insert_axis(fixed, a, bad)),
                ))

    full = hilbert_value(x, corner)
    checks.append(Check(
        "corner-value", full == n, f"H(corner) = {full}, |X| = {n}",
        None if full == n else list(corner),
    ))
    return VerificationReport(n, r, checks)
