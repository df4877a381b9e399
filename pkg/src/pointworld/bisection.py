"""A-bisection (at a point) and B-bisection (at a connection) of segments."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidWalk, NonUnitWeights, NotASegment
from .lines import LineKind, iter_segments
from .world import Walk, World


class Halves(str, enum.Enum):
    P = "P"  # a half may be a single point
    N = "N"  # each half needs two points


def _prefix_weights(world: World, segment: Walk | tuple[str, ...]) -> tuple[Walk, list[int]]:
    pts = segment.points if isinstance(segment, Walk) else tuple(segment)
    try:
        walk = world.walk(pts)
    except InvalidWalk as exc:
        raise NotASegment(str(exc)) from exc
    if len(walk) < 2 or not world.is_geodesic(walk):
        raise NotASegment(f"{walk} is not a straight segment of {world.name}")
    steps = [world.weight(a, b) for a, b in zip(pts, pts[1:])]
    return walk, [0, *accumulate(steps)]


def a_bisection_points(world: World, segment: Walk) -> list[tuple[int, str]]:
    """Interior positions splitting the segment into two equal-weight halves."""
    walk, pre = _prefix_weights(world, segment)
    total = pre[-1]
    return [(m, walk.points[m]) for m in range(1, len(walk) - 1) if 2 * pre[m] == total]


def b_bisection_cuts(world: World, segment: Walk, halves: Halves | str = Halves.P) -> list[int]:
    """Cut indices m (dropping the hop p_m -> p_m+1) leaving equal-weight halves."""
    halves = Halves(halves)
    walk, pre = _prefix_weights(world, segment)
    k = len(walk) - 1
    total = pre[-1]
    cuts = []
    for m in range(k):
        if pre[m] != total - pre[m + 1]:
            continue
        if halves is Halves.N and (m < 1 or m + 1 > k - 1):
            continue
        cuts.append(m)
    return cuts


def all_segments_a_bisectable(world: World) -> bool:
    return all(a_bisection_points(world, s) for s in iter_segments(world))


def all_segments_b_bisectable(world: World, halves: Halves | str = Halves.P) -> bool:
    return all(b_bisection_cuts(world, s, halves) for s in iter_segments(world))


@dataclass(frozen=True)
class SegmentRow:
    segment: Walk
    a: bool
    b_p: bool
    b_n: bool

    @property
    def points(self) -> int:
        return len(self.segment)

    def parity_ok(self) -> bool:
        odd = self.points % 2 == 1
        return self.a == odd and self.b_p == (not odd)

    def __str__(self) -> str:
        yn = lambda flag: "yes" if flag else "no"  # noqa: E731
        return (
            f"SEG {self.segment} points={self.points} "
            f"A={yn(self.a)} B/P={yn(self.b_p)} B/N={yn(self.b_n)}"
        )


@dataclass(frozen=True)
class Report:
    rows: tuple[SegmentRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.parity_ok() for r in self.rows)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def render(self) -> str:
        lines = [str(r) for r in self.rows]
        lines.append(f"VERDICT {self.verdict}")
        return "\n".join(lines) + "\n"


def parity_report(world: World) -> Report:
    if not world.is_unit:
        raise NonUnitWeights(f"parity report needs unit weights; {world.name} has weighted connections")
    rows = []
    for seg in sorted(iter_segments(world)):
        rows.append(
            SegmentRow(
                seg,
                bool(a_bisection_points(world, seg)),
                bool(b_bisection_cuts(world, seg, Halves.P)),
                bool(b_bisection_cuts(world, seg, Halves.N)),
            )
        )
    return Report(tuple(rows))


__all__ = [
    "Halves",
    "LineKind",
    "Report",
    "SegmentRow",
    "a_bisection_points",
    "all_segments_a_bisectable",
    "all_segments_b_bisectable",
    "b_bisection_cuts",
    "parity_report",
]
