"""Straight-line segments (geodesics) and maximal lines."""

from __future__ import annotations

import enum
from itertools import combinations, permutations

from .errors import DirectedUnsupported
from .world import Walk, World


class LineKind(str, enum.Enum):
    P = "P"  # single-point segments allowed
    N = "N"  # at least two points


def _endpoint_pairs(world: World):
    if world.is_directed:
        return permutations(world.points, 2)
    return combinations(sorted(world.points), 2)


def iter_segments(world: World):
    """Yield N-segments lazily, pair by pair in sorted order.

    In undirected worlds each segment is produced once, starting from its
    lexicographically smaller endpoint.
    """
    for u, v in _endpoint_pairs(world):
        yield from world._geodesics(u, v)


def straight_segments(world: World, kind: LineKind | str = LineKind.N) -> list[Walk]:
    kind = LineKind(kind)
    segs = list(iter_segments(world))
    if kind is LineKind.P:
        segs.extend(Walk((p,), 0) for p in world.points)
    return sorted(segs)


def is_subwalk(inner: Walk, outer: Walk, undirected: bool = True) -> bool:
    """True when inner's points occur contiguously in outer (or in outer reversed)."""
    if _contains(outer.points, inner.points):
        return True
    return undirected and _contains(outer.points[::-1], inner.points)


def _contains(hay: tuple[str, ...], needle: tuple[str, ...]) -> bool:
    k = len(needle)
    return any(hay[i : i + k] == needle for i in range(len(hay) - k + 1))


def maximal_lines(world: World) -> list[Walk]:
    if world.is_directed:
        raise DirectedUnsupported("maximal lines are only defined for undirected worlds")
    segs = straight_segments(world, LineKind.N)
    return [
        s
        for s in segs
        if not any(len(t) > len(s) and is_subwalk(s, t) for t in segs)
    ]
