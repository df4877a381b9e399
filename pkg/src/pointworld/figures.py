"""Circles and triangles inside point worlds."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product

from .errors import UnknownPoint, ZeroRadiusUnderNZ
from .lines import iter_segments
from .world import Walk, World


class ZeroPolicy(str, enum.Enum):
    NZ = "NZ"  # radius >= 1
    Z = "Z"  # radius 0 allowed


class TriangleKind(str, enum.Enum):
    C = "C"  # collinear vertex triples allowed
    NC = "NC"  # no geodesic may hold all three vertices


@dataclass(frozen=True)
class CircleSpec:
    center: str
    radius: int
    zero_policy: ZeroPolicy = ZeroPolicy.NZ

    def __post_init__(self) -> None:
        object.__setattr__(self, "zero_policy", ZeroPolicy(self.zero_policy))
        if self.radius < 0:
            raise ValueError(f"radius must be nonnegative, got {self.radius}")
        if self.radius == 0 and self.zero_policy is ZeroPolicy.NZ:
            raise ZeroRadiusUnderNZ("radius 0 needs the Z policy")


def circle_points(world: World, spec: CircleSpec) -> frozenset[str]:
    """Points whose distance from the center is exactly the radius."""
    if spec.center not in world.points:
        raise UnknownPoint(f"unknown point {spec.center}")
    return frozenset(x for x in world.points if world.distance(spec.center, x) == spec.radius)


def circles_through(world: World, u: str, v: str) -> list[tuple[str, int]]:
    if u == v:
        raise ValueError("circles_through needs two distinct points")
    found = []
    for c in sorted(world.points):
        r = world.distance(c, u)
        if r is not None and r >= 1 and world.distance(c, v) == r:
            found.append((c, r))
    return found


@dataclass(frozen=True, order=True)
class TriangleSpec:
    vertices: tuple[str, str, str]
    sides: tuple[Walk, Walk, Walk]
    kind: TriangleKind = TriangleKind.C

    @property
    def lengths(self) -> tuple[int, int, int]:
        return tuple(s.length for s in self.sides)  # type: ignore[return-value]

    def __str__(self) -> str:
        sides = " ".join(str(s) for s in self.sides)
        lengths = ",".join(str(x) for x in self.lengths)
        return f"TRI {','.join(self.vertices)} SIDES {sides} LENGTHS {lengths}"


def _side_choices(world: World, a: str, b: str) -> list[Walk]:
    if not world.is_directed:
        return world.geodesics(a, b)
    return sorted(set(world.geodesics(a, b)) | set(world.geodesics(b, a)))


def is_collinear(world: World, triple: tuple[str, str, str]) -> bool:
    wanted = set(triple)
    return any(wanted <= set(g.points) for g in _all_geodesics(world))


def _all_geodesics(world: World) -> tuple[Walk, ...]:
    cache = world.__dict__
    if "_all_geo" not in cache:
        cache["_all_geo"] = tuple(iter_segments(world))
    return cache["_all_geo"]


def triangles(world: World, kind: TriangleKind | str = TriangleKind.C) -> list[TriangleSpec]:
    kind = TriangleKind(kind)
    out = []
    for triple in combinations(sorted(world.points), 3):
        x, y, z = triple
        if kind is TriangleKind.NC and is_collinear(world, triple):
            continue
        choices = [_side_choices(world, x, y), _side_choices(world, x, z), _side_choices(world, y, z)]
        for sides in product(*choices):
            out.append(TriangleSpec(triple, tuple(sides), kind))  # type: ignore[arg-type]
    return sorted(out)


def equilateral_triangles(world: World, kind: TriangleKind | str = TriangleKind.C) -> list[TriangleSpec]:
    return [t for t in triangles(world, kind) if len(set(t.lengths)) == 1]


def is_isosceles(triangle: TriangleSpec) -> bool:
    return len(set(triangle.lengths)) < 3
