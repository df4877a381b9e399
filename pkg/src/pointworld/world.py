"""Point worlds: finite labeled points joined by weighted connections.

Distances are exact integers. ``None`` stands for an unreachable target.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .errors import (
    BadWeight,
    DuplicateConnection,
    DuplicatePoint,
    InvalidWalk,
    SelfLoop,
    UnknownPoint,
    WorldSyntaxError,
)

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")

Distance = Optional[int]
UNREACHABLE: Distance = None


@dataclass(frozen=True, order=True)
class Connection:
    source: str
    target: str
    weight: int = 1
    directed: bool = False

    def pair(self) -> tuple[str, str]:
        if self.directed:
            return (self.source, self.target)
        return tuple(sorted((self.source, self.target)))  # type: ignore[return-value]


@dataclass(frozen=True, order=True)
class Walk:
    """A sequence of points together with its total traversed weight."""

    points: tuple[str, ...]
    length: int = 0

    def __post_init__(self) -> None:
        if not self.points:
            raise InvalidWalk("a walk needs at least one point")

    @property
    def start(self) -> str:
        return self.points[0]

    @property
    def end(self) -> str:
        return self.points[-1]

    def __len__(self) -> int:
        return len(self.points)

    def reversed(self) -> "Walk":
        return Walk(self.points[::-1], self.length)

    def __str__(self) -> str:
        return "-".join(self.points)


@dataclass(frozen=True)
class World:
    name: str
    points: tuple[str, ...]
    connections: tuple[Connection, ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for p in self.points:
            if not LABEL_RE.match(p):
                raise WorldSyntaxError(f"bad point label {p!r}")
            if p in seen:
                raise DuplicatePoint(f"duplicate point {p}")
            seen.add(p)
        ledger = _PairLedger()
        for c in self.connections:
            _check_connection(c, seen, ledger)

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def is_directed(self) -> bool:
        return any(c.directed for c in self.connections)

    @cached_property
    def is_unit(self) -> bool:
        return all(c.weight == 1 for c in self.connections)

    @cached_property
    def _out(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {p: {} for p in self.points}
        for c in self.connections:
            out[c.source][c.target] = c.weight
            if not c.directed:
                out[c.target][c.source] = c.weight
        return out

    def successors(self, p: str) -> dict[str, int]:
        """Points reachable from ``p`` in one hop, mapped to the hop weight."""
        self._require(p)
        return self._out[p]

    def weight(self, a: str, b: str) -> Optional[int]:
        """Weight of the hop a -> b, or None if a and b are not connected that way."""
        return self._out.get(a, {}).get(b)

    def _require(self, *labels: str) -> None:
        for p in labels:
            if p not in self._out:
                raise UnknownPoint(f"unknown point {p}")

    @cached_property
    def _table(self) -> dict[str, dict[str, int]]:
        return {p: _dijkstra(self._out, p) for p in self.points}

    def distance(self, u: str, v: str) -> Distance:
        self._require(u, v)
        return self._table[u].get(v)

    def geodesics(self, u: str, v: str) -> list[Walk]:
        self._require(u, v)
        return list(self._geodesics(u, v))

    def _geodesics(self, u: str, v: str) -> tuple[Walk, ...]:
        cache = self.__dict__.setdefault("_geo_cache", {})
        key = (u, v)
        if key not in cache:
            cache[key] = tuple(sorted(_all_shortest(self._out, self._table, u, v)))
        return cache[key]

    def walk(self, points: Iterable[str]) -> Walk:
        """Build a Walk from a point sequence, checking every hop exists."""
        pts = tuple(points)
        if not pts:
            raise InvalidWalk("empty point sequence")
        self._require(*pts)
        total = 0
        for a, b in zip(pts, pts[1:]):
            w = self.weight(a, b)
            if w is None:
                raise InvalidWalk(f"no connection {a} -> {b} in world {self.name}")
            total += w
        return Walk(pts, total)

    def is_geodesic(self, walk: Walk | Iterable[str]) -> bool:
        if not isinstance(walk, Walk):
            walk = self.walk(walk)
        else:
            checked = self.walk(walk.points)
            if checked.length != walk.length:
                raise InvalidWalk(f"walk {walk} has length {checked.length}, not {walk.length}")
        return walk.length == self.distance(walk.start, walk.end)

    def relabel(self, mapping: dict[str, str], name: str | None = None) -> "World":
        conns = tuple(
            Connection(mapping[c.source], mapping[c.target], c.weight, c.directed)
            for c in self.connections
        )
        return World(name or self.name, tuple(mapping[p] for p in self.points), conns)


class _PairLedger:
    """Tracks which point pairs already carry a connection."""

    def __init__(self) -> None:
        self.links: set[frozenset[str]] = set()
        self.arcs: set[tuple[str, str]] = set()

    def add(self, c: Connection) -> None:
        pair = frozenset((c.source, c.target))
        if pair in self.links:
            raise DuplicateConnection(f"duplicate connection between {c.source} and {c.target}")
        if c.directed:
            if (c.source, c.target) in self.arcs:
                raise DuplicateConnection(f"duplicate arc {c.source} -> {c.target}")
            self.arcs.add((c.source, c.target))
        else:
            if (c.source, c.target) in self.arcs or (c.target, c.source) in self.arcs:
                raise DuplicateConnection(f"duplicate connection between {c.source} and {c.target}")
            self.links.add(pair)


def _check_connection(c: Connection, points: set[str], ledger: _PairLedger) -> None:
    for end in (c.source, c.target):
        if end not in points:
            raise UnknownPoint(f"unknown point {end}")
    if c.source == c.target:
        raise SelfLoop(f"self-loop at {c.source}")
    if isinstance(c.weight, bool) or not isinstance(c.weight, int) or c.weight < 1:
        raise BadWeight(f"weight must be a positive integer, got {c.weight!r}")
    ledger.add(c)


def _dijkstra(out: dict[str, dict[str, int]], source: str) -> dict[str, int]:
    dist = {source: 0}
    heap = [(0, source)]
    while heap:
        d, p = heapq.heappop(heap)
        if d > dist[p]:
            continue
        for q, w in out[p].items():
            nd = d + w
            if q not in dist or nd < dist[q]:
                dist[q] = nd
                heapq.heappush(heap, (nd, q))
    return dist


def _all_shortest(
    out: dict[str, dict[str, int]], table: dict[str, dict[str, int]], u: str, v: str
) -> Iterator[Walk]:
    target = table[u].get(v)
    if target is None:
        return
    du = table[u]
    path = [u]

    def extend(p: str) -> Iterator[Walk]:
        if p == v:
            yield Walk(tuple(path), target)
            return
        for q, w in out[p].items():
            dq = du[p] + w
            rest = table[q].get(v)
            if dq == du[q] and rest is not None and dq + rest == target:
                path.append(q)
                yield from extend(q)
                path.pop()

    yield from extend(u)


# --------------------------------------------------------------- file format

def parse_world(text: str, source: str | None = None) -> World:
    name = "world"
    points: tuple[str, ...] | None = None
    conns: list[Connection] = []
    seen_content = False
    ledger = _PairLedger()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head, args = words[0], words[1:]
        try:
            if head == "world":
                if seen_content:
                    raise WorldSyntaxError("'world' must be the first line")
                if len(args) != 1 or not LABEL_RE.match(args[0]):
                    raise WorldSyntaxError("expected 'world <name>'")
                name = args[0]
            elif head == "points":
                if points is not None:
                    raise WorldSyntaxError("only one 'points' line is allowed")
                seen_pts: set[str] = set()
                for p in args:
                    if not LABEL_RE.match(p):
                        raise WorldSyntaxError(f"bad point label {p!r}")
                    if p in seen_pts:
                        raise DuplicatePoint(f"duplicate point {p}")
                    seen_pts.add(p)
                points = tuple(args)
            elif head in ("edge", "arc"):
                if len(args) not in (2, 3):
                    raise WorldSyntaxError(f"expected '{head} <a> <b> [weight]'")
                if points is None:
                    raise UnknownPoint(f"point {args[0]} used before 'points' line")
                weight = 1
                if len(args) == 3:
                    if not re.fullmatch(r"[0-9]+", args[2]) or int(args[2]) < 1:
                        raise BadWeight(f"weight must be a positive integer, got {args[2]!r}")
                    weight = int(args[2])
                c = Connection(args[0], args[1], weight, head == "arc")
                _check_connection(c, set(points), ledger)
                conns.append(c)
            else:
                raise WorldSyntaxError(f"unknown directive {head!r}")
        except WorldSyntaxError as exc:
            raise exc.at(lineno, source)
        except (DuplicatePoint, UnknownPoint, SelfLoop, DuplicateConnection, BadWeight) as exc:
            raise exc.at(lineno, source)
        seen_content = True
    if points is None:
        raise WorldSyntaxError("missing 'points' line").at(None, source)
    return World(name, points, tuple(conns))


def format_world(world: World) -> str:
    lines = [f"world {world.name}", "points " + " ".join(world.points)]
    for c in world.connections:
        verb = "arc" if c.directed else "edge"
        tail = f" {c.weight}" if c.weight != 1 else ""
        lines.append(f"{verb} {c.source} {c.target}{tail}")
    return "\n".join(lines) + "\n"


def distance(world: World, u: str, v: str) -> Distance:
    return world.distance(u, v)


def geodesics(world: World, u: str, v: str) -> list[Walk]:
    return world.geodesics(u, v)


def is_geodesic(world: World, walk: Walk | Iterable[str]) -> bool:
    return world.is_geodesic(walk)
