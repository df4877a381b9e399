"""Named world families and exhaustive search over small unit worlds."""

from __future__ import annotations

import enum
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator

from .bisection import all_segments_a_bisectable, all_segments_b_bisectable
from .errors import BadFamilyParameter, NonUnitWeights, TooLarge
from .figures import circles_through, is_collinear
from .world import Connection, World

DEFAULT_MAX_POINTS = 6
HARD_MAX_POINTS = 8


class Family(str, enum.Enum):
    PATH = "path"
    NECKLACE = "necklace"
    EDGELESS = "edgeless"
    PAIRS = "pairs"
    CLIQUE = "clique"
    DIRECTED_DEMO = "directed_demo"


@dataclass(frozen=True)
class WorldFamily:
    family: Family
    n: int = 4
    first: str | None = None  # first point label; necklaces start at D by default

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))


def _labels(n: int, first: str) -> tuple[str, ...]:
    letters = string.ascii_uppercase
    if first not in letters:
        raise BadFamilyParameter(f"first label must be an uppercase letter, got {first!r}")
    start = letters.index(first)
    if start + n > len(letters):
        raise BadFamilyParameter(f"cannot label {n} points starting from {first}")
    return tuple(letters[start : start + n])


def make_family(spec: WorldFamily) -> World:
    fam, n = spec.family, spec.n
    if fam is Family.DIRECTED_DEMO:
        return World(
            "directed_demo",
            ("A", "B", "C", "D"),
            (
                Connection("A", "B", 1, True),
                Connection("B", "C", 1, True),
                Connection("A", "C", 2, False),
                Connection("D", "C", 1, True),
            ),
        )
    if n < 1:
        raise BadFamilyParameter(f"{fam.value} needs at least one point")
    first = spec.first or ("D" if fam is Family.NECKLACE else "A")
    pts = _labels(n, first)
    if fam is Family.PATH:
        edges = list(zip(pts, pts[1:]))
    elif fam is Family.NECKLACE:
        if n < 3:
            raise BadFamilyParameter("a necklace needs at least 3 points")
        edges = list(zip(pts, pts[1:])) + [(pts[-1], pts[0])]
    elif fam is Family.EDGELESS:
        edges = []
    elif fam is Family.PAIRS:
        if n % 2:
            raise BadFamilyParameter("a pairs world needs an even number of points")
        edges = list(zip(pts[::2], pts[1::2]))
    elif fam is Family.CLIQUE:
        edges = list(combinations(pts, 2))
    else:  # pragma: no cover
        raise BadFamilyParameter(f"unknown family {fam}")
    return World(f"{fam.value}{n}", pts, tuple(Connection(a, b) for a, b in edges))


# ------------------------------------------------------------ enumeration


def _check_size(n: int, max_points: int) -> None:
    if max_points > HARD_MAX_POINTS:
        raise TooLarge(f"max points {max_points} exceeds the hard cap of {HARD_MAX_POINTS}")
    if n < 1:
        raise TooLarge(f"point count must be at least 1, got {n}")
    if n > max_points:
        raise TooLarge(f"{n} points exceeds the configured maximum of {max_points}")


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def world_from_mask(n: int, mask: int, name: str | None = None) -> World:
    """Unit undirected world on points A.. whose pair i is connected iff bit i is set."""
    pts = tuple(string.ascii_uppercase[:n])
    conns = tuple(
        Connection(pts[i], pts[j]) for k, (i, j) in enumerate(_pairs(n)) if mask >> k & 1
    )
    return World(name or f"w{n}_{mask}", pts, conns)


def _lex_masks(m: int) -> Iterator[int]:
    """Subsets of range(m) as bitmasks, in lexicographic order of their sorted index lists."""

    def rec(mask: int, start: int) -> Iterator[int]:
        yield mask
        for i in range(start, m):
            yield from rec(mask | (1 << i), i + 1)

    return rec(0, 0)


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    index = {p: k for k, p in enumerate(_pairs(n))}
    tables = []
    for sigma in permutations(range(n)):
        tables.append(
            tuple(index[tuple(sorted((sigma[i], sigma[j])))] for i, j in _pairs(n))  # type: ignore[index]
        )
    return tuple(tables)


def _apply(table: tuple[int, ...], mask: int) -> int:
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << table[k]
        mask >>= 1
        k += 1
    return out


def _bits(n: int, mask: int) -> str:
    return "".join("1" if mask >> k & 1 else "0" for k in range(len(_pairs(n))))


def _string_key(n: int, mask: int) -> int:
    # equal-length bit strings compare like the integers they spell
    return int(_bits(n, mask) or "0", 2)


def _lex_key(n: int, mask: int) -> tuple[int, ...]:
    return tuple(k for k in range(len(_pairs(n))) if mask >> k & 1)


def _canonical_mask(n: int, mask: int) -> int:
    return min((_apply(t, mask) for t in _perm_tables(n)), key=lambda x: _string_key(n, x))


def canonical_form(world: World, max_points: int = HARD_MAX_POINTS) -> str:
    """Permutation-invariant code: the lexicographically least upper-triangle bit string."""
    if world.is_directed or not world.is_unit:
        raise NonUnitWeights("canonical forms are defined for unit undirected worlds")
    _check_size(world.n, max_points)
    pts = sorted(world.points)
    pos = {p: i for i, p in enumerate(pts)}
    index = {pair: k for k, pair in enumerate(_pairs(world.n))}
    mask = 0
    for c in world.connections:
        i, j = sorted((pos[c.source], pos[c.target]))
        mask |= 1 << index[(i, j)]
    return f"{world.n}:{_bits(world.n, _canonical_mask(world.n, mask))}"


def _iso_masks(n: int) -> list[int]:
    """One canonical mask per isomorphism class, in lexicographic connection-set order."""
    m = len(_pairs(n))
    seen: set[int] = set()
    reps = []
    tables = _perm_tables(n)
    for mask in _lex_masks(m):
        if mask in seen:
            continue
        orbit = {_apply(t, mask) for t in tables}
        seen |= orbit
        reps.append(min(orbit, key=lambda x: _string_key(n, x)))
    return sorted(reps, key=lambda x: _lex_key(n, x))


def enumerate_masks(n: int, up_to_iso: bool = False, max_points: int = DEFAULT_MAX_POINTS) -> list[int]:
    _check_size(n, max_points)
    if up_to_iso:
        return _iso_masks(n)
    return list(_lex_masks(len(_pairs(n))))


def enumerate_worlds(
    n: int, up_to_iso: bool = False, max_points: int = DEFAULT_MAX_POINTS
) -> Iterator[World]:
    _check_size(n, max_points)
    if up_to_iso:
        for k, mask in enumerate(_iso_masks(n)):
            yield world_from_mask(n, mask, f"iso{n}_{k}")
    else:
        for k, mask in enumerate(_lex_masks(len(_pairs(n)))):
            yield world_from_mask(n, mask, f"w{n}_{k}")


# ----------------------------------------------------------------- search


def _has_nc_triangle(world: World, equilateral: bool = False) -> bool:
    # search worlds are undirected, so each side's length is just the pair distance
    for triple in combinations(world.points, 3):
        x, y, z = triple
        d = (world.distance(x, y), world.distance(x, z), world.distance(y, z))
        if None in d or (equilateral and len(set(d)) != 1):
            continue
        if not is_collinear(world, triple):
            return True
    return False


def _all_pairs_circle(world: World) -> bool:
    return all(circles_through(world, u, v) for u, v in combinations(world.points, 2))


PREDICATES: dict[str, Callable[[World], bool]] = {
    "all-A-bisectable": all_segments_a_bisectable,
    "all-B-bisectable-P": lambda w: all_segments_b_bisectable(w, "P"),
    "all-B-bisectable-N": lambda w: all_segments_b_bisectable(w, "N"),
    "has-NC-triangle": _has_nc_triangle,
    "has-equilateral-NC-triangle": lambda w: _has_nc_triangle(w, equilateral=True),
    "all-pairs-circle": _all_pairs_circle,
}


@dataclass(frozen=True)
class SearchQuery:
    n: int
    predicate: str
    up_to_iso: bool = False
    max_points: int = DEFAULT_MAX_POINTS

    def __post_init__(self) -> None:
        if self.predicate not in PREDICATES:
            raise ValueError(f"unknown predicate {self.predicate!r}; choose from {', '.join(PREDICATES)}")


def _eval_chunk(args: tuple[int, str, list[tuple[int, int]], str]) -> list[bool]:
    n, predicate, items, prefix = args
    pred = PREDICATES[predicate]
    return [pred(world_from_mask(n, mask, f"{prefix}{n}_{k}")) for k, mask in items]


def search_worlds(query: SearchQuery, workers: int = 1) -> tuple[int, list[World]]:
    """All enumerated worlds satisfying the predicate, in enumeration order."""
    masks = enumerate_masks(query.n, query.up_to_iso, query.max_points)
    prefix = "iso" if query.up_to_iso else "w"
    items = list(enumerate(masks))
    if workers <= 1 or len(items) < 2:
        flags = _eval_chunk((query.n, query.predicate, items, prefix))
    else:
        size = -(-len(items) // (workers * 4))
        chunks = [items[i : i + size] for i in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = [
                flag
                for part in pool.map(_eval_chunk, [(query.n, query.predicate, c, prefix) for c in chunks])
                for flag in part
            ]
    hits = [world_from_mask(query.n, mask, f"{prefix}{query.n}_{k}") for (k, mask), ok in zip(items, flags) if ok]
    return len(hits), hits
