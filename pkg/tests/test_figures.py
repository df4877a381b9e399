from itertools import combinations

import pytest
from hypothesis import given, settings

from oracles import brute_distance
from pointworld.enumeration import Family, WorldFamily, make_family
from pointworld.errors import UnknownPoint, ZeroRadiusUnderNZ
from pointworld.figures import (
    CircleSpec,
    TriangleSpec,
    circle_points,
    circles_through,
    equilateral_triangles,
    is_isosceles,
    triangles,
)
from pointworld.world import Walk
from strategies import worlds


def path_di():
    return make_family(WorldFamily(Family.PATH, 6, first="D"))


def necklace(n):
    return make_family(WorldFamily(Family.NECKLACE, n))


def test_path_circle():
    assert circle_points(path_di(), CircleSpec("G", 1)) == {"F", "H"}


def test_necklace_circles():
    c6 = necklace(6)
    assert circle_points(c6, CircleSpec("D", 1)) == {"E", "I"}
    assert circle_points(c6, CircleSpec("D", 2)) == {"F", "H"}
    assert circle_points(c6, CircleSpec("D", 3)) == {"G"}
    assert circle_points(c6, CircleSpec("D", 4)) == frozenset()


def test_zero_radius():
    assert circle_points(path_di(), CircleSpec("E", 0, "Z")) == {"E"}
    with pytest.raises(ZeroRadiusUnderNZ):
        CircleSpec("E", 0)
    with pytest.raises(UnknownPoint):
        circle_points(path_di(), CircleSpec("Q", 1))


def test_circles_through_path():
    w = path_di()
    assert circles_through(w, "D", "G") == []
    assert circles_through(w, "D", "F") == [("E", 1)]


def test_circles_through_necklace5():
    c5 = necklace(5)
    for u, v in combinations(c5.points, 2):
        assert circles_through(c5, u, v)
    assert ("G", 2) in circles_through(c5, "G", "F") or circles_through(c5, "F", "G")


def test_same_points_from_two_centers():
    # oracle scan over every (center, radius) of the D..I path for a repeated point set
    w = path_di()
    seen = {}
    repeats = []
    for c in w.points:
        for r in range(1, 6):
            pts = frozenset(x for x in w.points if brute_distance(w, c, x) == r)
            if pts and pts in seen:
                repeats.append((seen[pts], (c, r), pts))
            seen.setdefault(pts, (c, r))
    assert repeats
    for (c1, r1), (c2, r2), pts in repeats:
        assert (c1, r1) != (c2, r2)
        assert circle_points(w, CircleSpec(c1, r1)) == pts == circle_points(w, CircleSpec(c2, r2))


def test_path_has_no_nc_triangles():
    for n in range(3, 7):
        assert triangles(make_family(WorldFamily(Family.PATH, n)), "NC") == []


def test_collinear_c_triangle():
    w = make_family(WorldFamily(Family.PATH, 3))
    expected = TriangleSpec(
        ("A", "B", "C"), (Walk(("A", "B"), 1), Walk(("A", "B", "C"), 2), Walk(("B", "C"), 1)), "C"
    )
    assert expected in triangles(w, "C")


def test_necklace6_triangles():
    c6 = necklace(6)
    tris = triangles(c6, "NC")
    dfh = [t for t in tris if t.vertices == ("D", "F", "H")]
    assert len(dfh) == 1 and dfh[0].lengths == (2, 2, 2)
    # I, D, E are collinear: the geodesic I-D-E holds all three
    assert not [t for t in tris if t.vertices == ("D", "E", "I")]
    eq = equilateral_triangles(c6, "NC")
    assert [t.vertices for t in eq] == [("D", "F", "H"), ("E", "G", "I")]


def test_necklace_equilateral_by_size():
    assert equilateral_triangles(necklace(5), "NC") == []
    assert equilateral_triangles(necklace(9), "NC")


def test_isosceles():
    dfh = next(t for t in triangles(necklace(6), "NC") if t.vertices == ("D", "F", "H"))
    assert is_isosceles(dfh)
    c7 = necklace(7)  # D..J; D, E, H split the ring into arcs 1, 3, 3
    t7 = next(t for t in triangles(c7, "NC") if t.vertices == ("D", "E", "H"))
    assert sorted(t7.lengths) == [1, 3, 3] and is_isosceles(t7)
    c9 = necklace(9)  # D..L; D, F, I split the ring into arcs 2, 3, 4
    t9 = next(t for t in triangles(c9, "NC") if t.vertices == ("D", "F", "I"))
    assert sorted(t9.lengths) == [2, 3, 4] and not is_isosceles(t9)


def test_directed_demo_side_choices():
    demo = make_family(WorldFamily(Family.DIRECTED_DEMO))
    abc = [t for t in triangles(demo, "C") if t.vertices == ("A", "B", "C")]
    # A..B: A-B or B-C-A; A..C: A-B-C, A-C or C-A; B..C: B-C or C-A-B
    assert len(abc) == 2 * 3 * 2
    assert {t.sides[1].points for t in abc} == {("A", "B", "C"), ("A", "C"), ("C", "A")}


@settings(max_examples=80, deadline=None)
@given(worlds())
def test_circle_points_match_filter(world):
    total = sum(c.weight for c in world.connections)
    for c in world.points:
        for r in range(1, total + 1):
            expected = {x for x in world.points if brute_distance(world, c, x) == r}
            assert circle_points(world, CircleSpec(c, r)) == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_path_circle_laws(n):
    w = make_family(WorldFamily(Family.PATH, n))
    for c in w.points:
        for r in range(1, n + 1):
            assert len(circle_points(w, CircleSpec(c, r))) <= 2
    for u, v in combinations(w.points, 2):
        assert bool(circles_through(w, u, v)) == (w.distance(u, v) % 2 == 0)


@pytest.mark.parametrize("n", range(3, 10))
def test_necklace_laws(n):
    w = necklace(n)
    singles = {
        x
        for c in w.points
        for r in range(1, n)
        for pts in [circle_points(w, CircleSpec(c, r))]
        if len(pts) == 1
        for x in pts
    }
    assert singles == (set(w.points) if n % 2 == 0 else set())
    nc = triangles(w, "NC")
    for t in nc:
        assert sum(t.lengths) == n
    assert bool(equilateral_triangles(w, "NC")) == (n % 3 == 0)
