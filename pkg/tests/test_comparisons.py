from fractions import Fraction as F

from hypothesis import given, settings

from conftest import DESK, T1, T2, T3, rational_triangles, triangles
from oracles import dist2, shoelace
from lawcos.comparisons import (
    Parallelogram,
    build_anderson_parallelograms,
    build_boyadzhiev_parallelograms,
    build_comparisons,
    build_euclid_triangles,
    parallelograms_congruent,
    shared_dot,
    third_side_squared,
)
from lawcos.exact_geom import Point, dot_at, signed_area
from lawcos.figure import Color, build_figure, make_labeled_triangle

P = Point


def fig(tri):
    return build_figure(make_labeled_triangle(*tri))


def test_euclid_t2_vertex_c():
    f = fig(T2)
    e = build_euclid_triangles(f)[("C", Color.RED)]
    a, c, d = P(1, 3), P(5, 0), P(5, -5)
    assert set(e.vertices.vertices) == {a, c, d}
    assert abs(shoelace(a, c, d)) == 10
    assert e.area == 10 == f.pairs[Color.BLUE].areas[0]
    assert dist2(a, d) == 80 == 25 + 25 + 4 * F(15, 2)
    assert third_side_squared(e.vertices) == 80
    assert third_side_squared(f.red.colored_at("C")) == 20
    assert 80 - 20 == 8 * F(15, 2)


def test_euclid_right_angle_matches_celli():
    f = fig(T1)
    e = build_euclid_triangles(f)[("B", Color.RED)]
    celli = f.red.colored_at("B")
    # cos B = 0: both collapse to zero area; included angles are pi and 0
    a, b, c = T1
    assert dot_at(b, a, c) == 0
    assert e.area == f.red.area(celli) == 0
    assert shared_dot(e.vertices) == -shared_dot(celli) == -1


def test_anderson_t2():
    f = fig(T2)
    an = build_anderson_parallelograms(f)[("C", Color.RED)]
    assert an.vertices[:2] == (P(5, 0), P(1, -3))
    assert an.vertices[2] == P(1, -3) + P(5, -5) - P(5, 0) == P(1, -8)
    assert an.area == 20
    right = build_anderson_parallelograms(fig(T1))[("B", Color.RED)]
    assert right.degenerate


def test_boyadzhiev_t2():
    f = fig(T2)
    bo = build_boyadzhiev_parallelograms(build_euclid_triangles(f))[("C", Color.RED)]
    assert bo.vertices[0] == P(5, 0)
    assert P(1, -2) in bo.vertices and P(1, 3) in bo.vertices and P(5, -5) in bo.vertices
    assert bo.area == 20
    assert bo.squared_sides() == (25, 25, 25, 25)


def test_congruence_t2_vertex_c():
    f = fig(T2)
    c = build_comparisons(f)
    an, bo = c.anderson[("C", Color.RED)], c.boyadzhiev[("C", Color.RED)]
    # all eight segments by hand
    C, Ar, D, X1 = P(5, 0), P(1, -3), P(5, -5), P(1, -8)
    A, X2 = P(1, 3), P(1, -2)
    assert sorted([dist2(C, Ar), dist2(Ar, X1), dist2(X1, D), dist2(D, C)]) == [25] * 4
    assert sorted([dist2(Ar, D), dist2(C, X1)]) == [20, 80]
    assert sorted([dist2(C, A), dist2(A, X2), dist2(X2, D), dist2(D, C)]) == [25] * 4
    assert sorted([dist2(A, D), dist2(C, X2)]) == [20, 80]
    assert an.squared_diagonals() == bo.squared_diagonals() == (20, 80)
    assert parallelograms_congruent(an, bo)


def test_congruence_simple_cases():
    sq = Parallelogram((P(0, 0), P(1, 0), P(1, 1), P(0, 1)), "anderson", "A", Color.RED)
    moved = Parallelogram(tuple(P(v.x + 7, v.y - 3) for v in sq.vertices), "boyadzhiev", "A", Color.RED)
    rect = Parallelogram((P(0, 0), P(2, 0), P(2, 1), P(0, 1)), "anderson", "A", Color.RED)
    assert parallelograms_congruent(sq, moved)
    assert not parallelograms_congruent(sq, rect)
    # same sides, different shape (a rhombus)
    rhombus = Parallelogram((P(0, 0), P(5, 0), P(8, 4), P(3, 4)), "anderson", "A", Color.RED)
    square5 = Parallelogram((P(0, 0), P(5, 0), P(5, 5), P(0, 5)), "anderson", "A", Color.RED)
    assert rhombus.squared_sides() == square5.squared_sides()
    assert not parallelograms_congruent(rhombus, square5)


def test_desk_all_counterparts_congruent():
    for tri in DESK.values():
        c = build_comparisons(fig(tri))
        for key in c.anderson:
            assert parallelograms_congruent(c.anderson[key], c.boyadzhiev[key])


@given(rational_triangles)
@settings(max_examples=150)
def test_euclid_relations(tri):
    f = fig(tri)
    area = abs(signed_area(*tri))
    euclid = build_euclid_triangles(f)
    assert len(euclid) == 6
    for (anchor, color), e in euclid.items():
        d = f.dissection(color)
        celli = d.colored_at(anchor)
        assert e.area == d.area(celli)
        assert third_side_squared(e.vertices) - third_side_squared(celli) == 8 * area
        assert shared_dot(e.vertices) == -shared_dot(celli)
        # two sides shared with the triangle
        assert e.vertices.v1 == f.triangle.vertex(anchor)
        assert d.apex in e.vertices.vertices


@given(triangles)
@settings(max_examples=150)
def test_parallelogram_laws(tri):
    c = build_comparisons(fig(tri))
    for key in c.anderson:
        for par in (c.anderson[key], c.boyadzhiev[key]):
            v = par.vertices
            s = par.squared_sides()
            assert s[0] == s[1] and s[2] == s[3]
            assert 2 * (s[0] + s[2]) == sum(par.squared_diagonals())
            assert v[0] + v[2] == v[1] + v[3]
        an, bo = c.anderson[key], c.boyadzhiev[key]
        assert parallelograms_congruent(an, bo)
        assert an.area == bo.area
        anchor, color = key
        d = fig(tri).dissection(color)
        assert an.area == 2 * d.area(d.colored_at(anchor))


def test_t3_all_parallelograms_congruent():
    c = build_comparisons(fig(T3))
    assert len(c.anderson) == len(c.boyadzhiev) == 6
    assert all(parallelograms_congruent(c.anderson[k], c.boyadzhiev[k]) for k in c.anderson)
