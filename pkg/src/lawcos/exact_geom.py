"""Exact rational points and the predicates the constructions are built on.

Every coordinate is a :class:`fractions.Fraction`; nothing here ever touches a
float, so equality tests are structural and residuals are exactly zero or not.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Fraction
Number = Union[int, Fraction]


class GeometryError(ValueError):
    """Raised for degenerate input (coincident line points, flat polygons...)."""


class DegenerateLineError(GeometryError):
    pass


class InvalidPolygonError(GeometryError):
    pass


def as_scalar(value: Number | str) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a string")
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot make an exact scalar from {type(value).__name__}")


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", as_scalar(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", as_scalar(self.y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def scale(self, k: Number) -> Point:
        return Point(self.x * k, self.y * k)

    def dot(self, other: Point) -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> Fraction:
        return self.x * other.y - self.y * other.x

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def pt(x: Number | str, y: Number | str) -> Point:
    return Point(as_scalar(x), as_scalar(y))


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


class Side(str, Enum):
    LEFT = "left"
    ON = "on"
    RIGHT = "right"


class Location(str, Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def signed_area(p: Point, q: Point, r: Point) -> Fraction:
    """Half the cross product of ``q - p`` and ``r - p``; positive when counterclockwise."""
    return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)) / 2


def dot_at(x: Point, p: Point, q: Point) -> Fraction:
    """``(p - x) . (q - x)``, i.e. ``|xp| |xq| cos(pxq)`` without the square roots."""
    return (p.x - x.x) * (q.x - x.x) + (p.y - x.y) * (q.y - x.y)


def squared_distance(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def _check_line(l1: Point, l2: Point) -> Fraction:
    d2 = squared_distance(l1, l2)
    if d2 == 0:
        raise DegenerateLineError(f"line through {l1} and {l2} is undefined")
    return d2


def project_onto_line(p: Point, l1: Point, l2: Point) -> Point:
    d2 = _check_line(l1, l2)
    d = l2 - l1
    t = (p - l1).dot(d) / d2
    return l1 + d.scale(t)


def reflect_across_line(p: Point, l1: Point, l2: Point) -> Point:
    foot = project_onto_line(p, l1, l2)
    return foot.scale(2) - p


def rotate_quarter(p: Point, center: Point, clockwise: bool = False) -> Point:
    v = p - center
    if clockwise:
        return center + Point(v.y, -v.x)
    return center + Point(-v.y, v.x)


def side_of_line(p: Point, l1: Point, l2: Point) -> Side:
    _check_line(l1, l2)
    s = _sign(signed_area(l1, l2, p))
    if s > 0:
        return Side.LEFT
    if s < 0:
        return Side.RIGHT
    return Side.ON


def polygon_signed_area(points: Sequence[Point]) -> Fraction:
    n = len(points)
    if n < 3:
        raise InvalidPolygonError(f"need at least 3 vertices, got {n}")
    total = Fraction(0)
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total / 2


@dataclass(frozen=True)
class SignedTriangle:
    v1: Point
    v2: Point
    v3: Point

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.v1, self.v2, self.v3)

    @cached_property
    def area(self) -> Fraction:
        return signed_area(self.v1, self.v2, self.v3)

    def squared_sides(self) -> tuple[Fraction, ...]:
        """Sorted squared side lengths."""
        return self._squared_sides

    @cached_property
    def _squared_sides(self) -> tuple[Fraction, ...]:
        a, b, c = self.vertices
        return tuple(sorted((squared_distance(a, b), squared_distance(b, c), squared_distance(c, a))))


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon; either orientation, but consistent."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise InvalidPolygonError(f"need at least 3 vertices, got {n}")
        if len(set(verts)) != n:
            raise InvalidPolygonError("repeated vertex")
        orient = _sign(polygon_signed_area(verts))
        if orient == 0:
            raise InvalidPolygonError("polygon has zero area")
        # strictly convex and simple: every other vertex strictly inside each edge line
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            for j in range(n):
                if j != i and j != (i + 1) % n and _sign(signed_area(a, b, verts[j])) != orient:
                    raise InvalidPolygonError("polygon is not strictly convex")

    @property
    def orientation(self) -> int:
        return _sign(polygon_signed_area(self.vertices))

    @property
    def area(self) -> Fraction:
        return polygon_signed_area(self.vertices)

    def edges(self) -> Iterable[tuple[Point, Point]]:
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]


def locate_point_in_convex_polygon(p: Point, poly: ConvexPolygon) -> Location:
    if not isinstance(poly, ConvexPolygon):
        raise InvalidPolygonError("expected a ConvexPolygon")
    orient = poly.orientation
    on_edge = False
    for a, b in poly.edges():
        s = _sign(signed_area(a, b, p)) * orient
        if s < 0:
            return Location.OUTSIDE
        if s == 0:
            on_edge = True
    return Location.BOUNDARY if on_edge else Location.INSIDE


def _projection_range(poly: ConvexPolygon, axis: Point) -> tuple[Fraction, Fraction]:
    values = [v.dot(axis) for v in poly.vertices]
    return min(values), max(values)


def convex_interiors_intersect(a: ConvexPolygon, b: ConvexPolygon) -> bool:
    """Separating-axis test on open interiors.

    Touching along an edge or at a vertex counts as disjoint: an axis whose
    projected intervals meet in a single value still separates the interiors.
    """
    for poly in (a, b):
        if not isinstance(poly, ConvexPolygon):
            raise InvalidPolygonError("expected a ConvexPolygon")
    for poly in (a, b):
        for p, q in poly.edges():
            d = q - p
            axis = Point(-d.y, d.x)
            lo_a, hi_a = _projection_range(a, axis)
            lo_b, hi_b = _projection_range(b, axis)
            if hi_a <= lo_b or hi_b <= lo_a:
                return False
    return True
