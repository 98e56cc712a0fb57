"""The three-square figure behind the law of cosines dissection.

Each side PQ of the triangle (apex R) carries an external square.  The apex
reflected across PQ, R', lands on the far side of the edge; joining R' to the
two near corners and dropping it onto the two square sides through P and Q
cuts the square into four right triangles per altitude half.  Pieces are
stored with fixed vertex orders and their areas are normalized by the
triangle's orientation, so clockwise input yields the same numbers as its
mirror image.

Piece numbering inside a square (only the grouping matters)::

    1 = near piece at Q      4 = far piece at Q
    3 = near piece at P      2 = far piece at P
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from enum import Enum
from fractions import Fraction

from .exact_geom import (
    ConvexPolygon,
    GeometryError,
    Location,
    Point,
    Side,
    SignedTriangle,
    dot_at,
    locate_point_in_convex_polygon,
    polygon_signed_area,
    project_onto_line,
    reflect_across_line,
    rotate_quarter,
    side_of_line,
    signed_area,
    squared_distance,
)


class DegenerateTriangleError(GeometryError):
    pass


class Color(str, Enum):
    RED = "red"
    GREEN = "green"
    BLUE = "blue"


class AngleClass(str, Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


# square color -> (first base endpoint, second base endpoint, apex)
EDGES = {
    Color.RED: ("B", "C", "A"),
    Color.GREEN: ("C", "A", "B"),
    Color.BLUE: ("A", "B", "C"),
}
# colored triangle color -> the vertex it sits at
PAIR_ANCHOR = {Color.BLUE: "C", Color.GREEN: "B", Color.RED: "A"}
ANCHOR_COLOR = {v: c for c, v in PAIR_ANCHOR.items()}


@dataclass(frozen=True)
class LabeledTriangle:
    A: Point
    B: Point
    C: Point
    orientation: str

    @property
    def sign(self) -> int:
        return 1 if self.orientation == "ccw" else -1

    @property
    def signed_area(self) -> Fraction:
        return signed_area(self.A, self.B, self.C)

    @property
    def area(self) -> Fraction:
        return abs(self.signed_area)

    def vertex(self, label: str) -> Point:
        return {"A": self.A, "B": self.B, "C": self.C}[label]


def make_labeled_triangle(a: Point, b: Point, c: Point) -> LabeledTriangle:
    s = signed_area(a, b, c)
    if s == 0:
        raise DegenerateTriangleError(f"points {a}, {b}, {c} are collinear")
    return LabeledTriangle(a, b, c, "ccw" if s > 0 else "cw")


@dataclass(frozen=True)
class SquareOnEdge:
    base_from: Point
    base_to: Point
    far_from: Point
    far_to: Point
    offset: Point
    color: Color

    @property
    def corners(self) -> tuple[Point, Point, Point, Point]:
        return (self.base_from, self.base_to, self.far_to, self.far_from)

    @property
    def polygon(self) -> ConvexPolygon:
        return ConvexPolygon(self.corners)

    @cached_property
    def area(self) -> Fraction:
        return abs(polygon_signed_area(self.corners))


def erect_square(p: Point, q: Point, opposite: Point, color: Color | str) -> SquareOnEdge:
    """Square on ``pq`` on the side away from ``opposite``."""
    if p == q:
        raise DegenerateTriangleError("square base has zero length")
    where = side_of_line(opposite, p, q)
    if where is Side.ON:
        raise DegenerateTriangleError(f"{opposite} lies on the line through {p} and {q}")
    # rotating q about p by +90 degrees lands on the left of pq
    offset = rotate_quarter(q, p, clockwise=where is Side.LEFT) - p
    return SquareOnEdge(p, q, p + offset, q + offset, offset, Color(color))


@dataclass(frozen=True)
class EdgeDissection:
    p: Point
    q: Point
    apex: Point
    square: SquareOnEdge
    apex_reflected: Point
    foot: Point
    rail_p: Point
    rail_q: Point
    near_p: SignedTriangle
    far_p: SignedTriangle
    near_q: SignedTriangle
    far_q: SignedTriangle
    colored_at_p: SignedTriangle
    colored_at_q: SignedTriangle
    rect_p: tuple[Point, ...]
    rect_q: tuple[Point, ...]
    sign: int
    labels: tuple[str, str, str] = ("P", "Q", "R")

    @property
    def color(self) -> Color:
        return self.square.color

    def area(self, tri: SignedTriangle) -> Fraction:
        """Orientation-normalized area of one of this edge's triangles."""
        return tri.area * self.sign

    def rect_area(self, which: str) -> Fraction:
        rect = self.rect_p if which == "p" else self.rect_q
        return polygon_signed_area(rect) * self.sign

    def indexed_pieces(self) -> dict[int, SignedTriangle]:
        return {1: self.near_q, 2: self.far_p, 3: self.near_p, 4: self.far_q}

    def piece_areas(self) -> dict[int, Fraction]:
        return dict(self._piece_areas)

    @cached_property
    def _piece_areas(self) -> dict[int, Fraction]:
        return {i: self.area(t) for i, t in self.indexed_pieces().items()}

    def pieces_total(self) -> Fraction:
        return sum(self._piece_areas.values(), Fraction(0))

    def group_at(self, label: str) -> Fraction:
        """Near + far piece at the base endpoint called ``label``."""
        if label == self.labels[0]:
            return self.area(self.near_p) + self.area(self.far_p)
        if label == self.labels[1]:
            return self.area(self.near_q) + self.area(self.far_q)
        raise KeyError(label)

    def colored_at(self, label: str) -> SignedTriangle:
        if label == self.labels[0]:
            return self.colored_at_p
        if label == self.labels[1]:
            return self.colored_at_q
        raise KeyError(label)

    def rect_at(self, label: str) -> tuple[Point, ...]:
        if label == self.labels[0]:
            return self.rect_p
        if label == self.labels[1]:
            return self.rect_q
        raise KeyError(label)

    def side_squared(self) -> Fraction:
        return squared_distance(self.p, self.q)


def dissect_edge(
    p: Point,
    q: Point,
    apex: Point,
    color: Color | str,
    labels: tuple[str, str, str] = ("P", "Q", "R"),
) -> EdgeDissection:
    s = signed_area(p, q, apex)
    if s == 0:
        raise DegenerateTriangleError(f"points {p}, {q}, {apex} are collinear")
    square = erect_square(p, q, apex, color)
    off = square.offset
    p_far, q_far = square.far_from, square.far_to
    r_ref = reflect_across_line(apex, p, q)
    foot = project_onto_line(apex, p, q)
    rail_p = project_onto_line(r_ref, p, p_far)
    rail_q = project_onto_line(r_ref, q, q_far)
    return EdgeDissection(
        p=p,
        q=q,
        apex=apex,
        square=square,
        apex_reflected=r_ref,
        foot=foot,
        rail_p=rail_p,
        rail_q=rail_q,
        near_p=SignedTriangle(foot, p, r_ref),
        far_p=SignedTriangle(rail_p, p_far, r_ref),
        near_q=SignedTriangle(q, foot, r_ref),
        far_q=SignedTriangle(rail_q, r_ref, q_far),
        colored_at_p=SignedTriangle(p, p_far, r_ref),
        colored_at_q=SignedTriangle(q, r_ref, q_far),
        rect_p=(p, p_far, foot + off, foot),
        rect_q=(q, foot, foot + off, q_far),
        sign=1 if s > 0 else -1,
        labels=labels,
    )


@dataclass(frozen=True)
class ColoredPair:
    color: Color
    anchor_vertex: str
    copy1: SignedTriangle
    copy2: SignedTriangle
    sign: int = 1

    @property
    def areas(self) -> tuple[Fraction, Fraction]:
        return (self.copy1.area * self.sign, self.copy2.area * self.sign)


@dataclass(frozen=True)
class CelliFigure:
    triangle: LabeledTriangle
    red: EdgeDissection
    green: EdgeDissection
    blue: EdgeDissection
    pairs: dict[Color, ColoredPair] = field(hash=False)

    def dissection(self, color: Color | str) -> EdgeDissection:
        return {Color.RED: self.red, Color.GREEN: self.green, Color.BLUE: self.blue}[Color(color)]

    @property
    def dissections(self) -> tuple[EdgeDissection, EdgeDissection, EdgeDissection]:
        return (self.red, self.green, self.blue)

    def hosts_of(self, anchor: str) -> list[EdgeDissection]:
        """The two squares having ``anchor`` as a base endpoint."""
        return [d for d in self.dissections if anchor in d.labels[:2]]


def build_figure(t: LabeledTriangle) -> CelliFigure:
    parts = {}
    for color, (first, second, apex) in EDGES.items():
        parts[color] = dissect_edge(
            t.vertex(first), t.vertex(second), t.vertex(apex), color, labels=(first, second, apex)
        )
    pairs = {}
    for color, anchor in PAIR_ANCHOR.items():
        hosts = [parts[c] for c in Color if anchor in parts[c].labels[:2]]
        pairs[color] = ColoredPair(
            color, anchor, hosts[0].colored_at(anchor), hosts[1].colored_at(anchor), t.sign
        )
    return CelliFigure(t, parts[Color.RED], parts[Color.GREEN], parts[Color.BLUE], pairs)


@dataclass(frozen=True)
class CaseReport:
    orientation: str
    angles: dict[str, AngleClass]
    reflected: dict[str, Location]
    altitude_exceeds_side: dict[str, bool]
    foot_within_edge: dict[str, bool]

    def summary(self) -> str:
        parts = [f"{v}:{c.value}" for v, c in self.angles.items()]
        outside = [f"{v}' outside {ANCHOR_COLOR[v].value} square"
                   for v, loc in self.reflected.items() if loc is Location.OUTSIDE]
        return ", ".join(parts + outside)


def _angle_class(value: Fraction) -> AngleClass:
    if value > 0:
        return AngleClass.ACUTE
    if value < 0:
        return AngleClass.OBTUSE
    return AngleClass.RIGHT


def classify_configuration(f: CelliFigure) -> CaseReport:
    t = f.triangle
    angles = {
        "A": _angle_class(dot_at(t.A, t.B, t.C)),
        "B": _angle_class(dot_at(t.B, t.C, t.A)),
        "C": _angle_class(dot_at(t.C, t.A, t.B)),
    }
    twice_area = 2 * t.area
    reflected = {}
    exceeds = {}
    within = {}
    for d in f.dissections:
        p_lab, q_lab, apex_lab = d.labels
        edge = p_lab + q_lab
        reflected[apex_lab] = locate_point_in_convex_polygon(d.apex_reflected, d.square.polygon)
        side2 = d.side_squared()
        exceeds[edge] = twice_area > side2
        within[edge] = 0 <= dot_at(d.p, d.apex, d.q) <= side2
    reflected = {k: reflected[k] for k in "ABC"}
    return CaseReport(t.orientation, angles, reflected, exceeds, within)
