"""Euclid-style triangles and the two parallelogram families.

A colored triangle at vertex Q uses the reflected apex R'; the matching Euclid
triangle uses R itself.  Both share the sides QR and QP (the latter as the
square side through Q) but the included angle is pi/2 - Q in one and
pi/2 + Q in the other, which is why their parallelogram completions are
congruent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

from .exact_geom import Point, SignedTriangle, dot_at, polygon_signed_area, squared_distance
from .figure import CelliFigure, Color


@dataclass(frozen=True)
class EuclidTriangle:
    anchor_vertex: str
    color: Color
    vertices: SignedTriangle
    sign: int = 1

    @property
    def apex(self) -> Point:
        return self.vertices.v1

    @property
    def area(self) -> Fraction:
        return self.vertices.area * self.sign


@dataclass(frozen=True)
class Parallelogram:
    vertices: tuple[Point, Point, Point, Point]
    provenance: str
    anchor_vertex: str
    color: Color
    sign: int = 1

    @cached_property
    def area(self) -> Fraction:
        return polygon_signed_area(self.vertices) * self.sign

    @property
    def degenerate(self) -> bool:
        return self.area == 0

    def squared_sides(self) -> tuple[Fraction, ...]:
        v = self.vertices
        return tuple(sorted(squared_distance(v[i], v[(i + 1) % 4]) for i in range(4)))

    def squared_diagonals(self) -> tuple[Fraction, ...]:
        v = self.vertices
        return tuple(sorted((squared_distance(v[0], v[2]), squared_distance(v[1], v[3]))))


def _key(anchor: str, color: Color) -> tuple[str, Color]:
    return (anchor, color)


def build_euclid_triangles(f: CelliFigure) -> dict[tuple[str, Color], EuclidTriangle]:
    """Six triangles keyed by (anchor vertex, host square color).

    The vertex order mirrors the colored triangle with R' swapped for R, so
    signed areas of counterparts agree.
    """
    out = {}
    for d in f.dissections:
        p_lab, q_lab, _ = d.labels
        at_p = SignedTriangle(d.p, d.square.far_from, d.apex)
        at_q = SignedTriangle(d.q, d.apex, d.square.far_to)
        out[_key(p_lab, d.color)] = EuclidTriangle(p_lab, d.color, at_p, d.sign)
        out[_key(q_lab, d.color)] = EuclidTriangle(q_lab, d.color, at_q, d.sign)
    return out


def complete_parallelogram(tri: SignedTriangle) -> tuple[Point, Point, Point, Point]:
    """Point-symmetric completion about the midpoint of the side opposite ``v1``."""
    x, y, z = tri.vertices
    return (x, y, y + z - x, z)


def build_anderson_parallelograms(f: CelliFigure) -> dict[tuple[str, Color], Parallelogram]:
    out = {}
    for d in f.dissections:
        for label in d.labels[:2]:
            tri = d.colored_at(label)
            out[_key(label, d.color)] = Parallelogram(
                complete_parallelogram(tri), "anderson", label, d.color, d.sign
            )
    return out


def build_boyadzhiev_parallelograms(
    euclid: dict[tuple[str, Color], EuclidTriangle]
) -> dict[tuple[str, Color], Parallelogram]:
    return {
        k: Parallelogram(complete_parallelogram(e.vertices), "boyadzhiev", e.anchor_vertex, e.color, e.sign)
        for k, e in euclid.items()
    }


def parallelograms_congruent(p1: Parallelogram, p2: Parallelogram) -> bool:
    return (
        p1.squared_sides() == p2.squared_sides()
        and p1.squared_diagonals() == p2.squared_diagonals()
    )


def congruence_residual(p1: Parallelogram, p2: Parallelogram) -> Fraction:
    """Sum of absolute differences of sorted squared sides and diagonals."""
    pairs = list(zip(p1.squared_sides(), p2.squared_sides()))
    pairs += list(zip(p1.squared_diagonals(), p2.squared_diagonals()))
    return sum((abs(a - b) for a, b in pairs), Fraction(0))


def shared_dot(tri: SignedTriangle) -> Fraction:
    """Dot product at ``v1`` of the two sides leaving it."""
    return dot_at(tri.v1, tri.v2, tri.v3)


def third_side_squared(tri: SignedTriangle) -> Fraction:
    return squared_distance(tri.v2, tri.v3)


@dataclass(frozen=True)
class ComparisonSet:
    euclid: dict
    anderson: dict
    boyadzhiev: dict


def build_comparisons(f: CelliFigure) -> ComparisonSet:
    euclid = build_euclid_triangles(f)
    return ComparisonSet(euclid, build_anderson_parallelograms(f), build_boyadzhiev_parallelograms(euclid))
