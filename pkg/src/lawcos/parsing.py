"""Turning user input into exact points."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .exact_geom import Point, squared_distance

_NUMBER = re.compile(r"[+-]?(?:\d+/\d+|\d+(?:\.\d+)?|\.\d+)")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


def parse_scalar(token: str, position: int = 0) -> Fraction:
    """Integer, finite decimal or ``p/q``; decimals are read exactly (0.1 is 1/10)."""
    if not _NUMBER.fullmatch(token):
        raise ParseError(f"not a number: {token!r}", position)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", position) from None


def parse_triangle(text: str) -> tuple[Point, Point, Point]:
    """Parse ``"x1,y1 x2,y2 x3,y3"`` into three points (A, B, C)."""
    points = []
    for m in re.finditer(r"\S+", text):
        chunk, start = m.group(), m.start()
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected 'x,y', got {chunk!r}", start)
        x = parse_scalar(parts[0], start)
        y = parse_scalar(parts[1], start + len(parts[0]) + 1)
        points.append(Point(x, y))
    if len(points) != 3:
        raise ParseError(f"expected 3 points, got {len(points)}", len(text))
    return tuple(points)


def _rational_sqrt(value: Fraction) -> Fraction | None:
    n, d = value.numerator, value.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _approx_sqrt(value: Fraction, denominator_bound: int) -> Fraction:
    # enough fixed-point bits that limit_denominator sees the true best approximant
    bits = 4 * max(denominator_bound.bit_length(), 1) + 64
    scaled = math.isqrt((value.numerator << (2 * bits)) // value.denominator)
    return Fraction(scaled, 1 << bits).limit_denominator(denominator_bound)


@dataclass(frozen=True)
class SidePlacement:
    points: tuple[Point, Point, Point]
    requested: tuple[Fraction, Fraction, Fraction]
    realized_squared: tuple[Fraction, Fraction, Fraction]
    perturbed: bool

    @property
    def note(self) -> str:
        if not self.perturbed:
            return "side lengths realized exactly"
        a2, b2, c2 = self.realized_squared
        return (
            "side lengths perturbed to reach rational coordinates; verifying the instance with "
            f"BC^2={a2}, CA^2={b2}, AB^2={c2}"
        )


def triangle_from_sides(a, b, c, denominator_bound: int = 1000) -> SidePlacement:
    """Place B=(0,0), C=(a,0) and A above BC with |BC|=a, |CA|=b, |AB|=c.

    The height is only rational for some triples; otherwise it is replaced by
    its best rational approximation with denominator at most
    ``denominator_bound`` and the realized side lengths are reported.
    """
    a, b, c = (Fraction(v) for v in (a, b, c))
    if min(a, b, c) <= 0:
        raise ValueError("side lengths must be positive")
    if not (a < b + c and b < c + a and c < a + b):
        raise ValueError(f"sides {a}, {b}, {c} violate the strict triangle inequality")
    if denominator_bound < 1:
        raise ValueError("denominator_bound must be >= 1")
    p = (a * a + c * c - b * b) / (2 * a)
    h2 = c * c - p * p
    q = _rational_sqrt(h2)
    perturbed = q is None
    if perturbed:
        q = _approx_sqrt(h2, denominator_bound)
    A, B, C = Point(p, q), Point(0, 0), Point(a, 0)
    realized = (squared_distance(B, C), squared_distance(C, A), squared_distance(A, B))
    return SidePlacement((A, B, C), (a, b, c), realized, perturbed)
