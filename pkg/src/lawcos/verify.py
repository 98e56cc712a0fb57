"""Exact checks over a built figure, collected into a report.

Every equation check compares two independently computed Fractions and
records their difference; there is no tolerance anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .comparisons import (
    ComparisonSet,
    build_comparisons,
    congruence_residual,
    shared_dot,
    third_side_squared,
)
from .exact_geom import (
    ConvexPolygon,
    Location,
    Point,
    convex_interiors_intersect,
    dot_at,
    squared_distance,
)
from .figure import (
    CaseReport,
    CelliFigure,
    Color,
    build_figure,
    classify_configuration,
    make_labeled_triangle,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

ALL_INCLUDES = frozenset({"euclid", "parallelograms", "disjointness"})

ZERO = Fraction(0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    residual: Fraction = ZERO
    note: str = ""


def equation(name: str, lhs: Fraction, rhs: Fraction, note: str = "") -> CheckResult:
    residual = lhs - rhs
    return CheckResult(name, PASS if residual == 0 else FAIL, residual, note)


def predicate(name: str, ok: bool, note: str = "") -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, ZERO if ok else Fraction(1), note)


def skipped(name: str, why: str) -> CheckResult:
    return CheckResult(name, SKIPPED, ZERO, why)


@dataclass(frozen=True)
class ChainValues:
    """The intermediate totals of the identity chain, for reporting."""

    sides: Fraction
    squares: Fraction
    pieces: Fraction
    groups: Fraction
    blue_quadruple: Fraction
    dot_cab: Fraction


def chain_values(f: CelliFigure) -> ChainValues:
    t = f.triangle
    red, green, blue = f.red, f.green, f.blue
    sides = squared_distance(t.B, t.C) + squared_distance(t.C, t.A) - squared_distance(t.A, t.B)
    squares = red.square.area + green.square.area - blue.square.area
    pieces = 2 * (red.pieces_total() + green.pieces_total() - blue.pieces_total())
    # each grouped piece sum replaced by the colored triangle it equals
    green_tri = red.area(red.colored_at("B"))
    blue_tri = red.area(red.colored_at("C"))
    blue_tri2 = green.area(green.colored_at("C"))
    red_tri = green.area(green.colored_at("A"))
    red_tri2 = blue.area(blue.colored_at("A"))
    green_tri2 = blue.area(blue.colored_at("B"))
    groups = 2 * (green_tri + blue_tri + blue_tri2 + red_tri - red_tri2 - green_tri2)
    blue_quadruple = 4 * f.pairs[Color.BLUE].areas[0]
    return ChainValues(sides, squares, pieces, groups, blue_quadruple, dot_at(t.C, t.A, t.B))


def check_chain(f: CelliFigure, values: ChainValues | None = None) -> list[CheckResult]:
    v = values or chain_values(f)
    red, green, blue = f.red, f.green, f.blue
    grouped = 2 * (
        (red.group_at("B") + red.group_at("C"))
        + (green.group_at("C") + green.group_at("A"))
        - (blue.group_at("A") + blue.group_at("B"))
    )
    return [
        equation("chain.L1", v.sides, v.squares, "BC^2 + CA^2 - AB^2 = red + green - blue squares"),
        equation("chain.L2", v.squares, v.pieces, "squares = twice their signed pieces"),
        equation("chain.L3", grouped, v.groups, "grouped pieces = colored triangles"),
        equation("chain.L4", v.groups, v.blue_quadruple, "colored triangles telescope to 4 blue"),
        equation("chain.L5", v.blue_quadruple, 2 * v.dot_cab, "4 blue = 2 CA.CB cos C"),
    ]


def check_decompositions(f: CelliFigure, case: CaseReport | None = None) -> list[CheckResult]:
    case = case or classify_configuration(f)
    out = []
    for d in f.dissections:
        out.append(equation(f"square.{d.color.value}", d.side_squared(), 2 * d.pieces_total()))
    for d in f.dissections:
        for label in d.labels[:2]:
            out.append(equation(
                f"group.{d.color.value}.{label}", d.group_at(label), d.area(d.colored_at(label))
            ))
    for d in f.dissections:
        edge = d.labels[0] + d.labels[1]
        upright = case.foot_within_edge[edge]
        for label, which in zip(d.labels[:2], ("p", "q")):
            rect = d.rect_area(which)
            colored = d.area(d.colored_at(label))
            residual = rect - 2 * colored
            if upright:
                residual = abs(residual) + abs(abs(rect) - 2 * abs(colored))
                note = "signed and unsigned"
            else:
                note = "signed only (foot outside edge)"
            out.append(CheckResult(
                f"rect.{d.color.value}.{label}", PASS if residual == 0 else FAIL, residual, note
            ))
    return out


def check_pair_congruence(f: CelliFigure) -> list[CheckResult]:
    out = []
    for color in (Color.BLUE, Color.GREEN, Color.RED):
        pair = f.pairs[color]
        a1, a2 = pair.areas
        s1, s2 = pair.copy1.squared_sides(), pair.copy2.squared_sides()
        residual = abs(a1 - a2) + sum((abs(x - y) for x, y in zip(s1, s2)), ZERO)
        out.append(CheckResult(
            f"pair.{color.value}", PASS if residual == 0 else FAIL, residual,
            f"anchor {pair.anchor_vertex}",
        ))
    return out


def check_disjointness(f: CelliFigure, case: CaseReport | None = None) -> list[CheckResult]:
    """Interiors of the two copies of each pair must not overlap.

    Asserted only when both copies are positively oriented and both host
    squares contain their reflected apex (inside or on the boundary);
    otherwise the check is reported as skipped.
    """
    case = case or classify_configuration(f)
    out = []
    for color in (Color.BLUE, Color.GREEN, Color.RED):
        pair = f.pairs[color]
        name = f"disjoint.{color.value}"
        if not all(a > 0 for a in pair.areas):
            out.append(skipped(name, "a copy has non-positive area"))
            continue
        outside = [
            d.labels[2] + "'" for d in f.hosts_of(pair.anchor_vertex)
            if case.reflected[d.labels[2]] is Location.OUTSIDE
        ]
        if outside:
            out.append(skipped(name, f"{', '.join(outside)} outside its square"))
            continue
        hit = convex_interiors_intersect(
            ConvexPolygon(pair.copy1.vertices), ConvexPolygon(pair.copy2.vertices)
        )
        out.append(predicate(name, not hit, "interiors overlap" if hit else "interiors disjoint"))
    return out


def _comparison_keys(f: CelliFigure) -> Iterable[tuple[str, Color]]:
    for d in f.dissections:
        for label in d.labels[:2]:
            yield (label, d.color)


def check_comparisons(
    f: CelliFigure,
    comparisons: ComparisonSet,
    include: Iterable[str] = ALL_INCLUDES,
) -> list[CheckResult]:
    include = set(include)
    eight_area = 8 * f.triangle.area
    out = []
    for key in _comparison_keys(f):
        label, color = key
        d = f.dissection(color)
        celli = d.colored_at(label)
        tag = f"{label}.{color.value}"
        if "euclid" in include:
            e = comparisons.euclid[key]
            out.append(equation(f"euclid.area.{tag}", e.area, d.area(celli)))
            out.append(equation(
                f"euclid.third_side.{tag}",
                third_side_squared(e.vertices) - third_side_squared(celli),
                eight_area,
            ))
            out.append(equation(f"euclid.dot.{tag}", shared_dot(e.vertices), -shared_dot(celli)))
        if "parallelograms" in include:
            an = comparisons.anderson[key]
            bo = comparisons.boyadzhiev[key]
            residual = congruence_residual(an, bo) + abs(an.area - bo.area)
            out.append(CheckResult(
                f"parallelogram.{tag}", PASS if residual == 0 else FAIL, residual,
                "degenerate (right angle)" if an.degenerate else "",
            ))
    return out


@dataclass
class VerificationReport:
    points: tuple[Point, Point, Point]
    figure: CelliFigure
    case: CaseReport
    checks: list[CheckResult]
    comparisons: ComparisonSet | None = None
    chain: ChainValues | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if c.status == FAIL]

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def run_all(a: Point, b: Point, c: Point, include: Iterable[str] = ALL_INCLUDES) -> VerificationReport:
    """Build everything for triangle ABC and run every applicable check.

    Raises DegenerateTriangleError for collinear input.
    """
    include = frozenset(include)
    unknown = include - ALL_INCLUDES
    if unknown:
        raise ValueError(f"unknown include option(s): {', '.join(sorted(unknown))}")
    fig = build_figure(make_labeled_triangle(a, b, c))
    case = classify_configuration(fig)
    chain = chain_values(fig)
    checks = check_chain(fig, chain) + check_decompositions(fig, case) + check_pair_congruence(fig)
    if "disjointness" in include:
        checks += check_disjointness(fig, case)
    comps = None
    if include & {"euclid", "parallelograms"}:
        comps = build_comparisons(fig)
        checks += check_comparisons(fig, comps, include)
    return VerificationReport((a, b, c), fig, case, checks, comps, chain)
