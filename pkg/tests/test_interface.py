import json
import re
import subprocess
import sys
import xml.etree.ElementTree as ET
from decimal import Decimal, getcontext
from fractions import Fraction as F

import pytest

from conftest import T2, T3, T4
from lawcos.batch import batch_random, random_triangles, summary_dict
from lawcos.cli import main
from lawcos.comparisons import build_comparisons
from lawcos.exact_geom import Point, signed_area
from lawcos.figure import build_figure, make_labeled_triangle
from lawcos.parsing import ParseError, parse_triangle, triangle_from_sides
from lawcos.report import emit_report, parse_scalar_text, report_dict
from lawcos.svg import RenderOptions, render_svg
from lawcos.verify import run_all

SVG_NS = "{http://www.w3.org/2000/svg}"


# parsing

def test_parse_triangle():
    assert parse_triangle("1,3 0,0 5,0") == T2
    assert parse_triangle("1,0 1/2,2 0,0") == T3
    assert parse_triangle("  0.5,-1.25   +2,3/4 .5,0 ") == (
        Point(F(1, 2), F(-5, 4)), Point(2, F(3, 4)), Point(F(1, 2), 0)
    )


@pytest.mark.parametrize("text, col", [
    ("1,3 0,0", 8),
    ("1,3 0,0 5,0 1,1", 16),
    ("1,3 0;0 5,0", 5),
    ("1,3 0,x 5,0", 7),
    ("1,3 0,1/0 5,0", 7),
    ("1,3 0,1e3 5,0", 7),
])
def test_parse_errors(text, col):
    with pytest.raises(ParseError) as info:
        parse_triangle(text)
    assert info.value.position + 1 == col


def test_sides_exact():
    placed = triangle_from_sides(3, 4, 5)
    assert placed.points == (Point(3, 4), Point(0, 0), Point(3, 0))
    assert not placed.perturbed
    assert placed.realized_squared == (9, 16, 25)


def test_sides_inequality():
    with pytest.raises(ValueError):
        triangle_from_sides(1, 1, 3)
    with pytest.raises(ValueError):
        triangle_from_sides(1, 1, 2)


def _best_sqrt3(bound):
    """Brute-force best approximation to sqrt(3) over all denominators."""
    getcontext().prec = 60
    root = Decimal(3).sqrt()
    best = None
    for q in range(1, bound + 1):
        for p in (int(root * q), int(root * q) + 1):
            err = abs(Decimal(p) / q - root)
            if best is None or err < best[0]:
                best = (err, F(p, q))
    return best[1]


def test_sides_equilateral_perturbed():
    placed = triangle_from_sides(2, 2, 2, denominator_bound=1000)
    assert placed.perturbed
    a, b, c = placed.points
    assert a.x == 1
    assert a.y == _best_sqrt3(1000) == F(1351, 780)
    assert placed.realized_squared[0] == 4
    assert placed.realized_squared[1] == placed.realized_squared[2] == 1 + a.y ** 2
    assert "perturbed" in placed.note
    assert run_all(*placed.points).all_pass


# JSON report

def test_report_t2_values():
    text = emit_report(run_all(*T2))
    assert '"blue_quadruple": "40"' in text
    assert '"dot_CAB": "20"' in text
    doc = json.loads(text)
    assert list(doc) == ["input", "orientation", "case", "areas", "chain", "checks", "all_pass"]
    assert doc["all_pass"] is True
    assert doc["areas"]["pieces"]["red"] == {"1": "6", "2": "1", "3": "3/2", "4": "4"}


def test_report_t4_negative():
    doc = json.loads(emit_report(run_all(*T4)))
    assert doc["areas"]["blue_quadruple"] == "-2"
    assert doc["case"]["angles"]["C"] == "obtuse"


def test_report_deterministic_and_exact():
    a = emit_report(run_all(*T3))
    b = emit_report(run_all(*T3))
    assert a == b
    assert "." not in "".join(re.findall(r'"residual": "([^"]*)"', a))
    doc = json.loads(a)
    f = build_figure(make_labeled_triangle(*T3))
    for color, pieces in doc["areas"]["pieces"].items():
        exact = f.dissection(color).piece_areas()
        assert {int(k): parse_scalar_text(v) for k, v in pieces.items()} == exact


def test_report_roundtrip_all_scalars():
    doc = report_dict(run_all(Point(F(7, 3), F(-2, 5)), Point(0, 0), Point(F(11, 4), 1)))
    assert parse_scalar_text(doc["areas"]["blue_quadruple"]) == 4 * parse_scalar_text(doc["areas"]["pairs"]["blue"][0])
    assert parse_scalar_text(doc["chain"]["sides"]) == parse_scalar_text(doc["areas"]["blue_quadruple"])


# SVG

def _svg(tri, comparisons=True, **kw):
    f = build_figure(make_labeled_triangle(*tri))
    return render_svg(f, build_comparisons(f) if comparisons else None, RenderOptions(**kw))


def _paths(doc, cls):
    root = ET.fromstring(doc.encode())
    return [e for e in root.iter(f"{SVG_NS}path") if cls in e.get("class", "").split()]


def test_svg_counts_t2():
    doc = _svg(T2)
    assert len(_paths(doc, "square")) == 3
    assert len(_paths(doc, "piece")) == 12
    assert len(_paths(doc, "colored")) == 6
    assert len(_paths(doc, "euclid")) == 6
    assert len(_paths(doc, "parallelogram")) == 12
    assert len(_paths(doc, "triangle")) == 1


def test_svg_t3_hatched_far_pieces():
    doc = _svg(T3)
    negative = _paths(doc, "negative")
    assert {(e.get("data-color"), e.get("data-index")) for e in negative} == {("green", "2"), ("green", "4")}
    assert all(e.get("fill") == "url(#hatch-green)" for e in negative)
    # B' = (1/2, -2) lies below the green square's bottom edge y = -1; y is flipped on screen
    f = build_figure(make_labeled_triangle(*T3))
    assert f.green.apex_reflected == Point(F(1, 2), -2)
    assert min(p.y for p in f.green.square.corners) == -1


def test_svg_empty_show():
    doc = _svg(T2, comparisons=False, show=frozenset())
    root = ET.fromstring(doc.encode())
    paths = list(root.iter(f"{SVG_NS}path"))
    assert [p.get("class") for p in paths] == ["triangle"]
    assert not list(root.iter(f"{SVG_NS}text"))


def test_svg_viewbox_contains_everything():
    doc = _svg(T4, width_px=600)
    root = ET.fromstring(doc.encode())
    _, _, w, h = (float(v) for v in root.get("viewBox").split())
    assert w == 600
    for e in root.iter(f"{SVG_NS}path"):
        for x, y in re.findall(r"[ML](-?[\d.]+),(-?[\d.]+)", e.get("d")):
            assert 0 <= float(x) <= w and 0 <= float(y) <= h


def test_svg_deterministic():
    assert _svg(T3) == _svg(T3)


def test_render_options_validation():
    with pytest.raises(ValueError):
        RenderOptions(padding_fraction=F(1, 2))
    with pytest.raises(ValueError):
        RenderOptions(color_map={"red": "#f00", "green": "#0f0"})
    with pytest.raises(ValueError):
        RenderOptions(show=frozenset({"stars"}))
    doc = _svg(T2, color_map={"red": "#ff0000", "green": "#00ff00", "blue": "#0000ff"})
    assert "#ff0000" in doc and "#d62728" not in doc


# batch

def test_random_triangles_deterministic():
    a = random_triangles(50, 7, 10)
    assert a == random_triangles(50, 7, 10)
    assert a != random_triangles(50, 8, 10)
    for tri in a:
        assert signed_area(*(Point(*p) for p in tri)) != 0
        assert all(-10 <= v <= 10 for p in tri for v in p)


def test_random_triangle_tiny_bound():
    (tri,) = random_triangles(1, 123, 2)
    assert signed_area(*(Point(*p) for p in tri)) != 0


def test_batch_small_deterministic():
    s1 = batch_random(40, 3, 20)
    s2 = batch_random(40, 3, 20)
    assert s1.ok and s2.ok
    d1, d2 = summary_dict(s1), summary_dict(s2)
    d1.pop("elapsed_seconds"), d2.pop("elapsed_seconds")
    assert d1 == d2


def test_batch_parallel_matches_serial():
    serial = summary_dict(batch_random(24, 5, 30))
    parallel = summary_dict(batch_random(24, 5, 30, workers=2))
    serial.pop("elapsed_seconds"), parallel.pop("elapsed_seconds")
    assert serial == parallel


def test_batch_argument_errors():
    with pytest.raises(ValueError):
        batch_random(0, 1, 10)
    with pytest.raises(ValueError):
        batch_random(5, 1, 1)


# CLI

@pytest.mark.parametrize("points", ["0,1 0,0 1,0", "1,3 0,0 5,0", "1,0 1/2,2 0,0", "2,1 0,0 1,0"])
def test_cli_verify_ok(points, capsys):
    assert main(["verify", "--points", points]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["verify", "--points", "1,3 0,0"],
    ["verify", "--points", "0,0 1,1 2,2"],
    ["verify", "--points", "a,b c,d e,f"],
    ["verify", "--sides", "1", "1", "3"],
    ["verify", "--points", "1,3 0,0 5,0", "--include", "nope"],
    ["verify"],
    ["batch", "--count", "0"],
    ["frobnicate"],
])
def test_cli_input_errors(argv, capsys):
    assert main(argv) == 2


def test_cli_report_and_svg(tmp_path):
    report, svg = tmp_path / "t2.json", tmp_path / "t2.svg"
    assert main(["verify", "--points", "1,3 0,0 5,0", "--report", str(report), "--svg", str(svg)]) == 0
    first = report.read_bytes(), svg.read_bytes()
    assert main(["verify", "--points", "1,3 0,0 5,0", "--report", str(report), "--svg", str(svg)]) == 0
    assert (report.read_bytes(), svg.read_bytes()) == first
    assert b"\r\n" not in first[0]
    assert json.loads(first[0])["areas"]["blue_quadruple"] == "40"
    ET.fromstring(first[1])


def test_cli_sides(tmp_path, capsys):
    out = tmp_path / "eq.json"
    assert main(["verify", "--sides", "2", "2", "2", "--report", str(out)]) == 0
    assert "WARNING" in capsys.readouterr().err
    assert "perturbed" in json.loads(out.read_text())["notes"][0]
    assert main(["verify", "--sides", "3", "4", "5"]) == 0


def test_cli_failing_check_exit_1(monkeypatch, capsys):
    import lawcos.cli as cli
    from lawcos.verify import CheckResult, FAIL

    real = cli.run_all

    def broken(*a, **kw):
        r = real(*a, **kw)
        r.checks.append(CheckResult("injected", FAIL, F(1)))
        return r

    monkeypatch.setattr(cli, "run_all", broken)
    assert main(["verify", "--points", "1,3 0,0 5,0"]) == 1


def test_cli_batch(tmp_path):
    out = tmp_path / "b.json"
    assert main(["batch", "--count", "30", "--seed", "1", "--bound", "15", "--report", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["failures"] == [] and doc["count"] == 30


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lawcos", "verify", "--points", "1,3 0,0 5,0", "--report", "-"],
        capture_output=True, text=True, env={"LAWCOS_NO_COLOR": "1", "PATH": ""},
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["all_pass"] is True
    bad = subprocess.run([sys.executable, "-m", "lawcos", "verify", "--points", "1,2"], capture_output=True)
    assert bad.returncode == 2
