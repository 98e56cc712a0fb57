"""JSON serialization of verification reports.

Scalars are written as ``"p/q"`` strings (integers without the ``/1``) so a
report can be read back into exact Fractions.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .figure import Color
from .verify import VerificationReport


def scalar_text(v: Fraction) -> str:
    return str(Fraction(v))


def parse_scalar_text(s: str) -> Fraction:
    return Fraction(s)


def report_dict(report: VerificationReport) -> dict[str, Any]:
    f = report.figure
    case = report.case
    chain = report.chain
    names = ("A", "B", "C")
    out: dict[str, Any] = {
        "input": {n: [scalar_text(p.x), scalar_text(p.y)] for n, p in zip(names, report.points)},
        "orientation": case.orientation,
        "case": {
            "angles": {k: v.value for k, v in case.angles.items()},
            "reflected": {k: v.value for k, v in case.reflected.items()},
            "altitude_exceeds_side": dict(case.altitude_exceeds_side),
            "foot_within_edge": dict(case.foot_within_edge),
        },
        "areas": {
            "squares": {d.color.value: scalar_text(d.square.area) for d in f.dissections},
            "pieces": {
                d.color.value: {str(i): scalar_text(v) for i, v in sorted(d.piece_areas().items())}
                for d in f.dissections
            },
            "colored": {
                d.color.value: {lab: scalar_text(d.area(d.colored_at(lab))) for lab in d.labels[:2]}
                for d in f.dissections
            },
            "pairs": {c.value: [scalar_text(a) for a in f.pairs[c].areas] for c in Color},
            "blue_quadruple": scalar_text(chain.blue_quadruple),
            "dot_CAB": scalar_text(chain.dot_cab),
        },
        "chain": {
            "sides": scalar_text(chain.sides),
            "squares": scalar_text(chain.squares),
            "pieces": scalar_text(chain.pieces),
            "groups": scalar_text(chain.groups),
        },
        "checks": [
            {"name": c.name, "status": c.status, "residual": scalar_text(c.residual)}
            for c in report.checks
        ],
        "all_pass": report.all_pass,
    }
    if report.notes:
        out["notes"] = list(report.notes)
    return out


def emit_report(report: VerificationReport) -> str:
    return json.dumps(report_dict(report), indent=2, ensure_ascii=False) + "\n"
