"""JSON-ready dictionaries for library results.  Rationals are always strings."""
from __future__ import annotations

from fractions import Fraction

from .normalization import NormalSystem
from .poly import format_rational
from .solver import AuditReport, BoxedPoint, ExactPoint, Solution, SolutionSet

r = format_rational


def interval(lo: Fraction, hi: Fraction) -> dict:
    return {"lo": r(lo), "hi": r(hi)}


def solution(s: Solution) -> dict:
    loc = s.location
    if s.at_infinity is not None:
        out = {"point": [r(v) for v in s.at_infinity]}
    elif isinstance(loc, ExactPoint):
        out = {"x": r(loc.x), "y": r(loc.y)}
    elif isinstance(loc, BoxedPoint):
        out = {"x": interval(loc.x_lo, loc.x_hi), "factor": loc.factor.to_string("x" if loc.y_lo is None else "y")}
        if loc.y_lo is not None:
            out["y"] = interval(loc.y_lo, loc.y_hi)
        elif loc.y_of_x is not None:
            out["y"] = loc.y_of_x.to_string()
        out["chart_coordinates"] = True
    else:
        out = {"nonreal": loc.count, "factor": loc.factor.to_string("x" if loc.fixed_x is None else "y")}
        if loc.fixed_x is not None:
            out["x"] = r(loc.fixed_x)
        elif loc.y_of_x is not None:
            out["y"] = loc.y_of_x.to_string()
        out["chart_coordinates"] = True
    out["mult"] = s.multiplicity
    if s.fiber != "exact":
        out["fiber"] = s.fiber
    return out


def solution_set(sol: SolutionSet) -> dict:
    return {
        "bezout": sol.bezout,
        "chart": sol.chart.to_json(),
        "solutions": [solution(s) for s in sol.solutions],
        "escaped": [solution(s) for s in sol.escaped],
        "distinct": sol.distinct_count,
        "mult_sum": sol.multiplicity_sum,
        "eliminant": str(sol.eliminant),
    }


def audit_report(rep: AuditReport) -> dict:
    return {
        "passed": rep.passed,
        "bezout": rep.bezout,
        "distinct": rep.distinct_count,
        "mult_sum": rep.multiplicity_sum,
        "generic_chart": rep.generic_chart,
        "bound_ok": rep.bound_ok,
        "sum_ok": rep.sum_ok,
        "checks": [
            {
                "chart_point": [r(c.chart_point.x), r(c.chart_point.y)],
                "eliminant_mult": c.eliminant_multiplicity,
                "dual_mult": c.dual_multiplicity,
                "ok": c.ok,
            }
            for c in rep.checks
        ],
    }


def normal_system(ns: NormalSystem, certificate: Fraction, preserved: bool | None, chart=None) -> dict:
    fam = ns.family
    out = {
        "N": ns.degree,
        "equations": [str(e) for e in ns.equations],
        "normal": certificate != 0,
        "certificate": r(certificate),
    }
    if fam is not None:
        out["base_points"] = {
            "p": None if fam.base_p is None else list(fam.base_p),
            "q": None if fam.base_q is None else list(fam.base_q),
        }
        out["multipliers"] = {"p": [str(f) for f in fam.for_p], "q": [str(f) for f in fam.for_q]}
    if chart is not None:
        out["chart"] = chart.to_json()
    out["preserved"] = preserved
    return out

