"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (for example
a system whose solution set is not finite).  Errors are printed to stderr as
a single-line JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import report
from .elimination import DEFAULT_ISOLATION_WIDTH, resultant_of_forms, resultant_wrt_y
from .errors import AlgebraError, ParseError
from .normalization import (
    SHIFTED_MONOMIAL,
    NormalSystem,
    build_multipliers,
    build_normal_system,
    check_normality,
    check_preservation,
)
from .parser import OPERATOR_VARS, XY, parse_polynomial
from .pde import solution_basis
from .poly import BiPoly, format_rational
from .projective import choose_generic_chart
from .solver import ExactPoint, audit, solve

COMMANDS = ("solve", "normalize", "check-normal", "resultant", "chart", "pde-basis", "audit")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="normalsys", description="Exact bivariate polynomial systems and normal-system reduction.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        if name == "check-normal":
            cmd.add_argument("-e", "--equation", action="append", default=[], help="equation of the system (repeatable)")
        else:
            cmd.add_argument("-p", help="first polynomial")
            cmd.add_argument("-q", help="second polynomial")
        cmd.add_argument("-f", "--file", help="input file: one polynomial per line, or a JSON job")
        fmt = cmd.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="format", action="store_const", const="json")
        fmt.add_argument("--text", dest="format", action="store_const", const="text")
        cmd.add_argument("--budget", type=int, default=None, help="chart search shell bound (default 10, or NF_CHART_BUDGET)")
        cmd.add_argument("--width", type=Fraction, default=DEFAULT_ISOLATION_WIDTH, help="isolation interval width")
        cmd.add_argument("--strategy", choices=[SHIFTED_MONOMIAL], default=SHIFTED_MONOMIAL)
    return parser


def _read_job(path: str) -> dict | list[str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON job: {exc.msg}") from None
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _pair_texts(args) -> tuple[str, str]:
    if args.file:
        job = _read_job(args.file)
        if isinstance(job, dict):
            if "p" not in job or "q" not in job:
                raise UsageError("JSON job needs keys 'p' and 'q'")
            return str(job["p"]), str(job["q"])
        if len(job) != 2:
            raise UsageError(f"expected 2 polynomials in {args.file}, found {len(job)}")
        return job[0], job[1]
    if args.p is None or args.q is None:
        raise UsageError("give -p and -q, or --file")
    return args.p, args.q


def _pair(args, variables=XY) -> tuple[BiPoly, BiPoly]:
    tp, tq = _pair_texts(args)
    return parse_polynomial(tp, variables), parse_polynomial(tq, variables)


def _equations(args) -> list[BiPoly]:
    texts = list(args.equation)
    if args.file:
        job = _read_job(args.file)
        if isinstance(job, dict):
            if "equations" not in job:
                raise UsageError("JSON job needs key 'equations'")
            texts += [str(e) for e in job["equations"]]
        else:
            texts += job
    if not texts:
        raise UsageError("give equations with -e or --file")
    return [parse_polynomial(t) for t in texts]


def _point(x, y) -> str:
    return f"({format_rational(x)}, {format_rational(y)})"


def _matrix(chart) -> str:
    return json.dumps(chart.to_json(), separators=(",", ":"))


def _solution_lines(sol) -> list[str]:
    lines = [f"bezout: {sol.bezout}", f"chart: {_matrix(sol.chart)}", f"eliminant: {sol.eliminant}"]
    for s in sol.solutions:
        d = report.solution(s)
        if isinstance(s.location, ExactPoint):
            lines.append(f"solution {_point(s.location.x, s.location.y)} multiplicity {s.multiplicity}")
        else:
            lines.append(f"solution {json.dumps(d, separators=(',', ':'))}")
    for s in sol.escaped:
        d = report.solution(s)
        if s.at_infinity is not None:
            pt = ":".join(format_rational(v) for v in s.at_infinity)
            lines.append(f"escaped to infinity [{pt}] multiplicity {s.multiplicity}")
        else:
            lines.append(f"escaped to infinity {json.dumps(d, separators=(',', ':'))}")
    lines.append(f"distinct: {sol.distinct_count}")
    lines.append(f"multiplicity sum: {sol.multiplicity_sum}")
    return lines


def _cmd_solve(args):
    p, q = _pair(args)
    sol = solve(p, q, budget=args.budget, width=args.width)
    return report.solution_set(sol), _solution_lines(sol)


def _cmd_audit(args):
    p, q = _pair(args)
    rep = audit(solve(p, q, budget=args.budget, width=args.width))
    data = report.audit_report(rep)
    lines = [f"{k}: {v}" for k, v in data.items() if k != "checks"]
    for c in data["checks"]:
        lines.append(f"check {c['chart_point']}: eliminant {c['eliminant_mult']} dual {c['dual_mult']} ok {c['ok']}")
    return data, lines


def _cmd_normalize(args):
    p, q = _pair(args)
    chart, p2, q2 = choose_generic_chart(p, q, args.budget)
    fam = build_multipliers(p2, q2, args.strategy)
    ns = build_normal_system(p2, q2, fam)
    _, cert = check_normality(ns)
    preserved = check_preservation(p2, q2, ns)
    data = report.normal_system(ns, cert, preserved, chart)
    lines = [f"N: {ns.degree}", f"chart: {_matrix(chart)}"]
    lines += [f"  {e}" for e in data["equations"]]
    lines += [f"certificate: {data['certificate']}", f"normal: {data['normal']}", f"preserved: {preserved}"]
    return data, lines


def _cmd_check_normal(args):
    ns = NormalSystem.from_equations(_equations(args))
    ok, cert = check_normality(ns)
    data = {"normal": ok, "certificate": format_rational(cert)}
    return data, [f"normal: {ok}", f"certificate: {data['certificate']}"]


def _cmd_resultant(args):
    p, q = _pair(args)
    elim = resultant_wrt_y(p, q)
    forms = resultant_of_forms(p.leading_form(), q.leading_form())
    data = {"resultant": str(elim), "degree": elim.degree if elim else None,
            "leading_forms_resultant": format_rational(forms)}
    return data, [f"{k}: {v}" for k, v in data.items()]


def _cmd_chart(args):
    p, q = _pair(args)
    chart, p2, q2 = choose_generic_chart(p, q, args.budget)
    res = resultant_of_forms(p2.leading_form(), q2.leading_form())
    data = {"chart": chart.to_json(), "identity": chart.is_identity(), "p": str(p2), "q": str(q2),
            "leading_forms_resultant": format_rational(res)}
    lines = [f"{k}: {_matrix(chart) if k == 'chart' else v}" for k, v in data.items()]
    return data, lines


def _cmd_pde_basis(args):
    p, q = _pair(args, OPERATOR_VARS)
    basis = solution_basis(p, q)
    data = {"operators": [p.to_string(OPERATOR_VARS), q.to_string(OPERATOR_VARS)],
            "basis": [str(u) for u in basis], "count": len(basis)}
    return data, [str(u) for u in basis]


HANDLERS = {
    "solve": _cmd_solve,
    "normalize": _cmd_normalize,
    "check-normal": _cmd_check_normal,
    "resultant": _cmd_resultant,
    "chart": _cmd_chart,
    "pde-basis": _cmd_pde_basis,
    "audit": _cmd_audit,
}


def _fail(kind: str, message: str, code: int, **extra) -> int:
    payload = {"error": message, "kind": kind, **extra}
    print(json.dumps(payload, separators=(",", ":")), file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        data, lines = HANDLERS[args.command](args)
    except UsageError as exc:
        return _fail("usage", str(exc), 1)
    except ParseError as exc:
        return _fail("parse", exc.reason, 1, column=exc.column)
    except AlgebraError as exc:
        return _fail("domain", str(exc), 2)
    if args.format == "json":
        print(json.dumps(data, separators=(",", ":")))
    else:
        print("\n".join(lines))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
