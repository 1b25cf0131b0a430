"""Exact solving of p = q = 0 with intersection multiplicities.

The pair is moved to a chart where the leading forms are coprime, y is
eliminated, and every root of the eliminant is lifted to the points above it.
Points are then carried back to the caller's chart; those landing on the
original line at infinity are reported separately.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .elimination import (
    DEFAULT_ISOLATION_WIDTH,
    _resultant_y,
    fiber_gcds,
    gcd_univariate,
    isolate_real_roots,
    is_squarefree,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
)
from .errors import AlgebraError, InfiniteSolutionSet
from .linalg import nullspace, rref
from .poly import BiPoly, Scalar, UniPoly, grlex_key
from .projective import (
    ProjectiveMap,
    choose_generic_chart,
    has_common_factor,
    infinity_line,
    leading_forms_coprime,
    map_point,
    transform_chart,
)

UNRESOLVED = "unresolved"
PARTIAL = "partial"


@dataclass(frozen=True, order=True)
class ExactPoint:
    x: Fraction
    y: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


@dataclass(frozen=True)
class BoxedPoint:
    """A real point known only through isolating intervals.

    ``x_lo == x_hi`` means the x-coordinate is exact.  Intervals with
    ``lo < hi`` are open.  Coordinates refer to the solving chart.  When
    ``y_of_x`` is set, y equals that polynomial evaluated at the root of
    ``factor`` in the x interval.
    """

    x_lo: Fraction
    x_hi: Fraction
    factor: UniPoly
    y_lo: Fraction | None = None
    y_hi: Fraction | None = None
    y_of_x: UniPoly | None = None


@dataclass(frozen=True)
class NonRealPoints:
    """``count`` distinct non-real solutions whose x-coordinates (or, above a
    fixed rational ``x``, y-coordinates) are the non-real roots of ``factor``."""

    factor: UniPoly
    count: int
    fixed_x: Fraction | None = None
    y_of_x: UniPoly | None = None


Location = Union[ExactPoint, BoxedPoint, NonRealPoints]


@dataclass(frozen=True)
class Solution:
    location: Location
    multiplicity: Union[int, str]
    fiber: str = "exact"
    chart_point: ExactPoint | None = None
    eliminant_multiplicity: int | None = None
    at_infinity: tuple[Fraction, Fraction, Fraction] | None = None

    @property
    def count(self) -> int:
        return self.location.count if isinstance(self.location, NonRealPoints) else 1

    @property
    def resolved(self) -> bool:
        return isinstance(self.multiplicity, int) and self.fiber != UNRESOLVED


@dataclass(frozen=True)
class SolutionSet:
    p: BiPoly
    q: BiPoly
    chart: ProjectiveMap
    chart_p: BiPoly
    chart_q: BiPoly
    eliminant: UniPoly
    solutions: tuple[Solution, ...]
    escaped: tuple[Solution, ...]
    bezout: int
    distinct_count: int
    multiplicity_sum: Union[int, str]

    def all_solutions(self) -> tuple[Solution, ...]:
        return self.solutions + self.escaped

    def exact_points(self) -> list[ExactPoint]:
        return [s.location for s in self.solutions if isinstance(s.location, ExactPoint)]


# --------------------------------------------------------------------------
# local dual space

def _image_of_monomial(symbol: BiPoly, i: int, j: int) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    for (a, b), c in symbol.terms.items():
        if a > i or b > j:
            continue
        f = c
        for t in range(a):
            f *= i - t
        for t in range(b):
            f *= j - t
        m = (i - a, j - b)
        out[m] = out.get(m, 0) + f
    return out


def _kernel_at_degree(shifted: Sequence[BiPoly], k: int) -> list[BiPoly]:
    cols = sorted(((i, d - i) for d in range(k + 1) for i in range(d + 1)), key=grlex_key, reverse=True)
    rows = []
    for s in shifted:
        images = [_image_of_monomial(s, i, j) for i, j in cols]
        for out_m in cols:
            row = [img.get(out_m, Fraction(0)) for img in images]
            if any(row):
                rows.append(row)
    vecs = nullspace(rows, len(cols))
    if not vecs:
        return []
    # canonical basis: reduced echelon form w.r.t. descending graded-lex columns
    reduced, _ = rref(vecs)
    basis = [BiPoly({cols[c]: v for c, v in enumerate(row) if v}) for row in reduced]
    return sorted(basis, key=lambda h: grlex_key(h.sorted_terms()[0][0]))


def dual_space(polys: Sequence[BiPoly], z: Sequence[Scalar], cap: int) -> list[BiPoly]:
    """Basis of polynomial h with P(d + z) h = 0 for every P in ``polys``.

    The degree bound is raised until the dimension stops growing; ``cap``
    bounds the search and signals a non-isolated zero when reached.
    """
    zx, zy = Fraction(z[0]), Fraction(z[1])
    if any(P.evaluate((zx, zy)) != 0 for P in polys):
        raise AlgebraError("not a common zero")
    shifted = [P.translate(zx, zy) for P in polys]
    prev = _kernel_at_degree(shifted, 0)
    for k in range(1, cap + 1):
        cur = _kernel_at_degree(shifted, k)
        if len(cur) == len(prev):
            return prev
        prev = cur
    raise AlgebraError("multiplicity overflow")


def local_multiplicity(p: BiPoly, q: BiPoly, z: Sequence[Scalar] | ExactPoint) -> tuple[int, list[BiPoly]]:
    """Intersection multiplicity at a rational common zero, with a dual basis."""
    if isinstance(z, ExactPoint):
        z = z.as_tuple()
    cap = max(int(p.degree) * int(q.degree), 1)
    basis = dual_space([p, q], z, cap)
    return len(basis), basis


# --------------------------------------------------------------------------
# solving

def _distinct_x_predicate(cache: dict):
    # Points on x = 0 share x in every shear chart, so that fiber is exempt.
    def accept(p2: BiPoly, q2: BiPoly) -> bool:
        elim = _resultant_y(p2, q2)
        cache[(p2, q2)] = elim
        if is_squarefree(elim):
            return True
        for f, mult in squarefree_decomposition(elim):
            if mult == 1:
                continue
            rest = f
            for r, _ in rational_roots(f):
                rest = rest.exact_div(UniPoly.linear_root(r))
                if r != 0 and _fiber_gcd(p2, q2, r).degree != 1:
                    return False
            if rest.degree >= 1 and any(len(g) != 2 for _, g in fiber_gcds(p2, q2, rest)):
                return False
        return True

    return accept


def _fiber_gcd(p2: BiPoly, q2: BiPoly, r: Fraction) -> UniPoly:
    a, b = p2.at_x(r), q2.at_x(r)
    return gcd_univariate(a, b)


def _to_original(chart: ProjectiveMap, x: Fraction, y: Fraction):
    img = map_point((x, y, 1), chart, "inverse")
    if len(img) == 2:
        return ExactPoint(*img), None
    return None, img


class _Builder:
    def __init__(self, p, q, chart, p2, q2, width):
        self.p, self.q, self.chart, self.p2, self.q2 = p, q, chart, p2, q2
        self.width = width
        self.cap = max(int(p.degree) * int(q.degree), 1)
        self.line = infinity_line(chart)
        self.affine: list[Solution] = []
        self.escaped: list[Solution] = []

    def add_exact(self, x: Fraction, y: Fraction, mult: int, elim_mult: int | None):
        orig, triple = _to_original(self.chart, x, y)
        chart_pt = ExactPoint(x, y)
        if orig is not None:
            if self.p.evaluate(orig.as_tuple()) != 0 or self.q.evaluate(orig.as_tuple()) != 0:
                raise AssertionError(f"back-mapped point {orig} does not solve the system")
            self.affine.append(Solution(orig, mult, "exact", chart_pt, elim_mult))
        else:
            lp, lq = self.p.leading_form(), self.q.leading_form()
            if lp.evaluate(triple[:2]) != 0 or lq.evaluate(triple[:2]) != 0:
                raise AssertionError(f"point at infinity {triple} is not common to both curves")
            self.escaped.append(Solution(ExactPoint(*triple[:2]), mult, "exact", chart_pt, elim_mult, triple))

    def add_other(self, sol: Solution, escaped: bool):
        (self.escaped if escaped else self.affine).append(sol)

    def resolve_rational_fiber(self, r: Fraction, mu: int):
        g = _fiber_gcd(self.p2, self.q2, r)
        if g.degree < 1:
            raise AssertionError("eliminant root without a common zero in a generic chart")
        if g.degree == 1:
            (y0, _), = rational_roots(g)
            self.add_exact(r, y0, mu, mu)
            return
        g = squarefree_part(g)
        used = 0
        for y0, _ in rational_roots(g):
            m, _ = local_multiplicity(self.p2, self.q2, (r, y0))
            used += m
            self.add_exact(r, y0, m, None)
            g = g.exact_div(UniPoly.linear_root(y0))
        if g.degree < 1:
            return
        rest = mu - used
        mult, fiber = (1, "single point") if rest == g.degree else (UNRESOLVED, UNRESOLVED)
        u, v, w = self.line
        # irrational y never lies on a line with rational slope unless the line is x = r
        escaped = v == 0 and u * r + w == 0 and (u, v) != (0, 0)
        intervals = isolate_real_roots(g, self.width)
        for lo, hi in intervals:
            self.add_other(Solution(BoxedPoint(r, r, g, lo, hi), mult, fiber), escaped)
        nonreal = g.degree - len(intervals)
        if nonreal:
            self.add_other(Solution(NonRealPoints(g, nonreal, r), mult, fiber), escaped)

    def resolve_irrational_factor(self, g: UniPoly, mu: int):
        u, v, w = self.line
        for fac, fiber in fiber_gcds(self.p2, self.q2, g):
            d = len(fiber) - 1
            if d < 1:
                raise AssertionError("eliminant root without a common zero in a generic chart")
            if d > 1:
                # several points, possibly coincident, share each x: left unresolved
                self._emit_x_roots(fac, None, UNRESOLVED, UNRESOLVED, False, count_per_root=d)
                continue
            # one point above each root: y = -fiber[0], exact in Q[x]/(fac)
            y_of_x = (-fiber[0]) % fac
            on_line = (UniPoly([w, u]) + y_of_x * v) % fac
            esc = gcd_univariate(fac, on_line) if on_line else fac
            parts = [(fac.exact_div(esc), False), (esc, True)] if esc.degree > 0 else [(fac, False)]
            for part, escaped in parts:
                if part.degree >= 1:
                    self._emit_x_roots(part.monic(), y_of_x % part, mu, "single point", escaped)

    def _emit_x_roots(self, part, y_of_x, mult, state, escaped, count_per_root=1):
        intervals = isolate_real_roots(part, self.width)
        for lo, hi in intervals:
            for _ in range(count_per_root):
                self.add_other(Solution(BoxedPoint(lo, hi, part, y_of_x=y_of_x), mult, state), escaped)
        nonreal = part.degree - len(intervals)
        if nonreal:
            loc = NonRealPoints(part, nonreal * count_per_root, y_of_x=y_of_x)
            self.add_other(Solution(loc, mult, state), escaped)


def _sort_key(s: Solution):
    loc = s.location
    if isinstance(loc, ExactPoint):
        return (0, loc.x, loc.y, Fraction(0))
    if isinstance(loc, BoxedPoint):
        return (1, loc.x_lo, loc.y_lo if loc.y_lo is not None else Fraction(0), loc.x_hi)
    return (2, loc.fixed_x if loc.fixed_x is not None else Fraction(0), Fraction(loc.count), Fraction(0))


def _escaped_key(s: Solution):
    if s.at_infinity is not None:
        return (0,) + tuple(s.at_infinity)
    return (1,) + _sort_key(s)[1:]


def solve(
    p: BiPoly,
    q: BiPoly,
    budget: int | None = None,
    width: Scalar = DEFAULT_ISOLATION_WIDTH,
    chart: ProjectiveMap | None = None,
) -> SolutionSet:
    """Solve p = q = 0 exactly, with multiplicities and a Bezout audit trail."""
    if p.is_zero() or q.is_zero():
        raise InfiniteSolutionSet()
    n, m = p.degree, q.degree
    if n == 0 or m == 0:
        ident = ProjectiveMap.identity()
        return SolutionSet(p, q, ident, p, q, UniPoly([1]), (), (), n * m, 0, 0)
    cache: dict = {}
    if chart is None:
        chart, p2, q2 = choose_generic_chart(p, q, budget, accept=_distinct_x_predicate(cache))
    else:
        if has_common_factor(p, q):
            raise InfiniteSolutionSet()
        p2, q2 = transform_chart(p, chart), transform_chart(q, chart)
        if not leading_forms_coprime(p2, q2):
            raise AlgebraError("chart is not generic: leading forms share a root")
    elim = cache.get((p2, q2))
    if elim is None:
        elim = _resultant_y(p2, q2)
    builder = _Builder(p, q, chart, p2, q2, Fraction(width))
    for f, mu in squarefree_decomposition(elim):
        rest = f
        for r, _ in rational_roots(f):
            builder.resolve_rational_fiber(r, mu)
            rest = rest.exact_div(UniPoly.linear_root(r))
        if rest.degree >= 1:
            builder.resolve_irrational_factor(rest, mu)
    affine = tuple(sorted(builder.affine, key=_sort_key))
    escaped = tuple(sorted(builder.escaped, key=_escaped_key))
    every = affine + escaped
    distinct = sum(s.count for s in every)
    if all(s.resolved for s in every):
        mult_sum: Union[int, str] = sum(s.multiplicity * s.count for s in every)
    else:
        mult_sum = PARTIAL
    return SolutionSet(p, q, chart, p2, q2, elim.monic(), affine, escaped, n * m, distinct, mult_sum)


# --------------------------------------------------------------------------
# audit

@dataclass(frozen=True)
class MultiplicityCheck:
    chart_point: ExactPoint
    eliminant_multiplicity: int | None
    dual_multiplicity: int

    @property
    def ok(self) -> bool:
        return self.eliminant_multiplicity is None or self.eliminant_multiplicity == self.dual_multiplicity


@dataclass(frozen=True)
class AuditReport:
    bezout: int
    distinct_count: int
    multiplicity_sum: Union[int, str]
    generic_chart: bool
    bound_ok: bool
    sum_ok: bool | None
    checks: tuple[MultiplicityCheck, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.bound_ok and self.sum_ok is not False and all(c.ok for c in self.checks)


def audit(sol: SolutionSet) -> AuditReport:
    """Check the distinct-count bound, the multiplicity sum, and agree the
    eliminant multiplicity with the dual-space dimension at exact points."""
    generic = sol.bezout == 0 or leading_forms_coprime(sol.chart_p, sol.chart_q)
    bound_ok = sol.distinct_count <= sol.bezout
    if generic and isinstance(sol.multiplicity_sum, int):
        sum_ok = sol.multiplicity_sum == sol.bezout
    else:
        sum_ok = None
    checks = []
    for s in sol.all_solutions():
        if s.chart_point is None:
            continue
        dim, _ = local_multiplicity(sol.chart_p, sol.chart_q, s.chart_point)
        checks.append(MultiplicityCheck(s.chart_point, s.eliminant_multiplicity, dim))
    return AuditReport(sol.bezout, sol.distinct_count, sol.multiplicity_sum, generic, bound_ok, sum_ok, tuple(checks))
