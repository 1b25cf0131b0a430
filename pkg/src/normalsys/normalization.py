"""Reduction of a pair p = q = 0 to a normal system of total degree n + m - 1.

Every equation of the normal system is a multiplier times p or q: ``m``
multipliers of degree ``m - 1`` for p and ``n`` of degree ``n - 1`` for q.
With shifted-monomial multipliers the leading-form matrix of the system is
exactly the Sylvester matrix of the two leading forms, so normality is
equivalent to the leading forms of p and q sharing no nontrivial zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import atan2, pi
from typing import Iterator, Sequence

from .errors import AlgebraError
from .linalg import bareiss_det
from .poly import BiPoly, monomials_of_degree
from .solver import dual_space, solve

SHIFTED_MONOMIAL = "shifted_monomial"
Point = tuple[int, int]


def integer_spiral() -> Iterator[Point]:
    """Integer points by increasing |a| + |b|, counterclockwise from the +x axis within a shell.

    (0,0), (1,0), (0,1), (-1,0), (0,-1), (2,0), (1,1), ...
    """
    yield (0, 0)
    for r in count(1):
        shell = [(a, b) for a in range(-r, r + 1) for b in (r - abs(a), abs(a) - r)]
        shell = sorted(set(shell), key=lambda ab: atan2(ab[1], ab[0]) % (2 * pi))
        yield from shell


def shifted_monomials(degree: int, base: Point | None) -> list[BiPoly]:
    """(x - s)^a (y - t)^b for a + b = degree, in descending graded-lex order of (a, b)."""
    if degree == 0:
        return [BiPoly.constant(1)]
    s, t = base
    xs, ys = BiPoly({(1, 0): 1, (0, 0): -s}), BiPoly({(0, 1): 1, (0, 0): -t})
    return [xs**a * ys**b for a, b in monomials_of_degree(degree)]


@dataclass(frozen=True)
class MultiplierFamily:
    for_p: tuple[BiPoly, ...]
    for_q: tuple[BiPoly, ...]
    strategy: str
    base_p: Point | None
    base_q: Point | None

    @classmethod
    def shifted(cls, p_degree: int, q_degree: int, base_p: Point | None, base_q: Point | None) -> "MultiplierFamily":
        """Shifted-monomial family for a pair of degrees (n, m), without any validity check."""
        dp, dq = q_degree - 1, p_degree - 1
        base_p = base_p if dp > 0 else None
        base_q = base_q if dq > 0 else None
        return cls(tuple(shifted_monomials(dp, base_p)), tuple(shifted_monomials(dq, base_q)),
                   SHIFTED_MONOMIAL, base_p, base_q)

    def zero_sets(self) -> tuple[list[Point], list[Point]]:
        """Common zeros of each family: the base point, or nothing for the constant family."""
        zp = [self.base_p] if self.base_p is not None else []
        zq = [self.base_q] if self.base_q is not None else []
        return zp, zq


def build_multipliers(p: BiPoly, q: BiPoly, strategy: str = SHIFTED_MONOMIAL) -> MultiplierFamily:
    """Multipliers whose common zero sets avoid the partner curve.

    The p-side base point is the first spiral point off q; the q-side base
    point is the first spiral point off p that differs from it.  A family of
    degree 0 is ``{1}`` and needs no base point.
    """
    if strategy != SHIFTED_MONOMIAL:
        raise ValueError(f"unknown multiplier strategy {strategy!r}")
    if p.is_zero() or q.is_zero() or p.degree < 1 or q.degree < 1:
        raise AlgebraError("normalization needs two polynomials of positive degree")
    n, m = p.degree, q.degree
    base_p = None
    if m > 1:
        base_p = next(pt for pt in integer_spiral() if q.evaluate(pt) != 0)
    base_q = None
    if n > 1:
        base_q = next(pt for pt in integer_spiral() if p.evaluate(pt) != 0 and pt != base_p)
    return MultiplierFamily.shifted(n, m, base_p, base_q)


@dataclass(frozen=True)
class NormalSystem:
    equations: tuple[BiPoly, ...]
    degree: int
    leading_matrix: tuple[tuple[Fraction, ...], ...]
    family: MultiplierFamily | None = None

    @classmethod
    def from_equations(cls, equations: Sequence[BiPoly], family: MultiplierFamily | None = None) -> "NormalSystem":
        """Assemble the leading matrix; needs N + 1 equations all of total degree N."""
        eqs = tuple(equations)
        if not eqs or any(e.is_zero() for e in eqs):
            raise AlgebraError("normal system needs nonzero equations")
        N = len(eqs) - 1
        if any(e.degree != N for e in eqs):
            raise AlgebraError(f"expected {N + 1} equations of total degree {N}")
        cols = monomials_of_degree(N)
        matrix = tuple(tuple(e.coefficient(i, j) for i, j in cols) for e in eqs)
        return cls(eqs, N, matrix, family)


def build_normal_system(p: BiPoly, q: BiPoly, fam: MultiplierFamily) -> NormalSystem:
    eqs = [psi * p for psi in fam.for_p] + [phi * q for phi in fam.for_q]
    return NormalSystem.from_equations(eqs, fam)


def check_normality(ns: NormalSystem) -> tuple[bool, Fraction]:
    """(is_normal, det of the leading matrix)."""
    det = Fraction(bareiss_det(ns.leading_matrix))
    return det != 0, det


def _is_zero_of(polys: Sequence[BiPoly], pt) -> bool:
    return all(f.evaluate(pt) == 0 for f in polys)


def check_preservation(p: BiPoly, q: BiPoly, ns: NormalSystem) -> bool:
    """True iff ns has the same common zeros as (p, q), with equal multiplicities.

    Extra zeros of ns can only sit where a whole multiplier family vanishes,
    i.e. at the base points; multiplicities are compared at every rational
    solution through the local dual spaces of both systems.
    """
    fam = ns.family
    if fam is None:
        raise AlgebraError("preservation check needs the multiplier family")
    zp, zq = fam.zero_sets()
    for pt in zp + zq:
        if _is_zero_of(ns.equations, pt) and not _is_zero_of((p, q), pt):
            return False
    sol = solve(p, q)
    cap = max(int(p.degree) * int(q.degree), 1)
    for s in sol.solutions:
        if s.chart_point is None:
            continue
        z = s.location.as_tuple()
        if not _is_zero_of(ns.equations, z):
            return False
        try:
            if len(dual_space(ns.equations, z, cap)) != len(dual_space((p, q), z, cap)):
                return False
        except AlgebraError:
            return False
    return True
