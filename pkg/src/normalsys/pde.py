"""Constant-coefficient PDE systems and their poly-exponential solutions.

A symbol ``P`` stands for the operator ``P(Dx, Dy)``.  The exponential
shift ``P(D)(h e^{l.x}) = (P(D + l) h) e^{l.x}`` reduces solving to the
characteristic system: every characteristic root ``l`` of multiplicity
``mu`` contributes ``mu`` solutions ``h e^{l.x}``, with ``h`` running over
the local dual basis at ``l``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import AlgebraError
from .linalg import rank
from .poly import BiPoly, Scalar, grlex_key
from .solver import ExactPoint, local_multiplicity, solve

Exponent = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PDEOperator:
    symbol: BiPoly

    def __call__(self, u: "PolyExpFunction") -> "PolyExpFunction":
        return apply(self, u)


class PolyExpFunction:
    """Finite sum of h(x, y) * exp(l1*x + l2*y), one polynomial per exponent."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[Scalar], BiPoly] | Iterable[tuple[Sequence[Scalar], BiPoly]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, BiPoly] = {}
        for lam, h in items:
            key = (Fraction(lam[0]), Fraction(lam[1]))
            acc[key] = acc.get(key, BiPoly()) + h
        self._terms = {k: h for k, h in acc.items() if not h.is_zero()}

    @classmethod
    def exp_term(cls, h: BiPoly, lam: Sequence[Scalar]) -> "PolyExpFunction":
        return cls([(lam, h)])

    @property
    def terms(self) -> list[tuple[Exponent, BiPoly]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "PolyExpFunction") -> "PolyExpFunction":
        return PolyExpFunction(list(self._terms.items()) + list(other._terms.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyExpFunction) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for lam, h in self.terms:
            if lam == (0, 0):
                pieces.append(str(h))
                continue
            e = f"exp({BiPoly({(1, 0): lam[0], (0, 1): lam[1]})})"
            if h == 1:
                pieces.append(e)
            elif len(h.terms) == 1 and next(iter(h.terms.values())) > 0:
                pieces.append(f"{h}*{e}")
            else:
                pieces.append(f"({h})*{e}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"PolyExpFunction({str(self)!r})"


def shift_symbol(P: BiPoly, lam: Sequence[Scalar]) -> BiPoly:
    """The Taylor shift P(x + l1, y + l2)."""
    return P.translate(lam[0], lam[1])


def apply(opr: PDEOperator | BiPoly, u: PolyExpFunction) -> PolyExpFunction:
    """Apply a constant-coefficient operator term by term via the exponential shift."""
    P = opr.symbol if isinstance(opr, PDEOperator) else opr
    return PolyExpFunction([(lam, shift_symbol(P, lam).apply_as_operator(h)) for lam, h in u.terms])


def _d(u: dict[Exponent, BiPoly], var: str) -> dict[Exponent, BiPoly]:
    # product rule: d(h e^{l.x}) = (dh + l_k h) e^{l.x}
    k = 0 if var == "x" else 1
    out = {}
    for lam, h in u.items():
        out[lam] = h.differentiate(var) + h.scale(lam[k])
    return out


def apply_direct(P: BiPoly, u: PolyExpFunction) -> PolyExpFunction:
    """Apply P(Dx, Dy) by repeated first-order differentiation of each product."""
    base = dict(u.terms)
    total: list[tuple[Exponent, BiPoly]] = []
    for (a, b), c in P.terms.items():
        cur = base
        for _ in range(a):
            cur = _d(cur, "x")
        for _ in range(b):
            cur = _d(cur, "y")
        total.extend((lam, h.scale(c)) for lam, h in cur.items())
    return PolyExpFunction(total)


def verify(p: BiPoly, q: BiPoly, u: PolyExpFunction) -> bool:
    """True iff both operators annihilate u, checked by direct differentiation."""
    return apply_direct(p, u).is_zero() and apply_direct(q, u).is_zero()


def solution_basis(p: BiPoly, q: BiPoly) -> list[PolyExpFunction]:
    """Poly-exponential solutions of p(D)u = q(D)u = 0 attached to the characteristic roots.

    Restricted to systems whose affine characteristic roots are all rational.
    """
    sol = solve(p, q)
    if any(not isinstance(s.location, ExactPoint) for s in sol.solutions):
        raise AlgebraError("basis restricted to rational characteristic roots")
    basis: list[PolyExpFunction] = []
    for s in sol.solutions:
        lam = s.location.as_tuple()
        mult, dual = local_multiplicity(p, q, lam)
        if mult != s.multiplicity:
            raise AssertionError(f"dual dimension {mult} disagrees with multiplicity {s.multiplicity} at {lam}")
        for h in dual:
            u = PolyExpFunction.exp_term(h, lam)
            if not verify(p, q, u):
                raise AssertionError(f"basis element {u} fails verification")
            basis.append(u)
    return basis


def coefficient_rank(functions: Sequence[PolyExpFunction]) -> int:
    """Rank of the functions as vectors over the (exponent, monomial) basis."""
    keys = sorted({(lam, m) for f in functions for lam, h in f.terms for m in h.terms},
                  key=lambda k: (k[0], grlex_key(k[1])))
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for f in functions:
        row = [Fraction(0)] * len(keys)
        for lam, h in f.terms:
            for m, c in h.terms.items():
                row[index[(lam, m)]] = c
        rows.append(row)
    return rank(rows)
