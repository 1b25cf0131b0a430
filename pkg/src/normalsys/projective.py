"""Homogenization and changes of affine chart in the projective plane.

A chart is selected by a :class:`ProjectiveMap` ``M`` acting on homogeneous
points ``[X:Y:Z] -> M [X:Y:Z]``; the new line at infinity is the image of
``Z' = 0``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from .elimination import _resultant_y, gcd_univariate, resultant_of_forms
from .errors import AlgebraError, ChartSearchExhausted, InfiniteSolutionSet
from .linalg import bareiss_det
from .poly import BiPoly, Scalar, format_rational

DEFAULT_CHART_BUDGET = 10
Triple = tuple[int, int, int]


class TriForm:
    """Homogeneous polynomial in X, Y, Z."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[Triple, Scalar], degree: int):
        self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        self.degree = degree
        if any(sum(m) != degree for m in self.terms):
            raise AlgebraError("terms of a form must share one total degree")

    def __eq__(self, other) -> bool:
        return isinstance(other, TriForm) and (self.terms, self.degree) == (other.terms, other.degree)

    def dehomogenize(self) -> BiPoly:
        """Set the third coordinate to 1."""
        return BiPoly({(i, j): c for (i, j, _), c in self.terms.items()})

    def substitute_linear(self, rows: Sequence[Sequence[Fraction]]) -> "TriForm":
        """Replace each old coordinate by a linear form in the new coordinates.

        ``rows[k]`` holds the coefficients of (X', Y', Z') in old coordinate k.
        """
        images = [_LinForm3(r) for r in rows]
        acc: dict[Triple, Fraction] = {}
        cache: dict[tuple[int, int], dict[Triple, Fraction]] = {}
        for mono, c in self.terms.items():
            prod = {(0, 0, 0): Fraction(1)}
            for k, e in enumerate(mono):
                if e == 0:
                    continue
                if (k, e) not in cache:
                    cache[(k, e)] = images[k].power(e)
                prod = _mul3(prod, cache[(k, e)])
            for m, v in prod.items():
                acc[m] = acc.get(m, 0) + c * v
        return TriForm(acc, self.degree)

    def __repr__(self) -> str:
        return f"TriForm({self.terms!r}, degree={self.degree})"


def _mul3(a: dict, b: dict) -> dict:
    out: dict[Triple, Fraction] = {}
    for (i1, j1, k1), c1 in a.items():
        for (i2, j2, k2), c2 in b.items():
            m = (i1 + i2, j1 + j2, k1 + k2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


class _LinForm3:
    def __init__(self, coeffs: Sequence[Fraction]):
        self.poly = {m: Fraction(c) for m, c in zip([(1, 0, 0), (0, 1, 0), (0, 0, 1)], coeffs) if c}

    def power(self, e: int) -> dict:
        out = {(0, 0, 0): Fraction(1)}
        for _ in range(e):
            out = _mul3(out, self.poly)
        return out


def homogenize(f: BiPoly) -> TriForm:
    if f.is_zero():
        raise AlgebraError("cannot homogenize the zero polynomial")
    d = f.degree
    return TriForm({(i, j, d - i - j): c for (i, j), c in f.terms.items()}, d)


def _inverse3(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    det = Fraction(bareiss_det(m))
    if det == 0:
        raise AlgebraError("non-invertible change")

    def minor(r, c):
        rows = [row for k, row in enumerate(m) if k != r]
        sub = [[v for k, v in enumerate(row) if k != c] for row in rows]
        return sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]

    return [[(-1) ** (r + c) * minor(c, r) / det for c in range(3)] for r in range(3)]


@dataclass(frozen=True)
class ProjectiveMap:
    """Invertible 3x3 rational matrix, stored with its exact inverse."""

    matrix: tuple[tuple[Fraction, ...], ...]
    inverse: tuple[tuple[Fraction, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Scalar]]) -> "ProjectiveMap":
        m = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("projective map needs a 3x3 matrix")
        inv = tuple(tuple(r) for r in _inverse3(m))
        return cls(m, inv)

    @classmethod
    def identity(cls) -> "ProjectiveMap":
        return cls.from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def shear_infinity(cls, a: int, b: int) -> "ProjectiveMap":
        """Fix X and Y, send Z to Z + aX + bY."""
        return cls.from_matrix([[1, 0, 0], [0, 1, 0], [a, b, 1]])

    def inverted(self) -> "ProjectiveMap":
        return ProjectiveMap(self.inverse, self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == ProjectiveMap.identity().matrix

    def to_json(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.matrix]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[str]]) -> "ProjectiveMap":
        return cls.from_matrix([[Fraction(v) for v in row] for row in rows])


def transform_chart(f: BiPoly, pmap: ProjectiveMap) -> BiPoly:
    """Express the curve f = 0 in the affine chart selected by ``pmap``."""
    form = homogenize(f)
    moved = form.substitute_linear(pmap.inverse)
    g = moved.dehomogenize()
    if g.degree != f.degree:
        raise AlgebraError("curve contains chosen line at infinity")
    return g


def map_point(point: Sequence[Scalar], pmap: ProjectiveMap, direction: str = "forward") -> tuple[Fraction, ...]:
    """Apply the map (or its inverse) to a homogeneous triple.

    Returns ``(x, y)`` when the image lies in the affine chart and otherwise
    the image triple scaled so its first nonzero coordinate is 1.
    """
    pt = [Fraction(v) for v in point]
    if len(pt) != 3 or all(v == 0 for v in pt):
        raise AlgebraError("zero triple is not a projective point")
    if direction not in ("forward", "inverse"):
        raise ValueError("direction must be 'forward' or 'inverse'")
    m = pmap.matrix if direction == "forward" else pmap.inverse
    img = [sum(m[r][c] * pt[c] for c in range(3)) for r in range(3)]
    if img[2] != 0:
        return (img[0] / img[2], img[1] / img[2])
    return normalize_triple(img)


def normalize_triple(pt: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    lead = next(v for v in pt if v != 0)
    return tuple(Fraction(v) / lead for v in pt)


def _zigzag(v: int) -> int:
    # 0, 1, -1, 2, -2, ...
    return 2 * abs(v) - (v > 0)


def chart_candidates(budget: int) -> Iterator[tuple[int, int]]:
    """Shear parameters (a, b) by shell max(|a|,|b|), then lexicographically in 0, 1, -1, 2, -2, ... order."""
    for shell in range(budget + 1):
        pts = [(a, b) for a in range(-shell, shell + 1) for b in range(-shell, shell + 1)
               if max(abs(a), abs(b)) == shell]
        pts.sort(key=lambda ab: (_zigzag(ab[0]), _zigzag(ab[1])))
        yield from pts


def chart_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("NF_CHART_BUDGET")
    return int(env) if env else DEFAULT_CHART_BUDGET


def has_common_factor(p: BiPoly, q: BiPoly) -> bool:
    """Exact test for a common factor of positive degree."""
    if p.is_constant() or q.is_constant():
        return False
    # factor depending on x only: gcd of the y-contents
    content = None
    for f in (p, q):
        for c in f.coefficients_in_y():
            if c:
                content = c if content is None else gcd_univariate(content, c)
    if content is not None and content.degree > 0:
        return True
    if p.degree_in("y") < 1 or q.degree_in("y") < 1:
        return False
    return _resultant_y(p, q).is_zero()


def leading_forms_coprime(p: BiPoly, q: BiPoly) -> bool:
    return resultant_of_forms(p.leading_form(), q.leading_form()) != 0


def choose_generic_chart(
    p: BiPoly,
    q: BiPoly,
    budget: int | None = None,
    accept: Callable[[BiPoly, BiPoly], bool] | None = None,
) -> tuple[ProjectiveMap, BiPoly, BiPoly]:
    """First chart in the deterministic enumeration whose leading forms of
    the transformed pair share no nontrivial zero.

    ``accept`` is an extra predicate a candidate must also satisfy; when no
    candidate satisfies it, the first chart passing the leading-form test is
    returned instead.
    """
    if p.is_zero() or q.is_zero():
        raise AlgebraError("zero polynomial in system")
    if has_common_factor(p, q):
        raise InfiniteSolutionSet()
    fallback = None
    for a, b in chart_candidates(chart_budget(budget)):
        pmap = ProjectiveMap.shear_infinity(a, b)
        try:
            p2, q2 = transform_chart(p, pmap), transform_chart(q, pmap)
        except AlgebraError:
            continue
        if not leading_forms_coprime(p2, q2):
            continue
        if accept is None or accept(p2, q2):
            return pmap, p2, q2
        if fallback is None:
            fallback = (pmap, p2, q2)
    if fallback is not None:
        return fallback
    raise ChartSearchExhausted()


def infinity_line(pmap: ProjectiveMap) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (u, v, w) with the ORIGINAL line at infinity Z = 0 reading
    u*x' + v*y' + w = 0 in the new affine chart."""
    u, v, w = pmap.inverse[2]
    return (u, v, w)
