"""Exact univariate and bivariate polynomials over the rationals.

All coefficients are :class:`fractions.Fraction`, which is always reduced with
a positive denominator, so equality of polynomials is structural.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import AlgebraError

Rational = Fraction
Scalar = Union[int, Fraction]
Monomial = tuple[int, int]

# Degree of the zero polynomial.  Absorbs addition and compares below every int.
MINUS_INFINITY = float("-inf")


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def grlex_key(monomial: Monomial) -> tuple[int, int]:
    """Sort key for graded-lex order with x before y (use ``reverse=True`` for descending)."""
    i, j = monomial
    return (i + j, i)


def monomials_of_degree(d: int) -> list[Monomial]:
    """Monomials of total degree ``d`` in descending graded-lex order."""
    return [(d - k, k) for k in range(d + 1)]


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_terms(pieces: list[tuple[Fraction, str]]) -> str:
    # pieces: (coefficient, monomial text or "" for the constant)
    if not pieces:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(pieces):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{format_rational(a)}*{mono}"
        else:
            body = format_rational(a)
        if idx == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class BiPoly:
    """Sparse polynomial in ``x`` and ``y`` with rational coefficients.

    Instances are immutable.  ``terms`` maps exponent pairs ``(i, j)`` to the
    nonzero coefficient of ``x^i y^j``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + _frac(c)
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "BiPoly":
        obj = object.__new__(BiPoly)
        obj._terms = terms
        obj._hash = None
        return obj

    # inspection
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self):
        """Total degree, or ``MINUS_INFINITY`` for the zero polynomial."""
        if not self._terms:
            return MINUS_INFINITY
        return max(i + j for i, j in self._terms)

    def degree_in(self, var: str):
        k = _var_index(var)
        if not self._terms:
            return MINUS_INFINITY
        return max(m[k] for m in self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order (x before y)."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self._terms}) <= 1

    # arithmetic
    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return BiPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return BiPoly._raw({m: c for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "BiPoly":
        c = _frac(c)
        if c == 0:
            return BiPoly()
        return BiPoly._raw({m: v * c for m, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # evaluation and calculus
    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        x0, y0 = (_frac(v) for v in point)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * x0**i * y0**j
        return total

    def __call__(self, x0: Scalar, y0: Scalar) -> Fraction:
        return self.evaluate((x0, y0))

    def homogeneous_part(self, d: int) -> "BiPoly":
        return BiPoly._raw({m: c for m, c in self._terms.items() if m[0] + m[1] == d})

    def leading_form(self) -> "HomForm":
        if not self._terms:
            raise AlgebraError("no leading form")
        return HomForm(self.homogeneous_part(self.degree)._terms)

    def differentiate(self, var: str, order: int = 1) -> "BiPoly":
        k = _var_index(var)
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        acc = {}
        for m, c in self._terms.items():
            e = m[k]
            if e < order:
                continue
            factor = 1
            for t in range(order):
                factor *= e - t
            new = (m[0] - order, m[1]) if k == 0 else (m[0], m[1] - order)
            acc[new] = c * factor
        return BiPoly._raw(acc)

    def apply_as_operator(self, h: "BiPoly") -> "BiPoly":
        """Treat ``self`` as the symbol of P(d/dx, d/dy) and apply it to ``h``."""
        result = BiPoly()
        for (a, b), c in self._terms.items():
            term = h.differentiate("x", a).differentiate("y", b)
            if term:
                result = result + term.scale(c)
        return result

    def substitute(self, x_image: "BiPoly", y_image: "BiPoly") -> "BiPoly":
        """Compose: replace x and y by the given polynomials."""
        result = BiPoly()
        xpows: dict[int, BiPoly] = {}
        ypows: dict[int, BiPoly] = {}
        for (i, j), c in self._terms.items():
            if i not in xpows:
                xpows[i] = x_image**i
            if j not in ypows:
                ypows[j] = y_image**j
            result = result + (xpows[i] * ypows[j]).scale(c)
        return result

    def compose_linear(self, matrix: Sequence[Sequence[Scalar]], shift: Sequence[Scalar] = (0, 0)) -> "BiPoly":
        """Substitute x -> a*x + b*y + e, y -> c*x + d*y + f.

        ``matrix`` is ``[[a, b], [c, d]]`` and ``shift`` is ``(e, f)``.
        """
        (a, b), (c, d) = [[_frac(v) for v in row] for row in matrix]
        e, f = (_frac(v) for v in shift)
        if a * d - b * c == 0:
            raise AlgebraError("non-invertible change")
        x_img = BiPoly({(1, 0): a, (0, 1): b, (0, 0): e})
        y_img = BiPoly({(1, 0): c, (0, 1): d, (0, 0): f})
        return self.substitute(x_img, y_img)

    def translate(self, dx: Scalar, dy: Scalar) -> "BiPoly":
        """The polynomial f(x + dx, y + dy), expanded by the binomial theorem."""
        dx, dy = _frac(dx), _frac(dy)
        acc: dict[Monomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            for a in range(i + 1):
                ca = c * comb(i, a) * dx ** (i - a)
                if not ca:
                    continue
                for b in range(j + 1):
                    v = ca * comb(j, b) * dy ** (j - b)
                    if v:
                        acc[(a, b)] = acc.get((a, b), 0) + v
        return BiPoly._raw({m: v for m, v in acc.items() if v})

    # views as univariate polynomials
    def coefficients_in_y(self) -> list["UniPoly"]:
        """Coefficients of powers of y, each a UniPoly in x; index = power of y."""
        if not self._terms:
            return []
        top = self.degree_in("y")
        rows: list[dict[int, Fraction]] = [dict() for _ in range(top + 1)]
        for (i, j), c in self._terms.items():
            rows[j][i] = c
        return [UniPoly.from_dict(r) for r in rows]

    def at_x(self, x0: Scalar) -> "UniPoly":
        """The univariate polynomial f(x0, y) in y."""
        x0 = _frac(x0)
        acc: dict[int, Fraction] = {}
        for (i, j), c in self._terms.items():
            acc[j] = acc.get(j, 0) + c * x0**i
        return UniPoly.from_dict(acc)

    @classmethod
    def from_uni(cls, u: "UniPoly", var: str = "x") -> "BiPoly":
        k = _var_index(var)
        return cls({((e, 0) if k == 0 else (0, e)): c for e, c in enumerate(u.coeffs)})

    # printing
    def to_string(self, names: tuple[str, str] = ("x", "y")) -> str:
        pieces = []
        for (i, j), c in self.sorted_terms():
            parts = []
            for name, e in zip(names, (i, j)):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            pieces.append((c, "*".join(parts)))
        return _format_terms(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"BiPoly({self.to_string()!r})"


class HomForm(BiPoly):
    """A bivariate polynomial whose terms all share one total degree."""

    __slots__ = ()

    def __init__(self, terms=()):
        super().__init__(terms)
        if not self.is_homogeneous():
            raise AlgebraError("terms of a form must share one total degree")

    @property
    def form_degree(self) -> int:
        return self.degree

    def coefficient_vector(self) -> list[Fraction]:
        """Coefficients of x^d, x^(d-1) y, ..., y^d."""
        return [self.coefficient(i, j) for i, j in monomials_of_degree(self.degree)]


def _var_index(var: str) -> int:
    if var in ("x", "Dx"):
        return 0
    if var in ("y", "Dy"):
        return 1
    raise ValueError(f"unknown variable {var!r}")


class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def from_dict(cls, d: Mapping[int, Scalar]) -> "UniPoly":
        if not d:
            return cls()
        cs = [0] * (max(d) + 1)
        for e, c in d.items():
            cs[e] = c
        return cls(cs)

    @classmethod
    def linear_root(cls, r: Scalar) -> "UniPoly":
        """The monic polynomial t - r."""
        return cls([-_frac(r), 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return UniPoly(c / lc for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return UniPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: "UniPoly"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        lc = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lc
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quo), UniPoly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def evaluate(self, t: Scalar) -> Fraction:
        t = _frac(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    __call__ = evaluate

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def to_string(self, name: str = "x") -> str:
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
            pieces.append((c, mono))
        return _format_terms(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"UniPoly({self.to_string()!r})"
