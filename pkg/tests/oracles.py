"""Independent reference computations used only by the tests.

Nothing here calls into the library's elimination or solving code.
"""
from fractions import Fraction
from itertools import product

import sympy

X, Y = sympy.symbols("x y")


def cofactor_det(m):
    """Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for c in range(n):
        if m[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        total += (-1) ** c * m[0][c] * cofactor_det(minor)
    return total


def to_sympy(f):
    return sum((sympy.Rational(c.numerator, c.denominator) * X**i * Y**j for (i, j), c in f.terms.items()),
               sympy.Integer(0))


def sympy_terms(expr):
    """Term map {(i, j): Fraction} of a sympy polynomial in x, y."""
    poly = sympy.Poly(sympy.expand(expr), X, Y)
    out = {}
    for (i, j), c in poly.terms():
        c = sympy.Rational(c)
        if c != 0:
            out[(i, j)] = Fraction(int(c.p), int(c.q))
    return out


def sylvester_by_hand(a, b):
    """Sylvester matrix from coefficient lists (highest first), rows of a first."""
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    rows = [[0] * k + list(a) + [0] * (n - da - 1 - k) for k in range(db)]
    rows += [[0] * k + list(b) + [0] * (n - db - 1 - k) for k in range(da)]
    return rows


def binary_form_resultant(f, g):
    d, e = f.degree, g.degree
    a = [f.coefficient(d - k, k) for k in range(d + 1)]
    b = [g.coefficient(e - k, k) for k in range(e + 1)]
    return Fraction(cofactor_det(sylvester_by_hand(a, b)))


def sympy_eliminant(p, q):
    """Res_y as a sympy expression in x (same row convention: p first)."""
    return sympy.expand(sympy.Matrix(
        sylvester_by_hand(sympy.Poly(to_sympy(p), Y).all_coeffs(), sympy.Poly(to_sympy(q), Y).all_coeffs())
    ).det(method="berkowitz"))


def brute_force_integer_solutions(p, q, box=6):
    """All integer common zeros in [-box, box]^2 by direct substitution."""
    return sorted((a, b) for a, b in product(range(-box, box + 1), repeat=2)
                  if p.evaluate((a, b)) == 0 and q.evaluate((a, b)) == 0)
