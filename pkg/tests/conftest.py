import sys
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from normalsys.poly import BiPoly

x, y = BiPoly.x(), BiPoly.y()

# F1: tangential double point; F2: circle and hyperbola, four simple points;
# F3: common point at infinity removed by a chart change.
F1 = (x * y - 1, x + y - 2)
F2 = (x**2 + y**2 - 5, x * y - 2)
F3 = (x * y - 1, x * y - x)


@pytest.fixture
def f1():
    return F1


@pytest.fixture
def f2():
    return F2


@pytest.fixture
def f3():
    return F3


def random_poly(rng: random.Random, degree: int, lo: int = -5, hi: int = 5, density: float = 1.0) -> BiPoly:
    """Random integer polynomial of total degree exactly ``degree``."""
    while True:
        terms = {}
        for d in range(degree + 1):
            for i in range(d + 1):
                if d == degree or rng.random() < density:
                    terms[(i, d - i)] = rng.randint(lo, hi)
        f = BiPoly(terms)
        if f.degree == degree:
            return f


coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def bipolys(draw, max_degree=3, max_terms=6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        i = draw(st.integers(0, max_degree))
        j = draw(st.integers(0, max_degree - i))
        terms[(i, j)] = draw(coefficients)
    return BiPoly(terms)


@st.composite
def nonzero_bipolys(draw, max_degree=3):
    f = draw(bipolys(max_degree=max_degree))
    if f.is_zero():
        f = f + BiPoly.constant(draw(st.integers(1, 5)))
    return f


@st.composite
def rational_points(draw):
    return (draw(coefficients), draw(coefficients))


def frac(s) -> Fraction:
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
