from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normalsys.errors import AlgebraError
from normalsys.poly import MINUS_INFINITY, BiPoly, HomForm, UniPoly
from normalsys.parser import parse_polynomial

from conftest import bipolys, nonzero_bipolys, rational_points
from oracles import sympy_terms, to_sympy

x, y = BiPoly.x(), BiPoly.y()
P = parse_polynomial


class TestMultiply:
    def test_square_of_sum(self):
        assert (x + y) * (x + y) == x**2 + 2 * x * y + y**2

    def test_identity(self):
        f = P("3*x^2*y - 1/2*y + 7")
        assert f * 1 == f
        assert f * BiPoly.constant(1) == f

    def test_multiplier_product_from_f1(self):
        assert x * (x + y - 2) == P("x^2 + x*y - 2*x")

    @given(bipolys(), bipolys())
    def test_matches_sympy_expansion(self, f, g):
        assert dict((f * g).terms) == sympy_terms(to_sympy(f) * to_sympy(g))


class TestEvaluate:
    def test_examples(self):
        assert (x * y - 1).evaluate((1, 1)) == 0
        assert (x**2 + y**2 - 5).evaluate((0, 0)) == -5
        assert BiPoly().evaluate((Fraction(3, 7), 2)) == 0

    @given(bipolys(), bipolys(), rational_points())
    def test_evaluation_is_multiplicative(self, f, g, pt):
        assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)


class TestLeadingForm:
    @pytest.mark.parametrize("text, expected", [("x*y - 1", "x*y"), ("x + y - 2", "x + y"), ("x^2", "x^2")])
    def test_examples(self, text, expected):
        lf = P(text).leading_form()
        assert isinstance(lf, HomForm)
        assert lf == P(expected)

    def test_zero_has_no_leading_form(self):
        with pytest.raises(AlgebraError, match="no leading form"):
            BiPoly().leading_form()

    def test_homform_rejects_mixed_degrees(self):
        with pytest.raises(AlgebraError):
            HomForm({(1, 0): 1, (0, 0): 1})


class TestDifferentiate:
    def test_power_rule(self):
        assert (x**2 + x * y).differentiate("x") == 2 * x + y

    def test_constant(self):
        assert BiPoly.constant(5).differentiate("y") == 0

    def test_mixed(self):
        assert (x * y).differentiate("x").differentiate("y") == 1

    def test_higher_order(self):
        assert (x**3 * y).differentiate("x", 2) == 6 * x * y
        assert (x**3).differentiate("x", 4).is_zero()


class TestComposeLinear:
    def test_identity(self):
        f = P("x^3 - 2*x*y + 5")
        assert f.compose_linear([[1, 0], [0, 1]]) == f

    def test_shear(self):
        # y -> y + x
        assert (x * y).compose_linear([[1, 0], [1, 1]]) == x**2 + x * y

    def test_shift(self):
        assert x.compose_linear([[1, 0], [0, 1]], (-1, 0)) == x - 1

    def test_singular(self):
        with pytest.raises(AlgebraError, match="non-invertible change"):
            x.compose_linear([[1, 2], [2, 4]])

    @given(nonzero_bipolys(), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
    def test_leading_form_covariance(self, f, a, b, c, d):
        if a * d - b * c == 0:
            return
        m = [[a, b], [c, d]]
        assert f.compose_linear(m).leading_form() == f.leading_form().compose_linear(m)
        assert f.compose_linear(m).degree == f.degree


class TestRing:
    @given(bipolys(), bipolys(), bipolys())
    def test_distributive_associative_commutative(self, f, g, h):
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)

    @given(nonzero_bipolys(), nonzero_bipolys())
    def test_degree_is_additive(self, f, g):
        assert (f * g).degree == f.degree + g.degree

    def test_zero_degree_marker(self):
        assert BiPoly().degree == MINUS_INFINITY
        assert not isinstance(BiPoly().degree, int)
        assert UniPoly().degree == MINUS_INFINITY

    def test_zero_coefficients_are_dropped(self):
        f = BiPoly({(1, 0): 1, (0, 1): 0})
        assert dict(f.terms) == {(1, 0): 1}
        assert (x - x).is_zero()


class TestPrinting:
    def test_canonical_rendering(self):
        f = BiPoly({(2, 1): 1, (0, 1): Fraction(-1, 2), (0, 0): 3})
        assert str(f) == "x^2*y - 1/2*y + 3"

    def test_graded_lex_order(self):
        assert str(P("y^2 + x*y + x^2 + y + x + 1")) == "x^2 + x*y + y^2 + x + y + 1"

    def test_negative_leading_and_zero(self):
        assert str(-x + 1) == "-x + 1"
        assert str(BiPoly()) == "0"

    @settings(max_examples=200)
    @given(bipolys(max_degree=5, max_terms=10))
    def test_round_trip(self, f):
        g = P(str(f))
        assert g == f
        assert str(P(str(g))) == str(f)


class TestUniPoly:
    def test_divmod(self):
        a, b = UniPoly([-1, 0, 1]), UniPoly([-1, 1])
        q, r = divmod(a, b)
        assert q == UniPoly([1, 1]) and r.is_zero()

    def test_string(self):
        assert str(UniPoly([4, 0, -5, 0, 1])) == "x^4 - 5*x^2 + 4"
