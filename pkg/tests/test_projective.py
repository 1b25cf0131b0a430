import random
from fractions import Fraction

import pytest

from normalsys.elimination import resultant_of_forms
from normalsys.errors import AlgebraError, ChartSearchExhausted, InfiniteSolutionSet
from normalsys.parser import parse_polynomial as P
from normalsys.poly import BiPoly
from normalsys.projective import (
    ProjectiveMap,
    TriForm,
    chart_candidates,
    choose_generic_chart,
    has_common_factor,
    homogenize,
    map_point,
    transform_chart,
)
from normalsys.solver import solve

from conftest import F2, F3, random_poly

SHEAR_111 = ProjectiveMap.shear_infinity(1, 1)


class TestHomogenize:
    def test_examples(self):
        assert homogenize(P("x*y - 1")) == TriForm({(1, 1, 0): 1, (0, 0, 2): -1}, 2)
        assert homogenize(P("x + y - 2")) == TriForm({(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): -2}, 1)
        assert homogenize(P("x^2")) == TriForm({(2, 0, 0): 1}, 2)

    def test_zero_rejected(self):
        with pytest.raises(AlgebraError):
            homogenize(BiPoly())

    def test_dehomogenize_inverts(self):
        rng = random.Random(1)
        for _ in range(20):
            f = random_poly(rng, rng.randint(0, 4))
            assert homogenize(f).dehomogenize() == f


class TestTransformChart:
    def test_examples(self):
        assert transform_chart(P("x*y - 1"), SHEAR_111) == P("-x^2 - x*y - y^2 + 2*x + 2*y - 1")
        assert transform_chart(P("x*y - x"), SHEAR_111) == P("x^2 + 2*x*y - x")
        f = P("x^3 - x*y + 4")
        assert transform_chart(f, ProjectiveMap.identity()) == f

    def test_line_at_infinity_component(self):
        # x + y + 1 = 0 becomes the new line at infinity
        with pytest.raises(AlgebraError, match="curve contains chosen line at infinity"):
            transform_chart(P("(x + y + 1)*(x - y)"), SHEAR_111)

    def test_round_trip_and_degree(self):
        rng = random.Random(2)
        maps = [ProjectiveMap.shear_infinity(a, b) for a, b in [(1, 0), (0, -1), (2, 3), (-1, 1)]]
        maps.append(ProjectiveMap.from_matrix([[1, 2, 0], [0, 1, 1], [1, 0, 3]]))
        done = 0
        while done < 40:
            f = random_poly(rng, rng.randint(1, 4))
            m = maps[done % len(maps)]
            try:
                g = transform_chart(f, m)
            except AlgebraError:
                continue
            assert g.degree == f.degree
            assert transform_chart(g, m.inverted()) == f
            done += 1


class TestMapPoint:
    def test_examples(self):
        assert map_point((1, 1, 1), SHEAR_111) == (Fraction(1, 3), Fraction(1, 3))
        assert map_point((1, 0, 0), SHEAR_111) == (1, 0)
        assert map_point((3, 4, 1), ProjectiveMap.identity()) == (3, 4)
        assert map_point((2, 0, 0), ProjectiveMap.identity()) == (1, 0, 0)

    def test_inverse(self):
        assert map_point((Fraction(1, 3), Fraction(1, 3), 1), SHEAR_111, "inverse") == (1, 1)
        assert map_point((0, 1, 1), SHEAR_111, "inverse") == (0, 1, 0)

    def test_zero_triple(self):
        with pytest.raises(AlgebraError):
            map_point((0, 0, 0), SHEAR_111)

    def test_singular_matrix(self):
        with pytest.raises(AlgebraError, match="non-invertible change"):
            ProjectiveMap.from_matrix([[1, 0, 0], [0, 1, 0], [1, 0, 0]])

    def test_json_round_trip(self):
        m = ProjectiveMap.from_matrix([[1, 0, 0], [0, 1, 0], [Fraction(1, 2), -3, 1]])
        assert m.to_json() == [["1", "0", "0"], ["0", "1", "0"], ["1/2", "-3", "1"]]
        assert ProjectiveMap.from_json(m.to_json()) == m


class TestChooseChart:
    def test_identity_when_already_generic(self):
        assert choose_generic_chart(*F2)[0].is_identity()
        assert choose_generic_chart(P("x - 1"), P("y - 1"))[0].is_identity()

    def test_shared_point_at_infinity(self):
        p, q = F3
        assert resultant_of_forms(p.leading_form(), q.leading_form()) == 0
        pmap, p2, q2 = choose_generic_chart(p, q)
        assert pmap == SHEAR_111
        # the three intersection points [1:0:0], [0:1:0], [1:1:1] give line values 1, 1, 3
        for pt, val in [((1, 0, 0), 1), ((0, 1, 0), 1), ((1, 1, 1), 3)]:
            assert sum(c * v for c, v in zip(pmap.matrix[2], pt)) == val
        assert resultant_of_forms(p2.leading_form(), q2.leading_form()) != 0

    def test_enumeration_order(self):
        first = list(chart_candidates(1))
        assert first[0] == (0, 0)
        assert first[1:] == [(0, 1), (0, -1), (1, 0), (1, 1), (1, -1), (-1, 0), (-1, 1), (-1, -1)]
        assert len(list(chart_candidates(10))) == 441

    def test_common_factor(self):
        with pytest.raises(InfiniteSolutionSet, match="solution set not finite"):
            choose_generic_chart(P("x*y - 1"), P("(x*y - 1)*(x + 2)"))
        with pytest.raises(InfiniteSolutionSet):
            choose_generic_chart(P("(x - 1)*y"), P("(x - 1)*(y + 3)"))

    def test_budget_exhaustion(self):
        # with budget 0 only the identity chart is tried
        with pytest.raises(ChartSearchExhausted, match="no chart found in search budget"):
            choose_generic_chart(*F3, budget=0)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("NF_CHART_BUDGET", "0")
        with pytest.raises(ChartSearchExhausted):
            choose_generic_chart(*F3)

    def test_has_common_factor(self):
        assert has_common_factor(P("x^2 - y^2"), P("(x + y)*(x - 3)"))
        assert not has_common_factor(*F2)
        assert not has_common_factor(P("x"), P("y"))
        assert has_common_factor(P("x*(y + 1)"), P("x^2"))

    def test_generic_on_random_systems(self):
        rng = random.Random(6)
        done = 0
        while done < 20:
            p, q = random_poly(rng, rng.randint(1, 3)), random_poly(rng, rng.randint(1, 3))
            if p.is_zero() or q.is_zero() or p.degree < 1 or q.degree < 1 or has_common_factor(p, q):
                continue
            pmap, p2, q2 = choose_generic_chart(p, q)
            assert resultant_of_forms(p2.leading_form(), q2.leading_form()) != 0
            assert (p2.degree, q2.degree) == (p.degree, q.degree)
            done += 1


class TestSolutionCorrespondence:
    def test_f3_projective_points(self):
        sol = solve(*F3)
        # projective solutions of XY - Z^2 = XY - XZ = 0: [1:0:0], [0:1:0], [1:1:1]
        images = sorted(map_point(pt, sol.chart) for pt in [(1, 0, 0), (0, 1, 0), (1, 1, 1)])
        chart_points = sorted(s.chart_point.as_tuple() for s in sol.all_solutions())
        assert chart_points == images
        assert sol.multiplicity_sum == 4 == sol.bezout
