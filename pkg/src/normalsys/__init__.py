"""Exact bivariate polynomial systems: normal-system reduction, multiplicity-aware
solving and poly-exponential solutions of constant-coefficient PDE systems."""
from .elimination import (
    gcd_univariate,
    isolate_real_roots,
    rational_roots,
    resultant_of_forms,
    resultant_wrt_y,
    squarefree_decomposition,
)
from .errors import AlgebraError, ChartSearchExhausted, InfiniteSolutionSet, ParseError
from .normalization import (
    MultiplierFamily,
    NormalSystem,
    build_multipliers,
    build_normal_system,
    check_normality,
    check_preservation,
)
from .parser import parse_operator, parse_polynomial
from .pde import PDEOperator, PolyExpFunction, apply, shift_symbol, solution_basis, verify
from .poly import BiPoly, HomForm, UniPoly
from .projective import ProjectiveMap, choose_generic_chart, homogenize, map_point, transform_chart
from .solver import audit, local_multiplicity, solve

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BiPoly",
    "ChartSearchExhausted",
    "HomForm",
    "InfiniteSolutionSet",
    "MultiplierFamily",
    "NormalSystem",
    "PDEOperator",
    "ParseError",
    "PolyExpFunction",
    "ProjectiveMap",
    "UniPoly",
    "apply",
    "audit",
    "build_multipliers",
    "build_normal_system",
    "check_normality",
    "check_preservation",
    "choose_generic_chart",
    "gcd_univariate",
    "homogenize",
    "isolate_real_roots",
    "local_multiplicity",
    "map_point",
    "parse_operator",
    "parse_polynomial",
    "rational_roots",
    "resultant_of_forms",
    "resultant_wrt_y",
    "shift_symbol",
    "solution_basis",
    "solve",
    "squarefree_decomposition",
    "transform_chart",
    "verify",
]
