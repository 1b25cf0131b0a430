"""Resultants, univariate gcds, squarefree parts, rational roots and real root isolation."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import AlgebraError
from .linalg import bareiss_det
from .poly import BiPoly, HomForm, Scalar, UniPoly

DEFAULT_ISOLATION_WIDTH = Fraction(1, 1024)


def sylvester_matrix(a: Sequence, b: Sequence, zero=0) -> list[list]:
    """Sylvester matrix of two coefficient lists given highest power first.

    Rows of ``a`` come first, each shifted one column to the right.
    """
    da, db = len(a) - 1, len(b) - 1
    size = da + db
    rows = []
    for k in range(db):
        rows.append([zero] * k + list(a) + [zero] * (size - da - 1 - k))
    for k in range(da):
        rows.append([zero] * k + list(b) + [zero] * (size - db - 1 - k))
    return rows


def _y_coefficients_desc(f: BiPoly) -> list[UniPoly]:
    return list(reversed(f.coefficients_in_y()))


def _resultant_y(p: BiPoly, q: BiPoly) -> UniPoly:
    # Also accepts y-degree 0 inputs: Res(a, q) = a^deg_y(q).
    a, b = _y_coefficients_desc(p), _y_coefficients_desc(q)
    if not a or not b:
        return UniPoly()
    m = sylvester_matrix(a, b, zero=UniPoly())
    return bareiss_det(m, exact_div=UniPoly.exact_div, zero=UniPoly(), one=UniPoly([1]))


def resultant_wrt_y(p: BiPoly, q: BiPoly) -> UniPoly:
    """Eliminant of p and q: the Sylvester resultant in y, a polynomial in x."""
    if p.is_zero() or q.is_zero() or p.degree_in("y") < 1 or q.degree_in("y") < 1:
        raise AlgebraError("degenerate elimination direction")
    return _resultant_y(p, q)


def resultant_of_forms(f: BiPoly, g: BiPoly) -> Fraction:
    """Classical resultant of two binary forms; zero iff they share a projective root."""
    if f.is_zero() or g.is_zero():
        raise AlgebraError("resultant of a zero form")
    f, g = HomForm(f.terms), HomForm(g.terms)
    m = sylvester_matrix(f.coefficient_vector(), g.coefficient_vector(), zero=Fraction(0))
    return Fraction(bareiss_det(m, zero=Fraction(0), one=Fraction(1)))


def gcd_univariate(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise AlgebraError("gcd of two zero polynomials")
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_part(r: UniPoly) -> UniPoly:
    if r.is_zero():
        raise AlgebraError("squarefree part of the zero polynomial")
    return r.exact_div(gcd_univariate(r, r.derivative())).monic()


def is_squarefree(r: UniPoly) -> bool:
    return r.degree < 1 or gcd_univariate(r, r.derivative()).degree == 0


def squarefree_decomposition(r: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic, pairwise coprime squarefree factors with multiplicities.

    The product of ``factor**mult`` equals ``r`` up to its leading coefficient.
    """
    if r.is_zero():
        raise AlgebraError("squarefree decomposition of the zero polynomial")
    if r.degree == 0:
        return []
    f = r.monic()
    d = f.derivative()
    a = gcd_univariate(f, d)
    b = f.exact_div(a)
    c = d.exact_div(a)
    c = c - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        g = gcd_univariate(b, c) if c else b.monic()
        if g.degree > 0:
            out.append((g, k))
        b = b.exact_div(g)
        c = c.exact_div(g) - b.derivative()
        k += 1
    return out


def _integer_coefficients(r: UniPoly) -> list[int]:
    den = lcm(*(c.denominator for c in r.coeffs))
    ints = [int(c * den) for c in r.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(r: UniPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with exact multiplicities, in increasing order."""
    if r.is_zero():
        raise AlgebraError("rational roots of the zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    rest = r
    zero_mult = 0
    while rest.degree > 0 and rest.coeffs[0] == 0:
        rest = UniPoly(rest.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if rest.degree < 1:
        return roots
    # Candidates come from the squarefree part: smaller coefficients, same roots.
    core = squarefree_part(rest)
    ints = _integer_coefficients(core)
    leads = _divisors(ints[-1])
    consts = _divisors(ints[0])
    bound = 1 + max(abs(Fraction(c, ints[-1])) for c in ints[:-1])
    candidates = set()
    for num in consts:
        for den in leads:
            v = Fraction(num, den)
            if v < bound:
                candidates.add(v)
                candidates.add(-v)
    for v in sorted(candidates):
        if core.evaluate(v) != 0:
            continue
        lin = UniPoly.linear_root(v)
        mult = 0
        while True:
            q, rem = divmod(rest, lin)
            if rem:
                break
            rest = q
            mult += 1
        roots.append((v, mult))
    roots.sort()
    return roots


def sturm_sequence(r: UniPoly) -> list[UniPoly]:
    seq = [r, r.derivative()]
    while seq[-1]:
        rem = seq[-2] % seq[-1]
        if not rem:
            break
        seq.append(-rem)
    return seq


def sign_variations(seq: Sequence[UniPoly], t: Fraction) -> int:
    signs = [v > 0 for v in (s.evaluate(t) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(r: UniPoly) -> Fraction:
    """Cauchy bound: every root has absolute value strictly below it."""
    lc = r.lead
    return 1 + max((abs(c / lc) for c in r.coeffs[:-1]), default=Fraction(0))


def count_real_roots(r: UniPoly, lo: Scalar, hi: Scalar, seq=None) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    seq = seq or sturm_sequence(r)
    return sign_variations(seq, Fraction(lo)) - sign_variations(seq, Fraction(hi))


def isolate_real_roots(r: UniPoly, width: Scalar = DEFAULT_ISOLATION_WIDTH) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals, one per real root, in increasing order.

    An interval ``(lo, hi)`` with ``lo < hi`` is open and holds exactly one
    root strictly inside; ``lo == hi`` marks an exact rational root found by
    bisection.  Endpoints of open intervals are never roots.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("isolation width must be positive")
    if r.is_zero():
        raise AlgebraError("requires squarefree input")
    if r.degree < 1:
        return []
    if not is_squarefree(r):
        raise AlgebraError("requires squarefree input")
    seq = sturm_sequence(r)
    bound = root_bound(r)
    out: list[tuple[Fraction, Fraction]] = []

    def count_open(a: Fraction, b: Fraction) -> int:
        return sign_variations(seq, a) - sign_variations(seq, b)

    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count_open(a, b)
        if n == 0:
            continue
        if n == 1 and b - a <= width:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if r.evaluate(mid) == 0:
            out.append((mid, mid))
            delta = (b - a) / 4
            while True:
                lo, hi = mid - delta, mid + delta
                if r.evaluate(lo) != 0 and r.evaluate(hi) != 0 and count_open(lo, hi) == 1:
                    break
                delta /= 2
            stack.append((a, lo))
            stack.append((hi, b))
        else:
            stack.append((a, mid))
            stack.append((mid, b))
    out.sort()
    return out


def inverse_mod(c: UniPoly, f: UniPoly) -> UniPoly:
    """Inverse of ``c`` in Q[t]/(f); ``c`` must be coprime to ``f``."""
    r0, r1 = f, c % f
    s0, s1 = UniPoly(), UniPoly([1])
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r0.degree != 0:
        raise AlgebraError("element is a zero divisor modulo the factor")
    return (s0 * UniPoly([1 / r0.coeffs[0]])) % f


def _strip_mod(coeffs: list[UniPoly], f: UniPoly):
    # Drop leading coefficients vanishing mod f; report a zero-divisor lead.
    cs = [c % f for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    if cs:
        g = gcd_univariate(cs[-1], f)
        if g.degree > 0:
            return cs, g
    return cs, None


def fiber_gcds(p: BiPoly, q: BiPoly, f: UniPoly) -> list[tuple[UniPoly, list[UniPoly]]]:
    """gcd in y of p(a, y) and q(a, y) for every root a of squarefree ``f``.

    Euclid runs over Q[x]/(f); whenever a leading coefficient is a zero
    divisor, ``f`` splits and both branches continue.  Returns pairs
    ``(factor, gcd)`` whose factors multiply to ``f`` (monic); each gcd is a
    list of coefficients in ascending powers of y, reduced mod its factor,
    monic in y (empty when the fiber carries no common root).
    """
    out = []
    tasks = [(f.monic(), p.coefficients_in_y(), q.coefficients_in_y())]
    while tasks:
        fac, a, b = tasks.pop()
        while True:
            b, split = _strip_mod(b, fac)
            if split is None and not b:
                a, split = _strip_mod(a, fac)
                if split is None:
                    if a:
                        inv = inverse_mod(a[-1], fac)
                        a = [(c * inv) % fac for c in a]
                    out.append((fac, a))
                    break
            if split is not None:
                other = fac.exact_div(split)
                tasks.append((split.monic(), a, b))
                tasks.append((other.monic(), a, b))
                break
            inv = inverse_mod(b[-1], fac)
            rem = list(a)
            db = len(b) - 1
            for k in range(len(rem) - 1, db - 1, -1):
                c = (rem[k] * inv) % fac
                if c:
                    for i, bc in enumerate(b):
                        rem[k - db + i] = (rem[k - db + i] - c * bc) % fac
            rem = rem[:db]
            a, b = b, rem
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out
