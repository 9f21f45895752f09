import random
import sys
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import strategies as st

from jacpair.polyarith import Poly2, UniPoly

X, Y, T = sympy.symbols("x y t")


def to_sympy(p: Poly2):
    return sum((sympy.Rational(c.numerator, c.denominator) * X**i * Y**j
                for (i, j), c in p.terms.items()), sympy.Integer(0))


def from_sympy(expr) -> Poly2:
    poly = sympy.Poly(sympy.expand(expr), X, Y)
    return Poly2({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms() if c != 0})


def uni_to_sympy(u: UniPoly, var=T):
    return sum((sympy.Rational(c.numerator, c.denominator) * var**k
                for k, c in enumerate(u.coeffs)), sympy.Integer(0))


def random_poly(rng: random.Random, degree: int, terms: int = 6, bound: int = 5,
                denominators: bool = True) -> Poly2:
    out = {}
    for _ in range(terms):
        i = rng.randint(0, degree)
        j = rng.randint(0, degree - i)
        den = rng.randint(1, 3) if denominators else 1
        out[(i, j)] = Fraction(rng.randint(-bound, bound), den)
    return Poly2(out)


def random_uni(rng: random.Random, degree: int, bound: int = 6) -> UniPoly:
    return UniPoly([Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
                    for _ in range(degree + 1)])


def _bisect(fn, a, b, steps: int = 200):
    fa = fn(a)
    for _ in range(steps):
        m = (a + b) / 2
        fm = fn(m)
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return (a + b) / 2


def float_root_count(coeffs, lo: float = -100.0, hi: float = 100.0, n: int = 40_001,
                     cluster: float = 0.1, dps: int = 60) -> int:
    """Distinct real roots in [lo, hi] by dense sampling and bisection.

    A float64 grid nominates cells where p or p' changes sign or |p| has a
    local minimum; signs inside a cell are then read in ``dps``-digit floating
    point.  Even-multiplicity roots are critical points of p at which |p| is
    negligible against the size of its terms.  Roots closer than ``cluster``
    count once.
    """
    mp = mpmath.mp.clone() if hasattr(mpmath.mp, "clone") else mpmath.mp
    mp.dps = dps
    mc = [mp.mpf(Fraction(x).numerator) / Fraction(x).denominator for x in coeffs]
    mdc = [k * a for k, a in enumerate(mc)][1:]
    fn = lambda x: mp.polyval(mc[::-1], x)
    dfn = lambda x: mp.polyval(mdc[::-1], x) if mdc else mp.mpf(0)
    absc = [abs(a) for a in mc]
    c = np.asarray([float(a) for a in mc[::-1]])
    xs = np.linspace(lo, hi, n)
    vals = np.polyval(c, xs)
    dvals = np.polyval(np.polyder(c), xs) if len(c) > 1 else np.zeros(n)
    av = np.abs(vals)
    cand = set(np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0])
    cand |= set(np.nonzero(np.sign(dvals[:-1]) != np.sign(dvals[1:]))[0])
    mins = np.nonzero((av[1:-1] <= av[:-2]) & (av[1:-1] <= av[2:]))[0]
    cand |= set(mins) | set(mins + 1)
    roots = []
    for k in sorted(cand):
        a, b = mp.mpf(float(xs[max(k - 1, 0)])), mp.mpf(float(xs[min(k + 2, n - 1)]))
        for x in (a, b):
            if fn(x) == 0:
                roots.append(x)
        if fn(a) * fn(b) < 0:
            roots.append(_bisect(fn, a, b))
        if dfn(a) * dfn(b) < 0:
            r = _bisect(dfn, a, b)
            size = sum(w * max(abs(r), 1) ** j for j, w in enumerate(absc))
            if abs(fn(r)) <= mp.mpf(10) ** (-dps // 2) * size:
                roots.append(r)
    roots = sorted(float(r) for r in roots if lo <= r <= hi)
    return len([r for k, r in enumerate(roots) if k == 0 or r - roots[k - 1] > cluster])


def random_rooted_uni(rng: random.Random, max_degree: int = 8) -> UniPoly:
    """Random product of rational linear factors (with repeats) and a definite quadratic."""
    out = UniPoly.constant(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4)))
    deg = rng.randint(1, max_degree)
    while out.degree < deg:
        if deg - out.degree >= 2 and rng.random() < 0.25:
            a, b = rng.randint(-50, 50), rng.randint(1, 30)
            out = out * UniPoly([a * a + b * b, -2 * a, 1])
            continue
        r = Fraction(rng.randint(-190, 190), 2)
        m = min(rng.choice([1, 1, 1, 2, 3]), deg - out.degree)
        out = out * UniPoly([-r, 1]) ** m
    return out


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
monomials = st.tuples(st.integers(0, 5), st.integers(0, 5))
polys = st.dictionaries(monomials, rationals, max_size=7).map(Poly2)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
unipolys = st.lists(rationals, min_size=1, max_size=7).map(UniPoly)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
