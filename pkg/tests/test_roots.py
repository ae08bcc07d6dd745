from __future__ import annotations

from fractions import Fraction

import sympy as sp
from hypothesis import given, strategies as st

from skeinkit import roots

X, Y = sp.symbols("x y")
small = st.integers(-4, 4)
upoly = st.lists(small, min_size=2, max_size=6).filter(lambda c: c[-1] != 0)


def _sym(p, x=X):
    return sum(sp.Rational(Fraction(c).numerator, Fraction(c).denominator) * x ** k for k, c in enumerate(p))


def test_sturm_counts_known_roots():
    p = roots.pmul(roots.pmul([-1, 1], [-2, 1]), [3, 1])  # (x-1)(x-2)(x+3)
    assert roots.count_roots(p, 0, 10) == 2
    assert roots.count_roots(p, -10, 10) == 3
    assert roots.count_roots(p, 1, 2) == 1  # half-open (1, 2]


def test_squarefree_and_repeated_roots():
    p = roots.pmul([-1, 1], [-1, 1])
    assert roots.degree(roots.squarefree(p)) == 1
    assert roots.count_roots(p, 0, 2) == 1


def test_isolation_width():
    p = [-2, 0, 1]
    (lo, hi) = [(r.lo, r.hi) for r in roots.isolate_real_roots(p, 0, 2)][0]
    assert hi - lo <= Fraction(1, 10 ** 6) and lo * lo < 2 <= hi * hi


@given(upoly)
def test_root_count_matches_sympy(coeffs):
    p = [Fraction(c) for c in coeffs]
    expected = len(set(sp.Poly(_sym(p), X).real_roots()))
    assert len(roots.isolate_real_roots(p)) == expected
    assert roots.count_roots(p, -roots.cauchy_bound(p), roots.cauchy_bound(p)) == expected


@given(upoly)
def test_isolated_intervals_contain_sympy_roots(coeffs):
    p = [Fraction(c) for c in coeffs]
    ivs = roots.isolate_real_roots(p, width=Fraction(1, 1000))
    for z, iv in zip(sorted(set(sp.Poly(_sym(p), X).real_roots())), ivs):
        assert iv.lo < z <= iv.hi


@given(st.lists(upoly, min_size=1, max_size=3), st.lists(upoly, min_size=1, max_size=3))
def test_resultant_matches_sympy(f, g):
    f = [[Fraction(c) for c in row] for row in f]
    g = [[Fraction(c) for c in row] for row in g]
    fs = sum(_sym(row) * Y ** i for i, row in enumerate(f))
    gs = sum(_sym(row) * Y ** i for i, row in enumerate(g))
    ref = sp.expand(sp.resultant(fs, gs, Y)) if len(f) + len(g) > 2 else sp.Integer(1)
    assert sp.expand(_sym(roots.resultant(f, g)) - ref) == 0


def test_division_and_gcd():
    a = roots.pmul([1, 1], [-3, 0, 1])
    q, rem = roots.pdivmod(a, [1, 1])
    assert roots.trim(rem) == [] and q == roots.trim([-3, 0, 1])
    assert roots.degree(roots.pgcd(a, [1, 1])) == 1


def test_primitive_normalizes():
    assert roots.primitive([Fraction(-1, 2), 0, Fraction(-3, 2)]) == [1, 0, 3]
