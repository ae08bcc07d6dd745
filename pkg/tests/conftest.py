from __future__ import annotations

import sympy as sp
from hypothesis import settings, strategies as st

from skeinkit.coeffring import LaurentPoly, RationalFunction

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

SQ, SR = sp.symbols("q r")


def to_sympy(x, syms=(SQ, SR)):
    """Independent translation into sympy, used as an arithmetic oracle."""
    if isinstance(x, RationalFunction):
        return to_sympy(x.num, syms) / to_sympy(x.den, syms)
    if isinstance(x, LaurentPoly):
        a, b = syms
        return sum((sp.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else sp.Integer(c))
                   * a ** i * b ** j for (i, j), c in x.terms.items()) if x.terms else sp.Integer(0)
    return sp.nsimplify(x)


def sym_equal(expr_a, expr_b) -> bool:
    return sp.simplify(sp.together(expr_a - expr_b)) == 0


small_int = st.integers(min_value=-4, max_value=4)
coeff = st.integers(min_value=-5, max_value=5).filter(lambda c: c != 0)

laurent = st.dictionaries(st.tuples(small_int, small_int), coeff, max_size=4).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
