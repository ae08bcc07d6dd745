"""Exact bivariate Laurent polynomials and their field of fractions.

Everything downstream (Hecke traces, Temperley-Lieb coefficients, the 3-box
structure constants) is expressed in these two types.  The default variable
names are ``("q", "r")``; the 3-box algebra reuses the same kernel under the
names ``("δ", "γ")``.

Rational functions are kept reduced: monomial and integer content are pulled
out by hand and the remaining polynomial gcd is computed with sympy's sparse
polynomial ring.  Equality is nonetheless decided by cross-multiplication.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Mapping, Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

Number = Union[int, Fraction]
Monomial = tuple[int, int]

DEFAULT_NAMES = ("q", "r")
DELTA_GAMMA = ("δ", "γ")
DEFAULT_TOL = 1e-9


class PoleError(ZeroDivisionError):
    """A denominator vanished (exactly, or numerically below tolerance)."""


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Finite sum of ``c * x**a * y**b`` with rational ``c`` and integer ``a, b``.

    Immutable.  Zero coefficients are never stored.
    """

    __slots__ = ("terms", "names", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None,
                 names: tuple[str, str] = DEFAULT_NAMES):
        clean: dict[Monomial, Number] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[(int(mono[0]), int(mono[1]))] = _norm(c)
        self.terms = clean
        self.names = tuple(names)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Number], names) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.names = names
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: Number, names=DEFAULT_NAMES) -> "LaurentPoly":
        return cls({(0, 0): c}, names)

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: Number = 1,
                 names=DEFAULT_NAMES) -> "LaurentPoly":
        return cls({(a, b): c}, names)

    @classmethod
    def gens(cls, names=DEFAULT_NAMES) -> tuple["LaurentPoly", "LaurentPoly"]:
        return cls.monomial(1, 0, names=names), cls.monomial(0, 1, names=names)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> Number:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0, 0), 0)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.names != self.names:
                raise ValueError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Number] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly._raw({m: _norm(c) for m, c in out.items() if c}, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise PoleError(f"cannot invert non-monomial {self}")
            ((a, b), c), = self.terms.items()
            return LaurentPoly({(a * k, b * k): Fraction(c) ** k}, self.names)
        result = LaurentPoly.const(1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        # Only exact division by a monomial or a constant stays in the ring.
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise PoleError("division by zero polynomial")
        if not other.is_monomial():
            return RationalFunction(self, other)
        ((a, b), c), = other.terms.items()
        return LaurentPoly({(x - a, y - b): Fraction(v) / c for (x, y), v in self.terms.items()},
                           self.names)

    def __rtruediv__(self, other):
        return RationalFunction(LaurentPoly.const(other, self.names) if not isinstance(other, LaurentPoly) else other,
                                self)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0, 0): _norm(Fraction(other))} if other else {})
        if isinstance(other, RationalFunction):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- substitution -------------------------------------------------------
    def substitute(self, x_image: "LaurentPoly", y_image: "LaurentPoly") -> "LaurentPoly":
        """Ring homomorphism sending the two variables to monomials ``x_image, y_image``."""
        if not (x_image.is_monomial() and y_image.is_monomial()):
            raise ValueError("images must be monomials to stay Laurent")
        names = x_image.names
        ((xa, xb), xc), = x_image.terms.items()
        ((ya, yb), yc), = y_image.terms.items()
        out: dict[Monomial, Number] = {}
        for (a, b), c in self.terms.items():
            m = (a * xa + b * ya, a * xb + b * yb)
            coeff = c * Fraction(xc) ** a * Fraction(yc) ** b
            out[m] = out.get(m, 0) + coeff
        return LaurentPoly(out, names)

    def swap_inverse(self) -> "LaurentPoly":
        """Image under ``x -> 1/x, y -> 1/y``."""
        return LaurentPoly._raw({(-a, -b): c for (a, b), c in self.terms.items()}, self.names)

    def evaluate(self, x: complex, y: complex) -> complex:
        total = 0j
        for (a, b), c in self.terms.items():
            total += float(c) * x ** a * y ** b
        return total

    def degree_range(self, var: int) -> tuple[int, int]:
        exps = [m[var] for m in self.terms]
        return min(exps), max(exps)

    # -- text ---------------------------------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        x, y = self.names
        parts = []
        for (a, b) in sorted(self.terms):
            parts.append(f"{self.terms[(a, b)]}*{x}^{a}*{y}^{b}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    __str__ = to_text


_TERM_RE = r"\s*([+-]?\s*\d+(?:/\d+)?)\s*\*\s*{x}\^(-?\d+)\s*\*\s*{y}\^(-?\d+)\s*"


def parse_laurent(text: str, names: tuple[str, str] = DEFAULT_NAMES) -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.to_text`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly({}, names)
    term_re = re.compile(_TERM_RE.format(x=re.escape(names[0]), y=re.escape(names[1])))
    out: dict[Monomial, Number] = {}
    for chunk in text.split(" + "):
        m = term_re.fullmatch(chunk)
        if not m:
            raise ValueError(f"malformed term {chunk!r}")
        c = Fraction(m.group(1).replace(" ", ""))
        key = (int(m.group(2)), int(m.group(3)))
        out[key] = out.get(key, 0) + c
    return LaurentPoly(out, names)


# -- conversion to sympy's integer polynomial ring for gcds ------------------

_ZZ_RING, _, _ = ring("x,y", ZZ)


def _split(p: LaurentPoly):
    """Write p = scale * x^a y^b * P with P a primitive integer polynomial, no monomial factor."""
    amin = min(m[0] for m in p.terms)
    bmin = min(m[1] for m in p.terms)
    den = reduce(lcm, (Fraction(c).denominator for c in p.terms.values()), 1)
    ints = {(a - amin, b - bmin): int(c * den) for (a, b), c in p.terms.items()}
    content = reduce(gcd, (abs(v) for v in ints.values()))
    poly = _ZZ_RING({m: v // content for m, v in ints.items()})
    return Fraction(content, den), (amin, bmin), poly


def _join(scale: Fraction, shift: Monomial, poly, names) -> LaurentPoly:
    a0, b0 = shift
    return LaurentPoly._raw({(a + a0, b + b0): _norm(scale * int(c)) for (a, b), c in poly.items()},
                            names)


class RationalFunction:
    """Quotient ``num / den`` of Laurent polynomials in two variables."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, names: tuple[str, str] | None = None, *, reduce_: bool = True):
        if names is None:
            names = num.names if isinstance(num, LaurentPoly) else (
                den.names if isinstance(den, LaurentPoly) else DEFAULT_NAMES)
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num, names)
        if den is None:
            den = LaurentPoly.const(1, names)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den, names)
        if den.is_zero():
            raise PoleError("rational function with zero denominator")
        if num.names != den.names:
            raise ValueError("numerator and denominator use different variables")
        if reduce_:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num: LaurentPoly, den: LaurentPoly):
        names = num.names
        if num.is_zero():
            return num, LaurentPoly.const(1, names)
        if den.is_monomial():
            ((a, b), c), = den.terms.items()
            return (LaurentPoly._raw({(x - a, y - b): _norm(Fraction(v) / c)
                                      for (x, y), v in num.terms.items()}, names),
                    LaurentPoly.const(1, names))
        ns, nshift, npoly = _split(num)
        ds, dshift, dpoly = _split(den)
        g = npoly.gcd(dpoly)
        if g != 1:
            npoly = npoly.exquo(g)
            dpoly = dpoly.exquo(g)
        if dpoly.LC < 0:
            dpoly = -dpoly
            npoly = -npoly
        shift = (nshift[0] - dshift[0], nshift[1] - dshift[1])
        new_num = _join(ns / ds, shift, npoly, names)
        new_den = _join(Fraction(1), (0, 0), dpoly, names)
        if new_den.is_monomial():
            return RationalFunction._reduce(new_num, new_den)
        return new_num, new_den

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: Number, names=DEFAULT_NAMES) -> "RationalFunction":
        return cls(LaurentPoly.const(c, names))

    @classmethod
    def gens(cls, names=DEFAULT_NAMES):
        x, y = LaurentPoly.gens(names)
        return cls(x), cls(y)

    @property
    def names(self):
        return self.num.names

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_monomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num / self.den

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.names != self.names:
                raise ValueError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other, reduce_=False)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(LaurentPoly.const(other, self.names), reduce_=False)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den,
                                    reduce_=not self.den.is_constant())
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce_=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RationalFunction(LaurentPoly({}, self.names), reduce_=False)
        if self.den.is_constant() and o.den.is_constant():
            return RationalFunction(self.num * o.num, self.den * o.den)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise PoleError("division by zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, reduce_=False)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    # -- substitution / evaluation ------------------------------------------
    def substitute(self, x_image: LaurentPoly, y_image: LaurentPoly) -> "RationalFunction":
        return RationalFunction(self.num.substitute(x_image, y_image),
                                self.den.substitute(x_image, y_image))

    def swap_inverse(self) -> "RationalFunction":
        return RationalFunction(self.num.swap_inverse(), self.den.swap_inverse())

    def to_text(self) -> str:
        if self.den == 1:
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self):
        return f"RationalFunction({self.to_text()!r})"


def parse_rational(text: str, names=DEFAULT_NAMES) -> RationalFunction:
    text = text.strip()
    if text.startswith("(") and ") / (" in text and text.endswith(")"):
        num, den = text[1:-1].split(") / (", 1)
        return RationalFunction(parse_laurent(num, names), parse_laurent(den, names))
    return RationalFunction(parse_laurent(text, names))


@dataclass(frozen=True)
class ComplexPoint:
    re: float
    im: float = 0.0
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")

    @classmethod
    def of(cls, z: complex, tol: float = DEFAULT_TOL) -> "ComplexPoint":
        z = complex(z)
        return cls(z.real, z.imag, tol)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def close_to(self, other, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        w = other.value if isinstance(other, ComplexPoint) else complex(other)
        return abs(self.value - w) <= tol * max(1.0, abs(w))


def evaluate(x, q0, r0, tol: float | None = None) -> ComplexPoint:
    """Substitute numeric values for both variables."""
    qv = q0.value if isinstance(q0, ComplexPoint) else complex(q0)
    rv = r0.value if isinstance(r0, ComplexPoint) else complex(r0)
    if tol is None:
        tol = q0.tol if isinstance(q0, ComplexPoint) else DEFAULT_TOL
    if qv == 0 or rv == 0:
        raise PoleError("Laurent variables cannot be evaluated at 0")
    if isinstance(x, (int, Fraction)):
        return ComplexPoint.of(float(x), tol)
    if isinstance(x, LaurentPoly):
        return ComplexPoint.of(x.evaluate(qv, rv), tol)
    d = x.den.evaluate(qv, rv)
    if abs(d) <= tol:
        raise PoleError(f"pole: denominator {x.den.to_text()} vanishes at ({qv}, {rv})")
    return ComplexPoint.of(x.num.evaluate(qv, rv) / d, tol)


def quantum_integer(n: int, names=DEFAULT_NAMES) -> LaurentPoly:
    """``[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`` in the first variable."""
    if n < 0:
        raise ValueError("quantum_integer expects n >= 0")
    return LaurentPoly({(n - 1 - 2 * k, 0): 1 for k in range(n)}, names)


def substitute_power(x, N: int):
    """Replace the second variable by the N-th power of the first."""
    names = x.names
    q = LaurentPoly.monomial(1, 0, names=names)
    return x.substitute(q, LaurentPoly.monomial(N, 0, names=names))


def circle_parameter(names=DEFAULT_NAMES) -> RationalFunction:
    """``(r - 1/r) / (q - 1/q)``."""
    q, r = LaurentPoly.gens(names)
    return RationalFunction(r - r ** -1, q - q ** -1)


def numeric_quantum_integer(n: int, q: complex) -> complex:
    if abs(q - q ** -1) == 0:
        return complex(n)
    return (q ** n - q ** -n) / (q - q ** -1)


def cis(angle: float) -> complex:
    return cmath.exp(1j * angle)
