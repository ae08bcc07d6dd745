"""Exact univariate polynomial utilities: Sturm sequences, real-root isolation
by rational bisection, and Sylvester resultants of bivariate polynomials.

Polynomials are coefficient lists, lowest degree first, with Fraction entries.
A bivariate polynomial is a list (indexed by powers of the eliminated variable)
of univariate polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Poly = list  # list[Fraction], low to high


def trim(p: Sequence) -> Poly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Poly) -> int:
    return len(trim(p)) - 1


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def pneg(p: Poly) -> Poly:
    return [-c for c in p]


def psub(p: Poly, q: Poly) -> Poly:
    return padd(p, pneg(q))


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    while len(rem) >= len(q) and rem:
        k = len(rem) - len(q)
        c = rem[-1] / q[-1]
        quot[k] = c
        for i, b in enumerate(q):
            rem[i + k] -= c * b
        rem = trim(rem)
    return trim(quot), rem


def pexquo(p: Poly, q: Poly) -> Poly:
    quot, rem = pdivmod(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


def peval(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def pgcd(p: Poly, q: Poly) -> Poly:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, pdivmod(p, q)[1]
    if not p:
        return []
    return [c / p[-1] for c in p]


def squarefree(p: Poly) -> Poly:
    p = trim(p)
    g = pgcd(p, derivative(p))
    return pexquo(p, g) if degree(g) > 0 else p


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = pdivmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(pneg(r))
    return seq


def _sign_changes(seq: list[Poly], x: Fraction) -> int:
    signs = [s for s in ((peval(p, x) > 0) - (peval(p, x) < 0) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the half-open interval (lo, hi] (Sturm)."""
    seq = sturm_sequence(squarefree(p))
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def cauchy_bound(p: Poly) -> Fraction:
    p = trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    def as_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def isolate_real_roots(p: Poly, lo=None, hi=None, width=Fraction(1, 10 ** 6)) -> list[RootInterval]:
    """Disjoint intervals (lo, hi], each holding exactly one real root, refined below ``width``."""
    p = squarefree(p)
    if degree(p) < 1:
        return []
    bound = cauchy_bound(p)
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    seq = sturm_sequence(p)
    width = Fraction(width)
    out: list[RootInterval] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = _sign_changes(seq, a) - _sign_changes(seq, b)
        if n == 0:
            continue
        if n == 1 and b - a <= width:
            out.append(RootInterval(a, b))
            continue
        m = (a + b) / 2
        stack.append((m, b))
        stack.append((a, m))
    return sorted(out, key=lambda r: r.lo)


# -- bivariate elimination ------------------------------------------------------

def sylvester_matrix(f: list[Poly], g: list[Poly]) -> list[list[Poly]]:
    """Sylvester matrix of f, g viewed as polynomials in the outer variable."""
    f = _trim_outer(f)
    g = _trim_outer(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [[] for _ in range(size)]
        for k, c in enumerate(reversed(f)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [[] for _ in range(size)]
        for k, c in enumerate(reversed(g)):
            row[i + k] = c
        rows.append(row)
    return rows


def _trim_outer(f: list[Poly]) -> list[Poly]:
    f = [trim(c) for c in f]
    while f and not f[-1]:
        f.pop()
    if not f:
        raise ValueError("zero polynomial has no resultant")
    return f


def determinant(mat: list[list[Poly]]) -> Poly:
    """Fraction-free Bareiss elimination over Q[x]."""
    a = [[trim(c) for c in row] for row in mat]
    n = len(a)
    if n == 0:
        return [Fraction(1)]
    sign = 1
    prev: Poly = [Fraction(1)]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = psub(pmul(a[i][j], a[k][k]), pmul(a[i][k], a[k][j]))
                a[i][j] = pexquo(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else pneg(det)


def resultant(f: list[Poly], g: list[Poly]) -> Poly:
    return determinant(sylvester_matrix(f, g))


def primitive(p: Poly) -> Poly:
    """Scale to integer coefficients with positive leading term and unit content."""
    p = trim(p)
    if not p:
        return p
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    s = -1 if ints[-1] < 0 else 1
    return [Fraction(s * c // g) for c in ints]
