"""Type-A Hecke algebra on the positive permutation braid basis.

Generators satisfy ``g**2 = (q - 1/q) g + 1``.  Permutations are tuples in
one-line notation (values 1..n); right multiplication by the simple
transposition s_i swaps positions i and i+1.

The normalized Ocneanu trace has ``tr(1) = 1`` and
``tr(a g_{n-1} b) = (r/δ) tr(ab)`` for a, b in H_{n-1}, with
δ = (r - 1/r)/(q - 1/q).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .coeffring import LaurentPoly, RationalFunction, circle_parameter

Permutation = tuple[int, ...]

_Q, _R = RationalFunction.gens()
Z = _Q - _Q ** -1  # q - q^-1
DELTA = circle_parameter()
STAB = _R / DELTA  # trace weight of the last generator


class DegenerateSpecialization(ZeroDivisionError):
    pass


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def simple(n: int, i: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range for {n} strands")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def length(w: Permutation) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def format_perm(w: Permutation) -> str:
    return "[" + ",".join(map(str, w)) + "]"


def _swap(w: Permutation, i: int) -> Permutation:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Indices i_1..i_k with g_w = g_{i_1} ... g_{i_k}."""
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            return reduced_word(_swap(w, i)) + (i,)
    return ()


class HeckeElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = {w: c for w, c in terms.items() if c != 0}

    @classmethod
    def identity(cls, n: int) -> "HeckeElement":
        return cls(n, {identity_perm(n): RationalFunction.const(1)})

    @classmethod
    def generator(cls, n: int, i: int) -> "HeckeElement":
        return cls(n, {simple(n, i): RationalFunction.const(1)})

    @classmethod
    def basis(cls, w: Permutation) -> "HeckeElement":
        return cls(len(w), {tuple(w): RationalFunction.const(1)})

    def _check(self, other):
        if other.n != self.n:
            raise ValueError(f"strand mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.identity(self.n).scale(other)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement) or other.n != self.n:
            return NotImplemented
        return not (self - other).terms

    def times_generator(self, i: int) -> "HeckeElement":
        out: dict = {}
        for w, c in self.terms.items():
            ws = _swap(w, i)
            out[ws] = out[ws] + c if ws in out else c
            if w[i - 1] > w[i]:  # length drops: g_w g_s = (q - 1/q) g_w + g_{ws}
                zc = Z * c
                out[w] = out[w] + zc if w in out else zc
        return HeckeElement(self.n, out)

    def include(self) -> "HeckeElement":
        """Add a strand on the right."""
        return HeckeElement(self.n + 1, {w + (self.n + 1,): c for w, c in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"({c})*g{format_perm(w)}" for w, c in sorted(self.terms.items()))
        return f"HeckeElement(n={self.n}, {body or '0'})"


def mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    x._check(y)
    total = HeckeElement(x.n, {})
    for w, c in y.terms.items():
        part = x
        for i in reduced_word(w):
            part = part.times_generator(i)
        total = total + part.scale(c)
    return total


def from_braid_word(word, n: int) -> HeckeElement:
    """sigma_i -> g_i, sigma_i^-1 -> g_i - (q - 1/q)."""
    out = HeckeElement.identity(n)
    for letter in word:
        i = abs(letter)
        if not 1 <= i <= n - 1 or letter == 0:
            raise IndexError(f"braid letter {letter} out of range for {n} strands")
        step = out.times_generator(i)
        if letter < 0:
            step = step - out.scale(Z)
        out = step
    return out


def _strip(w: Permutation) -> Permutation:
    k = len(w)
    while k and w[k - 1] == k:
        k -= 1
    return w[:k]


@lru_cache(maxsize=None)
def basis_trace(w: Permutation) -> RationalFunction:
    """tr(g_w) by peeling off the last strand."""
    w = _strip(w)
    n = len(w)
    if n == 0:
        return RationalFunction.const(1)
    j = w.index(n) + 1
    # w = v * (s_{n-1} s_{n-2} ... s_j) with v fixing n and lengths adding
    v = w
    for i in range(j, n):
        v = _swap(v, i)
    rest = HeckeElement(n - 1, {v[:-1]: RationalFunction.const(1)})
    for i in range(n - 2, j - 1, -1):
        rest = rest.times_generator(i)
    return STAB * ocneanu_trace(rest)


def ocneanu_trace(x: HeckeElement) -> RationalFunction:
    total = RationalFunction.const(0)
    for w, c in x.terms.items():
        total = total + c * basis_trace(w)
    return total


def closure_trace(x: HeckeElement) -> RationalFunction:
    """Unnormalized trace delta**n * tr(x) (closure value of the diagram)."""
    return DELTA ** x.n * ocneanu_trace(x)


def _symmetrizer_weights(n: int, kind: str):
    q = LaurentPoly.gens()[0]
    if kind == "row":
        base = q
    elif kind == "column":
        base = -(q ** -1)
    else:
        raise ValueError(f"unknown symmetrizer kind {kind!r}")
    return base


def symmetrizer(n: int, kind: str = "row") -> HeckeElement:
    """Minimal idempotent for the one-row ([n]) or one-column ([1^n]) shape.

    ``x = sum_w base**len(w) g_w`` satisfies ``g_i x = base * x`` with base = q
    (row) or -1/q (column); hence ``x**2 = c x`` with ``c = sum_w base**(2 len(w))``.
    """
    base = _symmetrizer_weights(n, kind)
    terms = {}
    norm = LaurentPoly.const(0)
    for w in permutations(range(1, n + 1)):
        ell = length(w)
        terms[w] = RationalFunction(base ** ell)
        norm = norm + base ** (2 * ell)
    if norm.is_zero():
        raise DegenerateSpecialization("symmetrizer normalization vanishes")
    inv = RationalFunction(LaurentPoly.const(1), norm)
    return HeckeElement(n, {w: c * inv for w, c in terms.items()})


def spectral_projection(n: int, i: int) -> HeckeElement:
    """E_i = (q - g_i)/(q + 1/q): projection onto the -1/q eigenspace of g_i."""
    q = _Q
    g = HeckeElement.generator(n, i)
    return (HeckeElement.identity(n).scale(q) - g).scale(1 / (q + q ** -1))


def all_permutations(n: int):
    return [tuple(p) for p in permutations(range(1, n + 1))]
