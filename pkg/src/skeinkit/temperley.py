"""Temperley-Lieb diagram algebras over an arbitrary coefficient field.

Boundary points of an n-strand diagram are numbered 1..n along the bottom
(left to right) and n+1..2n along the top (right to left), so the point
directly above bottom point k is 2n+1-k.  Going 1, 2, ..., 2n walks once
around the rectangle, which makes "noncrossing" a bracket-matching condition
and makes the trace closure an index reflection.

``x * y`` stacks ``x`` on top of ``y``.  Coefficients are any objects with
field arithmetic (ints, Fractions, RationalFunctions, complex numbers); the
loop value is carried by each element.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


class DegenerateLoopValue(ZeroDivisionError):
    pass


class PlanarMatching:
    """Fixed-point-free noncrossing involution on the 2n boundary points."""

    __slots__ = ("n", "partner", "_hash")

    def __init__(self, n: int, partner: tuple[int, ...]):
        # partner is 0-indexed: point p+1 is matched to partner[p]+1
        self.n = n
        self.partner = tuple(partner)
        self._hash = hash((n, self.partner))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "PlanarMatching":
        partner = [-1] * (2 * n)
        for a, b in pairs:
            if partner[a - 1] != -1 or partner[b - 1] != -1 or a == b:
                raise ValueError(f"not a perfect matching: {pairs}")
            partner[a - 1] = b - 1
            partner[b - 1] = a - 1
        if -1 in partner:
            raise ValueError(f"unmatched points in {pairs}")
        m = cls(n, tuple(partner))
        if not m.is_noncrossing():
            raise ValueError(f"matching {m} has crossings")
        return m

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(p + 1, self.partner[p] + 1) for p in range(2 * self.n) if p < self.partner[p]]

    def is_noncrossing(self) -> bool:
        stack = []
        for p in range(2 * self.n):
            if p < self.partner[p]:
                stack.append(self.partner[p])
            elif not stack or stack.pop() != p:
                return False
        return True

    def through_strands(self) -> int:
        n = self.n
        return sum(1 for p in range(n) if self.partner[p] >= n)

    def __eq__(self, other):
        return isinstance(other, PlanarMatching) and self.n == other.n and self.partner == other.partner

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.n, self.partner) < (other.n, other.partner)

    def to_text(self) -> str:
        return ",".join(f"({a},{b})" for a, b in self.pairs)

    def __repr__(self):
        return f"PlanarMatching({self.n}, {self.to_text()})"


def parse_matching(n: int, text: str) -> PlanarMatching:
    body = text.replace(" ", "")
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"malformed matching {text!r}")
    pairs = []
    for chunk in body[1:-1].split("),("):
        a, b = chunk.split(",")
        pairs.append((int(a), int(b)))
    return PlanarMatching.from_pairs(n, pairs)


def identity_matching(n: int) -> PlanarMatching:
    return PlanarMatching(n, tuple(2 * n - 1 - p for p in range(2 * n)))


def cupcap_matching(n: int, i: int) -> PlanarMatching:
    if not 1 <= i <= n - 1:
        raise IndexError(f"cup-cap index {i} out of range for {n} strands")
    partner = list(identity_matching(n).partner)
    top_i, top_i1 = 2 * n - i, 2 * n - i - 1  # 0-indexed labels above bottom i, i+1
    partner[i - 1], partner[i] = i, i - 1
    partner[top_i], partner[top_i1] = top_i1, top_i
    return PlanarMatching(n, tuple(partner))


def enumerate_matchings(n: int) -> list[PlanarMatching]:
    return [PlanarMatching(n, p) for p in _noncrossing(2 * n)]


@lru_cache(maxsize=None)
def _noncrossing(size: int) -> tuple[tuple[int, ...], ...]:
    if size == 0:
        return ((),)
    out = []
    for k in range(1, size, 2):
        for inner in _noncrossing(k - 1):
            for outer in _noncrossing(size - k - 1):
                partner = [0] * size
                partner[0], partner[k] = k, 0
                for a, b in enumerate(inner):
                    partner[a + 1] = b + 1
                for a, b in enumerate(outer):
                    partner[a + k + 1] = b + k + 1
                out.append(tuple(partner))
    return tuple(out)


def catalan_dim(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


# Generic 4-box space of a Thurston-relation planar algebra: standard-form counts.
GENERIC_FOUR_BOX = {"temperley_lieb": 14, "annular_consequences": 8, "two_generator": 2}


@lru_cache(maxsize=65536)
def compose_matchings(top: PlanarMatching, bottom: PlanarMatching) -> tuple[PlanarMatching, int]:
    """Stack ``top`` over ``bottom``; return the resulting matching and the number of closed loops."""
    n = top.n
    # outer points: bottom's 0..n-1 keep labels; top's top points n..2n-1 keep labels.
    # middle: bottom's top point 2n-1-j sits under top's bottom point j.
    result = [-1] * (2 * n)
    visited_middle = [False] * n

    def walk(side: str, p: int) -> int:
        while True:
            if side == "b":
                p = bottom.partner[p]
                if p < n:
                    return p
                j = 2 * n - 1 - p
                visited_middle[j] = True
                side, p = "t", j
            else:
                p = top.partner[p]
                if p >= n:
                    return p
                visited_middle[p] = True
                side, p = "b", 2 * n - 1 - p

    for p in range(n):
        if result[p] == -1:
            end = walk("b", p)
            result[p], result[end] = end, p
    for p in range(n, 2 * n):
        if result[p] == -1:
            end = walk("t", p)
            result[p], result[end] = end, p
    loops = 0
    for j in range(n):
        if visited_middle[j]:
            continue
        loops += 1
        cur = j
        while not visited_middle[cur]:
            visited_middle[cur] = True
            nxt = top.partner[cur]  # another middle point, since the loop is closed
            visited_middle[nxt] = True
            cur = 2 * n - 1 - bottom.partner[2 * n - 1 - nxt]
    return PlanarMatching(n, tuple(result)), loops


@lru_cache(maxsize=65536)
def closure_loops(m: PlanarMatching) -> int:
    """Loops formed by joining point k to point 2n+1-k."""
    n = m.n
    seen = [False] * (2 * n)
    loops = 0
    for p in range(2 * n):
        if seen[p]:
            continue
        loops += 1
        cur = p
        while not seen[cur]:
            seen[cur] = True
            other = m.partner[cur]
            seen[other] = True
            cur = 2 * n - 1 - other
    return loops


def include_matching(m: PlanarMatching) -> PlanarMatching:
    """Add a through strand on the right."""
    n = m.n
    relabel = [p if p < n else p + 2 for p in range(2 * n)]
    partner = [0] * (2 * n + 2)
    for p in range(2 * n):
        partner[relabel[p]] = relabel[m.partner[p]]
    partner[n], partner[n + 1] = n + 1, n
    return PlanarMatching(n + 1, tuple(partner))


class TLElement:
    """Linear combination of planar matchings with a designated loop value."""

    __slots__ = ("n", "terms", "loop")

    def __init__(self, n: int, terms: dict, loop):
        self.n = n
        self.terms = {m: c for m, c in terms.items() if not _is_zero(c)}
        self.loop = loop

    @classmethod
    def identity(cls, n: int, loop) -> "TLElement":
        return cls(n, {identity_matching(n): 1}, loop)

    @classmethod
    def cupcap(cls, n: int, i: int, loop) -> "TLElement":
        return cls(n, {cupcap_matching(n, i): 1}, loop)

    @classmethod
    def basis(cls, m: PlanarMatching, loop) -> "TLElement":
        return cls(m.n, {m: 1}, loop)

    def _check(self, other: "TLElement"):
        if other.n != self.n:
            raise ValueError(f"strand mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return TLElement(self.n, out, self.loop)

    def __neg__(self):
        return TLElement(self.n, {m: -c for m, c in self.terms.items()}, self.loop)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TLElement":
        return TLElement(self.n, {m: c * v for m, v in self.terms.items()}, self.loop)

    def __mul__(self, other):
        if not isinstance(other, TLElement):
            return self.scale(other)
        return compose(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, TLElement) or other.n != self.n:
            return NotImplemented
        return all(_is_zero(c) for c in (self - other).terms.values())

    def coefficient(self, m: PlanarMatching):
        return self.terms.get(m, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def include(self) -> "TLElement":
        return TLElement(self.n + 1, {include_matching(m): c for m, c in self.terms.items()}, self.loop)

    def __repr__(self):
        body = " + ".join(f"({c})*[{m.to_text()}]" for m, c in sorted(self.terms.items()))
        return f"TLElement(n={self.n}, {body or '0'})"


def _is_zero(c) -> bool:
    return c == 0


def _loop_power(loop, k: int):
    out = 1
    for _ in range(k):
        out = out * loop
    return out


def compose(x: TLElement, y: TLElement) -> TLElement:
    x._check(y)
    powers: dict[int, object] = {}
    out: dict = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            m, loops = compose_matchings(mx, my)
            if loops not in powers:
                powers[loops] = _loop_power(x.loop, loops)
            c = cx * cy * powers[loops] if loops else cx * cy
            out[m] = out[m] + c if m in out else c
    return TLElement(x.n, out, x.loop)


def markov_trace(x: TLElement):
    """Unnormalized closure trace: identity on n strands evaluates to loop**n."""
    total = 0
    for m, c in x.terms.items():
        total = total + c * _loop_power(x.loop, closure_loops(m))
    return total


def jones_projection(n: int, i: int, loop) -> TLElement:
    return TLElement.cupcap(n, i, loop).scale(1 / loop)


def chebyshev(k: int, loop):
    """Loop-value Chebyshev sequence: 1, d, d^2-1, d^3-2d, ... (trace of the k-th JW idempotent)."""
    prev, cur = 1, loop
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, loop * cur - prev
    return cur


def jones_wenzl(n: int, loop) -> TLElement:
    """Wenzl recursion f_{k+1} = f_k - (D_{k-1}/D_k) f_k U_k f_k with D_k the Chebyshev values."""
    if n < 1:
        raise ValueError("Jones-Wenzl idempotents start at n = 1")
    f = TLElement.identity(1, loop)
    for k in range(1, n):
        dk = chebyshev(k, loop)
        if _is_zero(dk):
            raise DegenerateLoopValue(f"degenerate loop value: trace of f_{k} vanishes")
        fk = f.include()
        u = TLElement.cupcap(k + 1, k, loop)
        f = fk - (fk * u * fk).scale(chebyshev(k - 1, loop) / dk)
    return f
