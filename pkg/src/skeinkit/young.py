"""Young diagrams and the quantum trace of the corresponding Hecke idempotents."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Optional

from .coeffring import ComplexPoint, LaurentPoly, PoleError, RationalFunction, DEFAULT_TOL


class IllDefinedIdempotent(ZeroDivisionError):
    """Some hook quantum integer vanishes at the requested specialization."""


@dataclass(frozen=True, order=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(x) for x in self.rows)
        if any(x <= 0 for x in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be positive and weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))

    @classmethod
    def row(cls, n: int) -> "YoungDiagram":
        return cls((n,))

    @classmethod
    def column(cls, n: int) -> "YoungDiagram":
        return cls((1,) * n)

    def to_text(self) -> str:
        return ",".join(map(str, self.rows))

    def __str__(self):
        return self.to_text()

    @property
    def size(self) -> int:
        return sum(self.rows)

    def transpose(self) -> "YoungDiagram":
        if not self.rows:
            return self
        return YoungDiagram(tuple(sum(1 for x in self.rows if x > j) for j in range(self.rows[0])))

    def cells(self) -> list[tuple[int, int, int, int]]:
        """(i, j, content, hook) for every cell, row-major, 1-indexed."""
        cols = self.transpose().rows
        return [(i, j, j - i, (lam - j) + (cols[j - 1] - i) + 1)
                for i, lam in enumerate(self.rows, start=1)
                for j in range(1, lam + 1)]

    def standard_tableaux(self) -> int:
        hooks = [h for *_, h in self.cells()]
        return math.factorial(self.size) // reduce(lambda a, b: a * b, hooks, 1)


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[YoungDiagram]:
    """All partitions of n, lexicographically increasing in their row tuples."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(1, min(rest, cap) + 1):
            for tail in rec(rest - first, first):
                yield (first,) + tail
    max_part = n if max_part is None else max_part
    for rows in sorted(rec(n, max_part)):
        yield YoungDiagram(rows)


def all_diagrams(max_cells: int) -> Iterator[YoungDiagram]:
    """Fixed total order: by cell count, then lexicographic rows."""
    for n in range(1, max_cells + 1):
        yield from partitions(n)


def quantum_trace(lam: YoungDiagram) -> RationalFunction:
    """Product over cells of (r q^c - 1/(r q^c)) / (q^h - q^-h)."""
    if not lam.rows:
        raise ValueError("quantum_trace needs a nonempty diagram")
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for _, _, c, h in lam.cells():
        num = num * LaurentPoly({(c, 1): 1, (-c, -1): -1})
        den = den * LaurentPoly({(h, 0): 1, (-h, 0): -1})
    return RationalFunction(num, den)


def _sin_sign(k: int, m: int) -> int:
    """Sign of sin(k*pi/m), exactly."""
    k %= 2 * m
    if k == 0 or k == m:
        return 0
    return 1 if k < m else -1


@dataclass(frozen=True)
class SpecializedTrace:
    sign: int
    value: float

    @property
    def negative(self) -> bool:
        return self.sign < 0


def trace_at_specialization(lam: YoungDiagram, N: int, m: Optional[int] = None,
                            q0: Optional[float] = None) -> SpecializedTrace:
    """Trace at r = q^N as the product of [N + c]/[h] over cells.

    Exactly one of ``m`` (q = exp(i pi/m)) or ``q0`` (real q > 1) must be
    given.  At a root of unity the sign is decided by integer residues and
    only the magnitude is computed in floating point.
    """
    if (m is None) == (q0 is None):
        raise ValueError("give exactly one of m or q0")
    cells = lam.cells()
    if m is not None:
        if m <= 0:
            raise ValueError("m must be positive")
        for *_, h in cells:
            if _sin_sign(h, m) == 0:
                raise IllDefinedIdempotent(f"[{h}] vanishes at q = exp(i pi/{m}) for {lam}")
        sign = 1
        mag = 1.0
        for *_, c, h in cells:
            sign *= _sin_sign(N + c, m) * _sin_sign(h, m)
            mag *= abs(math.sin((N + c) * math.pi / m)) / abs(math.sin(h * math.pi / m))
        return SpecializedTrace(sign, sign * mag if sign else 0.0)
    if not q0 > 1:
        raise ValueError("real specialization expects q0 > 1")
    t = math.log(q0)
    sign = 1
    mag = 1.0
    for *_, c, h in cells:
        k = N + c
        sign *= (k > 0) - (k < 0)
        mag *= abs(math.sinh(k * t)) / math.sinh(h * t)
    return SpecializedTrace(sign, sign * mag if sign else 0.0)


def trace_numeric(lam: YoungDiagram, q0, r0, tol: float = DEFAULT_TOL) -> ComplexPoint:
    q = q0.value if isinstance(q0, ComplexPoint) else complex(q0)
    r = r0.value if isinstance(r0, ComplexPoint) else complex(r0)
    out = 1 + 0j
    for _, _, c, h in lam.cells():
        den = q ** h - q ** -h
        if abs(den) <= tol:
            raise PoleError(f"pole: q^{h} - q^-{h} vanishes for {lam}")
        out *= (r * q ** c - 1 / (r * q ** c)) / den
    return ComplexPoint.of(out, tol)
