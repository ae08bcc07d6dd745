"""HOMFLY-type partition function of braid closures.

Two independent routes compute the same value: the Ocneanu trace on the
Hecke algebra, and a skein recursion that resolves crossings until the
diagram is descending.  A Kauffman-bracket evaluation on Temperley-Lieb
diagrams serves as an oracle for the r = q^2 specialization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional

from .coeffring import LaurentPoly, RationalFunction, substitute_power
from .hecke import DELTA, Z, closure_trace, from_braid_word
from .temperley import TLElement, markov_trace

_Q, _R = RationalFunction.gens()
ORACLE_NAMES = ("A", "B")


class SkeinBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"braid letter {x} out of range for {self.n} strands")

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    @classmethod
    def parse(cls, n: int, text: str) -> "BraidWord":
        return cls(n, tuple(int(t) for t in text.split()))

    def to_text(self) -> str:
        return " ".join(map(str, self.letters))

    def permutation(self) -> tuple[int, ...]:
        """Position (0-indexed) at the top of the braid of the strand starting at each bottom position."""
        pos = list(range(self.n))
        where = list(range(self.n))  # where[p] = strand currently at position p
        for x in self.letters:
            i = abs(x) - 1
            where[i], where[i + 1] = where[i + 1], where[i]
        for p, s in enumerate(where):
            pos[s] = p
        return tuple(pos)

    def components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.n
        count = 0
        for s in range(self.n):
            if not seen[s]:
                count += 1
                while not seen[s]:
                    seen[s] = True
                    s = perm[s]
        return count


@dataclass(frozen=True)
class LinkValue:
    value: RationalFunction

    def to_text(self) -> str:
        return self.value.to_text()


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    braid: BraidWord


def parse_corpus(text: str) -> list[CorpusEntry]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 3:
            raise ValueError(f"corpus line {lineno}: expected '<name> ; <n> ; <letters>'")
        name, n, letters = parts
        out.append(CorpusEntry(name, BraidWord.parse(int(n), letters)))
    return out


def bundled_corpus() -> list[CorpusEntry]:
    return parse_corpus(resources.files("skeinkit").joinpath("data/corpus.txt").read_text())


def closure_value(beta: BraidWord) -> LinkValue:
    """delta**n times the normalized trace: circle = delta, positive curl = r."""
    return LinkValue(closure_trace(from_braid_word(beta.letters, beta.n)))


def normalized_value(beta: BraidWord) -> RationalFunction:
    """Writhe-normalized invariant: closure / (delta * r**writhe); unknot gives 1."""
    return closure_value(beta).value / (DELTA * _R ** beta.writhe)


# -- skein recursion ---------------------------------------------------------

def _first_bad_crossing(n: int, letters: tuple[int, ...]):
    """Walk the closure component by component; return (index, ncomp, self_sign_sum).

    For letter +i the strand entering at position i passes over; for -i the
    strand entering at position i+1 does.  ``index`` is the first crossing
    first reached along its under-strand, or None if the diagram is descending.
    """
    L = len(letters)
    visited = [False] * L
    comp_of_pass: list[list[int]] = [[] for _ in range(L)]
    started = [False] * n
    ncomp = 0
    for start in range(n):
        if started[start]:
            continue
        ncomp += 1
        p = start
        while True:
            started[p] = True
            for t, x in enumerate(letters):
                i = abs(x) - 1
                if p == i or p == i + 1:
                    over = (p == i) if x > 0 else (p == i + 1)
                    comp_of_pass[t].append(ncomp)
                    if not visited[t]:
                        visited[t] = True
                        if not over:
                            return t, None, None
                    p = i + 1 if p == i else i
            if p == start:
                break
    self_sum = sum((1 if x > 0 else -1) for t, x in enumerate(letters)
                   if comp_of_pass[t][0] == comp_of_pass[t][1])
    return None, ncomp, self_sum


def skein_resolve_value(beta: BraidWord, max_crossings: int = 16,
                        max_nodes: int = 200_000) -> LinkValue:
    """Evaluate by the skein relation Z(D+) = Z(D-) + (q - 1/q) Z(D0).

    Each non-descending crossing is switched (flip the letter) and smoothed
    (delete the letter); a descending diagram is a stack of framed unknots and
    evaluates to delta**components * r**(self-crossing writhe).
    """
    if len(beta.letters) > max_crossings:
        raise SkeinBudgetExceeded(f"{len(beta.letters)} crossings exceed the bound {max_crossings}")
    budget = [max_nodes]

    @lru_cache(maxsize=None)
    def rec(letters: tuple[int, ...]) -> RationalFunction:
        budget[0] -= 1
        if budget[0] < 0:
            raise SkeinBudgetExceeded(f"skein recursion exceeded {max_nodes} nodes")
        t, ncomp, self_sum = _first_bad_crossing(beta.n, letters)
        if t is None:
            return DELTA ** ncomp * _R ** self_sum
        x = letters[t]
        switched = rec(letters[:t] + (-x,) + letters[t + 1:])
        smoothed = rec(letters[:t] + letters[t + 1:])
        return switched + Z * smoothed if x > 0 else switched - Z * smoothed

    return LinkValue(rec(beta.letters))


# -- Markov moves --------------------------------------------------------------

def markov_equivalent(beta: BraidWord, move: str, arg: int = 1) -> BraidWord:
    """``conjugate`` by letter ``arg``, ``stabilize`` with sign ``arg``, or cyclic ``shift`` by ``arg``."""
    if move == "conjugate":
        if arg == 0 or abs(arg) > beta.n - 1:
            raise ValueError(f"invalid generator index {arg}")
        return BraidWord(beta.n, (arg,) + beta.letters + (-arg,))
    if move == "stabilize":
        if arg not in (1, -1):
            raise ValueError("stabilization sign must be +1 or -1")
        return BraidWord(beta.n + 1, beta.letters + (arg * beta.n,))
    if move == "shift":
        if not beta.letters:
            return beta
        k = arg % len(beta.letters)
        return BraidWord(beta.n, beta.letters[k:] + beta.letters[:k])
    raise ValueError(f"unknown Markov move {move!r}")


def mirror(beta: BraidWord) -> BraidWord:
    return BraidWord(beta.n, tuple(-x for x in beta.letters))


def random_braid(rng: random.Random, max_strands: int = 4, max_crossings: int = 10) -> BraidWord:
    n = rng.randint(1, max_strands)
    if n == 1:
        return BraidWord(1)
    k = rng.randint(0, max_crossings)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(k)))


# -- Kauffman bracket oracle -----------------------------------------------------

def jones_oracle(beta: BraidWord) -> LaurentPoly:
    """Bracket of the closure times (-A^3)^(-writhe), divided by the loop value."""
    A = LaurentPoly.monomial(1, 0, names=ORACLE_NAMES)
    Ainv = A ** -1
    loop = -(A ** 2) - A ** -2
    x = TLElement.identity(beta.n, loop)
    one = TLElement.identity(beta.n, loop)
    for letter in beta.letters:
        u = TLElement.cupcap(beta.n, abs(letter), loop)
        step = one.scale(A) + u.scale(Ainv) if letter > 0 else one.scale(Ainv) + u.scale(A)
        x = x * step
    bracket = markov_trace(x)
    framed = bracket * (-(A ** 3)) ** (-beta.writhe)
    out = framed / loop
    return out.as_laurent() if isinstance(out, RationalFunction) else out


def specialized_jones(beta: BraidWord) -> LaurentPoly:
    """normalized_value at r = q^2, as a Laurent polynomial in q."""
    return substitute_power(normalized_value(beta), 2).as_laurent()


@dataclass(frozen=True)
class JonesCalibration:
    sign: int
    power: int
    verified_on: tuple[str, ...] = field(default=())

    def apply(self, p: LaurentPoly) -> LaurentPoly:
        img = LaurentPoly.monomial(self.power, 0, self.sign, names=ORACLE_NAMES)
        return p.substitute(img, LaurentPoly.monomial(0, 1, names=ORACLE_NAMES))

    def describe(self) -> str:
        s = "-" if self.sign < 0 else ""
        return f"q -> {s}A^{self.power}"


def calibrate_jones(references: Optional[Iterable[BraidWord]] = None,
                    held_out: Optional[dict[str, BraidWord]] = None,
                    max_power: int = 4) -> list[JonesCalibration]:
    """All monomial maps q -> s*A^k that match the references and the held-out braids."""
    if references is None:
        references = [BraidWord(1), BraidWord(2, (1, 1))]
    if held_out is None:
        held_out = {"trefoil": BraidWord(2, (1, 1, 1)), "figure-eight": BraidWord(3, (1, -2, 1, -2))}
    references = list(references)
    ref_pairs = [(specialized_jones(b), jones_oracle(b)) for b in references]
    found = []
    for k in range(-max_power, max_power + 1):
        if k == 0:
            continue
        for s in (1, -1):
            cal = JonesCalibration(s, k)
            if all(cal.apply(h) == j for h, j in ref_pairs):
                ok = tuple(name for name, b in held_out.items()
                           if cal.apply(specialized_jones(b)) == jones_oracle(b))
                if len(ok) == len(held_out):
                    found.append(JonesCalibration(s, k, ok))
    return found
