"""The six-dimensional 3-box algebra spanned by TL_3 and one uncappable generator S.

Coefficients live in Q(δ, γ).  S is killed by every non-identity TL_3 diagram
on either side and satisfies ``S*S = (γ-1) S + γ f_3``; its trace is 0.

Also collected here: the coefficient tables of the cut-down skein relations,
the closed-form solutions of the 2-2 move, the exclusion equations that rule
out ω != 1 and a = -1 when δ > 2, and the check of the idempotent system over
Q(q, r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import roots
from .coeffring import DELTA_GAMMA, LaurentPoly, RationalFunction, circle_parameter
from .temperley import TLElement, enumerate_matchings, identity_matching, jones_wenzl, markov_trace

D, G = RationalFunction.gens(DELTA_GAMMA)
ONE = RationalFunction.const(1, DELTA_GAMMA)
ZERO = RationalFunction.const(0, DELTA_GAMMA)

OMEGA_TAGS = ("1", "omega", "omega2")
EPSILON = "ε"  # placeholder for the undetermined (ix) coefficient


class DegenerateParameter(ZeroDivisionError):
    pass


def omega_sum(tag: str) -> int:
    """ω + ω⁻¹ for a cube root of unity, by tag."""
    if tag == "1":
        return 2
    if tag in ("omega", "omega2"):
        return -1
    raise ValueError(f"unknown omega tag {tag!r}")


# -- the algebra -----------------------------------------------------------------

@dataclass(frozen=True)
class ThreeBoxElement:
    tl: TLElement
    s: object = ZERO

    def __add__(self, other: "ThreeBoxElement") -> "ThreeBoxElement":
        return ThreeBoxElement(self.tl + other.tl, self.s + other.s)

    def __neg__(self):
        return ThreeBoxElement(-self.tl, -self.s)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ThreeBoxElement":
        return ThreeBoxElement(self.tl.scale(c), c * self.s)

    def __mul__(self, other):
        if isinstance(other, ThreeBoxElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, ThreeBoxElement):
            return NotImplemented
        return self.tl == other.tl and self.s == other.s

    __hash__ = None

    def identity_coefficient(self):
        return self.tl.coefficient(identity_matching(3))


@dataclass(frozen=True)
class ThreeBoxAlgebra:
    """Parameters may be symbolic (default) or specialized field elements."""

    delta: object = D
    gamma: object = G

    def zero(self) -> ThreeBoxElement:
        return ThreeBoxElement(TLElement(3, {}, self.delta), self.gamma * 0)

    def identity(self) -> ThreeBoxElement:
        return ThreeBoxElement(TLElement.identity(3, self.delta), self.gamma * 0)

    def diagram(self, m) -> ThreeBoxElement:
        return ThreeBoxElement(TLElement.basis(m, self.delta), self.gamma * 0)

    def generator(self) -> ThreeBoxElement:
        return ThreeBoxElement(TLElement(3, {}, self.delta), self.gamma * 0 + 1)

    def f3(self) -> ThreeBoxElement:
        return ThreeBoxElement(jones_wenzl(3, self.delta), self.gamma * 0)

    def basis(self) -> list[ThreeBoxElement]:
        return [self.diagram(m) for m in enumerate_matchings(3)] + [self.generator()]

    def multiply(self, x: ThreeBoxElement, y: ThreeBoxElement) -> ThreeBoxElement:
        g = self.gamma
        tl = x.tl * y.tl
        s = x.s * y.identity_coefficient() + x.identity_coefficient() * y.s
        ss = x.s * y.s
        if ss != 0:
            s = s + (g - 1) * ss
            tl = tl + jones_wenzl(3, self.delta).scale(g * ss)
        return ThreeBoxElement(tl, s)

    def trace(self, x: ThreeBoxElement):
        return markov_trace(x.tl)  # Tr(S) = 0

    def pq_idempotents(self) -> tuple[ThreeBoxElement, ThreeBoxElement]:
        one_plus = 1 + self.gamma
        if one_plus == 0:
            raise DegenerateParameter("γ = -1: P and Q are undefined")
        inv = 1 / one_plus
        S, f3 = self.generator(), self.f3()
        P = (S + f3).scale(inv)
        Q = (f3.scale(self.gamma) - S).scale(inv)
        return P, Q


ALGEBRA = ThreeBoxAlgebra()


def multiply(x: ThreeBoxElement, y: ThreeBoxElement) -> ThreeBoxElement:
    """Product in the symbolic algebra; use ``ThreeBoxAlgebra.multiply`` for specialized γ."""
    return ALGEBRA.multiply(x, y)


def pq_idempotents() -> tuple[ThreeBoxElement, ThreeBoxElement]:
    return ALGEBRA.pq_idempotents()


def trace(x: ThreeBoxElement):
    return markov_trace(x.tl)


# -- cut-down coefficient table ----------------------------------------------------

@dataclass(frozen=True)
class CutdownEntry:
    item: str
    coefficients: tuple
    note: str = ""


def cutdown_coefficients(omega_tag: str = "1") -> dict[str, CutdownEntry]:
    """Coefficients of the nine f_2 cut-down skein relations."""
    omega_sum(omega_tag)
    d, g = D, G
    eps = EPSILON if omega_tag == "1" else ZERO
    return {
        "i": CutdownEntry("i", (omega_tag,), "rotation eigenvalue"),
        "ii": CutdownEntry("ii", (ZERO, ZERO), "caps on S and TL"),
        "iii": CutdownEntry("iii", (ZERO,)),
        "iv": CutdownEntry("iv", ((d ** 2 - 2) / d,)),
        "v": CutdownEntry("v", (g * (d ** 3 - 2 * d) / (d ** 2 - 1),)),
        "vi": CutdownEntry("vi", ((d ** 2 - 3) / d,)),
        "vii": CutdownEntry("vii", (-1 / d,)),
        "viii": CutdownEntry("viii", (g - 1, -g * d / (d ** 2 - 1))),
        "ix": CutdownEntry("ix", (eps, g * (g - 1) * d ** 2 / (d ** 2 - 1)),
                           "TL coefficient as listed with the relations"),
        "ix_proof": CutdownEntry("ix_proof", (eps, g * (g - 1) * d / (d ** 2 - 1)),
                                 "TL coefficient as used in the ω = 1 argument"),
    }


# -- 2-2 move solutions ---------------------------------------------------------------

@dataclass(frozen=True)
class RelationCoefficients:
    omega: str
    a: int
    a_prime: int
    b: RationalFunction
    c: RationalFunction
    d: Optional[RationalFunction] = None
    epsilon: Optional[RationalFunction] = None

    def __post_init__(self):
        if self.a not in (1, -1) or self.a_prime not in (1, -1):
            raise ValueError("a and a' must be +1 or -1")
        omega_sum(self.omega)
        if (self.d is not None) != (self.a == -1):
            raise ValueError("d is present exactly when a = -1")
        if self.epsilon is not None and self.omega != "1":
            raise ValueError("ε is only defined for ω = 1")


def _b(omega_tag: str, a: int) -> RationalFunction:
    w = omega_sum(omega_tag)
    if a == 1:
        return -(G - 1) * D / (D ** 2 - 2 + w)
    return (G - 1) * D / (D ** 2 - 2 - w)


_D5 = D ** 4 - 3 * D ** 2 + 1  # [5] in terms of δ


def two_two_solutions(omega_tag: str, a: int, a_prime: int = 1) -> RelationCoefficients:
    if a not in (1, -1):
        raise ValueError("a must be +1 or -1")
    b = _b(omega_tag, a)
    if a == 1:
        c = -G * D / (D ** 2 - 1)
        d = None
    else:
        c = G * D * (2 * (D ** 2 - 2) / _D5 - 1 / (D ** 2 - 1))
        d = -2 * G * D ** 2 / _D5
    eps = epsilon_value(a, "1") if omega_tag == "1" else None
    return RelationCoefficients(omega_tag, a, a_prime, b, c, d, eps)


@dataclass(frozen=True)
class CappingCheck:
    ok: bool
    residuals: dict


def verify_capping(rc: RelationCoefficients) -> CappingCheck:
    """Cap the bottom of the 2-2 relation with TL and compare S and TL coefficients.

    Caps of the basis pictures: HSS -> (γ-1)S - γδ/(δ²-1) TL, ISS -> 0,
    HSTL + HTLS -> -(ω+ω⁻¹)/δ S, ITLS + ISTL -> (δ²-2)/δ S, TLID -> TL,
    TLE -> 0, TLC -> (δ²-2)/δ TL.
    """
    w = omega_sum(rc.omega)
    lhs_s = G - 1
    lhs_tl = -G * D / (D ** 2 - 1)
    h_pair = -w / D
    i_pair = (D ** 2 - 2) / D
    if rc.a == 1:
        rhs_s = rc.b * (h_pair - i_pair)
        rhs_tl = rc.c
    else:
        rhs_s = rc.b * (h_pair + i_pair)
        rhs_tl = rc.c + rc.d * (D ** 2 - 2) / D
    res = {"S": lhs_s - rhs_s, "TL": lhs_tl - rhs_tl}
    return CappingCheck(all(r == 0 for r in res.values()), res)


def epsilon_value(a: int, omega_tag: str = "1") -> RationalFunction:
    """S-coefficient of the triangle of three S's, from the 2-2 move with sign a.

    For ω != 1 this is the quantity the rotation argument forces to vanish.
    """
    b = _b(omega_tag, a)
    if a == 1:
        return G * D * (D ** 2 - 3) / (D ** 2 - 1) + 2 * (G - 1) * b
    if a == -1:
        c = G * D * (2 * (D ** 2 - 2) / _D5 - 1 / (D ** 2 - 1))
        return -G * (D ** 3 - 2 * D) / (D ** 2 - 1) + 2 * (G - 1) * b + c
    raise ValueError("a must be +1 or -1")


# -- exclusion equations ---------------------------------------------------------------

def _at_gamma_one(x: RationalFunction) -> RationalFunction:
    d_img = LaurentPoly.monomial(1, 0, names=DELTA_GAMMA)
    one = LaurentPoly.monomial(0, 0, names=DELTA_GAMMA)
    return x.substitute(d_img, one)


def to_bivariate(p: LaurentPoly) -> list[list[Fraction]]:
    """Polynomial in (δ, γ) as a list over powers of γ of δ-coefficient lists.

    Negative exponents are cleared by a monomial factor; nonnegative powers of δ are kept.
    """
    if p.is_zero():
        return []
    lo_d = min(0, min(a for a, _ in p.terms))
    lo_g = min(0, min(b for _, b in p.terms))
    hi_g = max(b for _, b in p.terms) - lo_g
    out: list[list[Fraction]] = [[] for _ in range(hi_g + 1)]
    for (a, b), c in p.terms.items():
        row = out[b - lo_g]
        k = a - lo_d
        row.extend([Fraction(0)] * (k + 1 - len(row)))
        row[k] += Fraction(c)
    return [roots.trim(r) for r in out]


def to_univariate(p: LaurentPoly) -> list[Fraction]:
    """Coefficient list of a polynomial in δ alone."""
    biv = to_bivariate(p)
    if len(biv) > 1:
        raise ValueError("expected a polynomial in δ alone")
    return biv[0] if biv else []


def numerator_poly(x: RationalFunction) -> list[Fraction]:
    return roots.primitive(to_univariate(x.num))


def _poly_json(p) -> list[str]:
    return [str(c) for c in p]


def _root_summary(p, lo=2, hi=100) -> dict:
    isolated = roots.isolate_real_roots(p)
    return {
        "real_root_intervals": [r.as_json() for r in isolated],
        "real_roots_approx": [round(r.mid, 6) + 0.0 for r in isolated],
        "roots_in_window": roots.count_roots(p, Fraction(lo), Fraction(hi)) if roots.degree(p) > 0 else 0,
        "roots_above_2": roots.count_roots(p, Fraction(2), roots.cauchy_bound(p) + 1) if roots.degree(p) > 0 else 0,
    }


def _branch(branch_id: str, claim: str, polys: dict[str, list], stated: dict[str, list] | None = None,
            extra: dict | None = None) -> dict:
    entries = []
    for name, p in polys.items():
        e = {"name": name, "coefficients": _poly_json(p), **_root_summary(p)}
        if stated and name in stated:
            e["matches_stated_form"] = roots.primitive(p) == roots.primitive(stated[name])
        entries.append(e)
    no_solution = all(e["roots_above_2"] == 0 for e in entries)
    out = {
        "branch": branch_id,
        "claim": claim,
        "variable": "δ",
        "window": ["2", "100"],
        "polynomials": entries,
        "verdict": "no roots with delta > 2" if no_solution else "root with delta > 2 found",
        "excluded": no_solution,
    }
    if extra:
        out.update(extra)
    return out


def _branch_a() -> dict:
    b_zero = (G - 1) * D  # numerator of b for a = 1, ω != 1 forces γ = 1
    eps = _at_gamma_one(epsilon_value(1, "omega"))
    return _branch("a", "a = 1, ω != 1: b = 0 forces γ = 1, then the S-triangle coefficient δ(δ²-3)/(δ²-1) must vanish",
                   {"epsilon_at_gamma_1": numerator_poly(eps)},
                   {"epsilon_at_gamma_1": [0, -3, 0, 1]},
                   {"gamma_forced": "1", "b_numerator": _at_gamma_one(b_zero).to_text()})


def _branch_b() -> dict:
    eps = _at_gamma_one(epsilon_value(-1, "omega"))
    return _branch("b", "a = -1, ω != 1, γ = 1: 2(δ²-2)/(δ⁴-3δ²+1) = 1",
                   {"epsilon_at_gamma_1": numerator_poly(eps)},
                   {"epsilon_at_gamma_1": [0, 5, 0, -5, 0, 1]})


def _branch_c() -> dict:
    d = LaurentPoly.monomial(1, 0, names=DELTA_GAMMA)
    q2, q3, q4 = d, d ** 2 - 1, d ** 3 - 2 * d
    polys = {}
    for sign, label in ((1, "rhs=+1"), (-1, "rhs=-1")):
        expr = 2 * q3 - q4 * q2 - sign  # Penney condition ±1 = 2[3] - [4][2]
        polys[label] = roots.primitive(to_univariate(expr))
    out = _branch("c", "reduced case, P' self-dual: ±1 = 2[3] - [4][2]",
                  polys, {"rhs=-1": [1, 0, -4, 0, 1], "rhs=+1": [3, 0, -4, 0, 1]})
    # exact: δ² = 2 ± √3 and √3 < 2 because 3 < 4
    out["exact"] = {"delta_squared_roots": ["2+sqrt(3)", "2-sqrt(3)"],
                    "largest_below_4": 3 < 4,
                    "largest_delta_approx": round((2 + 3 ** 0.5) ** 0.5, 6)}
    return out


def _pair_poly(sign: int) -> list[list[Fraction]]:
    # [3]γ² ± γ - [5] as a bivariate polynomial (outer variable γ)
    return [[Fraction(-1), 0, Fraction(3), 0, Fraction(-1)], [Fraction(sign)], [Fraction(-1), 0, Fraction(1)]]


def branch_d_systems() -> dict[str, tuple[list, list, list]]:
    """(pair polynomial, triangle polynomial, resultant in δ) for each of the four systems."""
    tri = {1: epsilon_value(1, "omega"), -1: epsilon_value(-1, "omega")}
    out = {}
    for a in (1, -1):
        g_poly = to_bivariate(tri[a].num)
        for sign in (1, -1):
            f_poly = _pair_poly(sign)
            res = roots.primitive(roots.resultant(f_poly, g_poly))
            out[f"a={a:+d},pm={sign:+d}"] = (f_poly, g_poly, res)
    return out


def _branch_d() -> dict:
    systems = branch_d_systems()
    polys = {name: res for name, (_, _, res) in systems.items()}
    out = _branch("d", "reduced case, P' not self-dual: [3]γ² ± γ - [5] = 0 with the ω != 1 triangle equation",
                  polys)
    out["eliminated"] = "γ (Sylvester resultant)"
    return out


def _branch_e() -> dict:
    iss = -(G - 1) + _b("1", -1) * (-2 / D)  # ISS coefficient forced to vanish
    d_at_1 = _at_gamma_one(-2 * G * D ** 2 / _D5)
    out = _branch("e", "a' branch: (γ-1)(δ²-2)/(δ²-4) = 0 forces γ = 1, then d = -2δ²/(δ⁴-3δ²+1) must vanish",
                  {"d_at_gamma_1": numerator_poly(d_at_1)}, {"d_at_gamma_1": [0, 0, 1]})
    out["iss_coefficient"] = iss.to_text()
    out["iss_matches_stated_form"] = iss == -(G - 1) * (D ** 2 - 2) / (D ** 2 - 4)
    return out


def exclusion_report() -> dict:
    return {"branches": [_branch_a(), _branch_b(), _branch_c(), _branch_d(), _branch_e()]}


# -- the idempotent system over Q(q, r) --------------------------------------------------

_Q, _R = RationalFunction.gens()
_DQ = circle_parameter()
_ZQ = _Q - _Q ** -1


def hecke_idempotent_traces() -> tuple[RationalFunction, RationalFunction]:
    """(trace formula for P, trace formula for Q) of the HOMFLY 3-box idempotents."""
    q, r = _Q, _R
    den = (q + q ** -1) * _ZQ ** 3
    tp = (r - r ** -1) * (r * q - r ** -1 * q ** -1) * (r * q ** -2 - r ** -1 * q ** 2) / den
    tq = (r - r ** -1) * (r * q ** 2 - r ** -1 * q ** -2) * (r * q ** -1 - r ** -1 * q) / den
    return tp, tq


@dataclass(frozen=True)
class IdempotentSystemCheck:
    ok: bool
    residuals: dict = field(default_factory=dict)
    literal_residuals: dict = field(default_factory=dict)
    trace_q: Optional[RationalFunction] = None


def _system_residuals(a, b, c, e, f) -> dict:
    q, r, d = _Q, _R, _DQ
    return {
        "eq1": a * r + c + e * d,
        "eq2": b + c * d + f,
        "eq3": a * r ** -1 + c + f * d,
        "eq4": a * _ZQ + b + c * d + e,
    }


def solve_system(a, b) -> tuple:
    """c, e, f from the linear system, given a and b."""
    r, d = _R, _DQ
    c = (a * r ** -1 - b * d) / (d ** 2 - 1)
    e = -(a * r + c) / d
    f = -(a * r ** -1 + c) / d
    return c, e, f


def literal_solution(a, b) -> tuple:
    """c, e, f in the literal variant where the b-term of f carries a + sign."""
    q, r = _Q, _R
    z, rr = _ZQ, r - r ** -1
    den = r ** 2 + r ** -2 - q ** 2 - q ** -2
    c = a * r ** -1 * z ** 2 / den - b * rr * z / den
    e = -(z / rr) * (a * r + a * r ** -1 * z ** 2 / den - b * rr * z / den)
    f = -(z / rr) * (a * r ** -1 * rr ** 2 / den + b * rr * z / den)
    return c, e, f


def trace_from_coefficients(a, b, c, e, f) -> RationalFunction:
    d = _DQ
    return a * _R * d ** 2 + b * d ** 3 + 2 * c * d ** 2 + (e + f) * d


def idempotent_system_check(branch: int = 1) -> IdempotentSystemCheck:
    q = _Q
    if branch == 1:
        a, b = 1 / (q + q ** -1), q ** -1 / (q + q ** -1)
    elif branch == 2:
        a, b = -1 / (q + q ** -1), q / (q + q ** -1)
    else:
        raise ValueError("branch must be 1 or 2")
    c, e, f = solve_system(a, b)
    res = _system_residuals(a, b, c, e, f)
    lit = _system_residuals(a, b, *literal_solution(a, b))
    tr_q = trace_from_coefficients(a, b, c, e, f)
    tp, tq = hecke_idempotent_traces()
    target = tq if branch == 1 else tp
    res["trace"] = tr_q - target
    res["sum"] = tp + tq - (_DQ ** 3 - 2 * _DQ)
    ok = all(v == 0 for v in res.values())
    return IdempotentSystemCheck(ok, res, lit, tr_q)
