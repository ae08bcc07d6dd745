"""Parameter correspondence (δ, γ) <-> (q, r) and the positivity decision.

Positivity holds exactly on r = q^N with q real >= 1 or q = exp(iπ/(N+l)).
Away from that locus a negativity witness (a Young diagram whose idempotent
is well defined and has negative trace) is produced and re-checked at the
input point.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .coeffring import ComplexPoint, DEFAULT_TOL, PoleError
from .young import (IllDefinedIdempotent, YoungDiagram, all_diagrams, trace_at_specialization,
                    trace_numeric)

N_CAP = 24
E6_REASON = ("index at most 4 regime (delta <= 2): classified by citation, "
             "the planar algebra is either the E_6 or E_6^{(1)} subfactor planar algebra")


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ParameterPoint:
    """Modes: ``exact_root_of_unity`` (N, m), ``exact_real`` (rational q0 with N or r0), ``numeric`` (q0, r0)."""

    mode: str
    N: Optional[int] = None
    m: Optional[int] = None
    q0: object = None
    r0: object = None
    delta: Optional[float] = None  # needed only when q = ±1

    def __post_init__(self):
        if self.mode == "exact_root_of_unity":
            if self.N is None or self.m is None or not 0 < self.N < self.m:
                raise ParameterError("root_of_unity requires 0 < N < m")
        elif self.mode == "exact_real":
            q0 = Fraction(self.q0)
            object.__setattr__(self, "q0", q0)
            if q0 <= 0:
                raise ParameterError("exact real mode expects q0 > 0")
            if self.N is None and self.r0 is None and q0 != 1:
                raise ParameterError("exact real mode needs N or r0")
            if self.r0 is not None:
                object.__setattr__(self, "r0", Fraction(self.r0))
        elif self.mode == "numeric":
            q = _as_complex(self.q0)
            r = _as_complex(self.r0)
            if q == 0 or r == 0:
                raise ParameterError("q0 and r0 must be nonzero")
            object.__setattr__(self, "q0", q)
            object.__setattr__(self, "r0", r)
        else:
            raise ParameterError(f"unknown mode {self.mode!r}")

    @classmethod
    def root_of_unity(cls, N: int, m: int) -> "ParameterPoint":
        return cls("exact_root_of_unity", N=N, m=m)

    @classmethod
    def exact_real(cls, q0, N: Optional[int] = None, r0=None, delta=None) -> "ParameterPoint":
        return cls("exact_real", N=N, q0=q0, r0=r0, delta=delta)

    @classmethod
    def numeric(cls, q0, r0, delta: Optional[float] = None) -> "ParameterPoint":
        return cls("numeric", q0=q0, r0=r0, delta=delta)

    def values(self) -> tuple[complex, complex]:
        if self.mode == "exact_root_of_unity":
            q = cmath.exp(1j * math.pi / self.m)
            return q, cmath.exp(1j * math.pi * self.N / self.m)
        if self.mode == "exact_real":
            q = float(self.q0)
            r = float(self.r0) if self.r0 is not None else (q ** self.N if self.N is not None else 1.0)
            return complex(q), complex(r)
        return self.q0, self.r0

    def as_numeric(self) -> "ParameterPoint":
        q, r = self.values()
        return ParameterPoint.numeric(q, r, self.delta)

    def to_dict(self) -> dict:
        q, r = self.values()
        return {"mode": self.mode, "N": self.N, "m": self.m,
                "q_re": q.real, "q_im": q.imag, "r_re": r.real, "r_im": r.imag,
                "delta": self.delta}


def _as_complex(z) -> complex:
    if isinstance(z, ComplexPoint):
        return z.value
    return complex(z)


@dataclass(frozen=True)
class Verdict:
    kind: str  # PositiveRootOfUnity | PositiveReal | Negative | Indeterminate
    N: Optional[int] = None
    l: Optional[int] = None
    witness: Optional[YoungDiagram] = None
    value: Optional[float] = None
    reason: str = ""

    @property
    def positive(self) -> bool:
        return self.kind.startswith("Positive")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "N": self.N, "l": self.l,
                "witness": self.witness.to_text() if self.witness else None,
                "value": self.value, "reason": self.reason}


# -- (δ, γ) ------------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaGamma:
    delta: complex
    gamma: complex

    def real_pair(self, tol: float = 1e-7) -> Optional[tuple[float, float]]:
        if abs(self.delta.imag) <= tol * max(1, abs(self.delta)) and \
                abs(self.gamma.imag) <= tol * max(1, abs(self.gamma)):
            return self.delta.real, self.gamma.real
        return None


def _idem_traces(q: complex, r: complex) -> tuple[complex, complex]:
    den = (q + 1 / q) * (q - 1 / q) ** 3
    tp = (r - 1 / r) * (r * q - 1 / (r * q)) * (r / q ** 2 - q ** 2 / r) / den
    tq = (r - 1 / r) * (r * q ** 2 - 1 / (r * q ** 2)) * (r / q - q / r) / den
    return tp, tq


def classical_gamma(delta: float) -> float:
    """Trace ratio of the two idempotents at q = r = 1."""
    return (delta + 2) * (delta - 1) / ((delta - 2) * (delta + 1))


def delta_gamma_from_qr(p: ParameterPoint, tol: float = DEFAULT_TOL) -> DeltaGamma:
    """δ = (r - 1/r)/(q - 1/q) and γ = tr(Q)/tr(P)."""
    q, r = p.values()
    if abs(q - 1 / q) <= tol:
        if p.delta is None:
            raise PoleError("q = ±1: the circle parameter must be supplied")
        d = float(p.delta)
        return DeltaGamma(complex(d), complex(classical_gamma(d)))
    delta = (r - 1 / r) / (q - 1 / q)
    tp, tq = _idem_traces(q, r)
    if abs(tp) <= tol:
        raise PoleError("tr(P) vanishes: γ undefined")
    return DeltaGamma(delta, tq / tp)


@dataclass(frozen=True)
class QRSolution:
    q: complex
    r: complex
    gamma_matches: bool
    eq_residual: float

    def point(self, delta: Optional[float] = None) -> ParameterPoint:
        return ParameterPoint.numeric(self.q, self.r, delta)


def _newton_polish(q: complex, r: complex, delta: float, gamma: float, steps: int = 4) -> tuple[complex, complex]:
    def F(qq, rr):
        dg = delta_gamma_from_qr(ParameterPoint.numeric(qq, rr), tol=0.0)
        return dg.delta - delta, dg.gamma - gamma

    for _ in range(steps):
        try:
            f1, f2 = F(q, r)
            h = 1e-7 * max(1.0, abs(q))
            a1, a2 = F(q + h, r)
            b1, b2 = F(q, r + h)
        except (PoleError, ZeroDivisionError):
            break
        j11, j21 = (a1 - f1) / h, (a2 - f2) / h
        j12, j22 = (b1 - f1) / h, (b2 - f2) / h
        det = j11 * j22 - j12 * j21
        if det == 0:
            break
        dq = (f1 * j22 - f2 * j12) / det
        dr = (j11 * f2 - j21 * f1) / det
        nq, nr = q - dq, r - dr
        try:
            g1, g2 = F(nq, nr)
        except (PoleError, ZeroDivisionError):
            break
        if abs(g1) + abs(g2) >= abs(f1) + abs(f2):
            break
        q, r = nq, nr
    return q, r


def qr_from_delta_gamma(delta: float, gamma: float, tol: float = DEFAULT_TOL,
                        polish: bool = True) -> list[QRSolution]:
    """All (q, r) with the given circle parameter and trace ratio (up to 8)."""
    if not delta > 0:
        raise ParameterError("qr_from_delta_gamma expects delta > 0")
    if gamma == -1:
        raise ParameterError("gamma = -1 has no (q, r)")
    if abs(gamma - classical_gamma(delta)) <= tol * max(1.0, gamma):
        return [QRSolution(1 + 0j, 1 + 0j, True, 0.0)]
    K = (delta ** 2 - 2) / delta * (gamma - 1) / (gamma + 1)
    den = delta ** 2 - K ** 2
    if abs(den) <= tol:
        raise ParameterError("degenerate: delta^2 equals the squared trace-ratio term")
    s2 = 4 * (K ** 2 - 1) / den  # (q - 1/q)^2, from K = (r + 1/r)/(q + 1/q)
    out: list[QRSolution] = []
    for s in (cmath.sqrt(s2), -cmath.sqrt(s2)):
        root = cmath.sqrt(s * s + 4)
        for q in ((s + root) / 2, (s - root) / 2):
            disc = cmath.sqrt((delta * s) ** 2 + 4)
            for r in ((delta * s + disc) / 2, (delta * s - disc) / 2):
                try:
                    dg = delta_gamma_from_qr(ParameterPoint.numeric(q, r), tol=0.0)
                except (PoleError, ZeroDivisionError):
                    continue
                matches = abs(dg.gamma - gamma) <= 1e-6 * max(1.0, abs(gamma))
                if polish and matches:
                    q, r = _newton_polish(q, r, delta, gamma)
                res = abs((r - 1 / r) - delta * (q - 1 / q))
                out.append(QRSolution(q, r, matches, res))
    return out


# -- symmetries ---------------------------------------------------------------------

# (q-map, r-map, transposes labels): sign and inversion of each variable
_GROUP = [
    ((1, 1), (1, 1), False),     # (q, r)
    ((-1, -1), (1, 1), True),    # (-1/q, r)
    ((-1, 1), (-1, 1), False),   # (-q, -r)
    ((1, -1), (1, -1), False),   # (1/q, 1/r)
    ((1, -1), (-1, 1), True),    # (1/q, -r)
    ((-1, 1), (1, -1), True),    # (-q, 1/r)
    ((-1, -1), (-1, -1), False),  # (-1/q, -1/r)
    ((1, 1), (-1, -1), True),    # (q, -1/r)
]


def _act(g, q: complex, r: complex) -> tuple[complex, complex]:
    (sq, eq), (sr, er), _ = g
    return sq * q ** eq, sr * r ** er


def symmetry_orbit(p: ParameterPoint) -> list[ParameterPoint]:
    """(q, r), (-1/q, r), (-q, -r), (1/q, 1/r)."""
    q, r = p.values()
    return [ParameterPoint.numeric(*_act(g, q, r), p.delta) for g in _GROUP[:4]]


def full_orbit(p: ParameterPoint) -> list[tuple[ParameterPoint, bool]]:
    """All eight images under the group generated by the orbit maps, with transpose flags."""
    q, r = p.values()
    return [(ParameterPoint.numeric(*_act(g, q, r), p.delta), g[2]) for g in _GROUP]


def same_point(a: ParameterPoint, b: ParameterPoint, tol: float = 1e-9) -> bool:
    (qa, ra), (qb, rb) = a.values(), b.values()
    return abs(qa - qb) <= tol * max(1, abs(qb)) and abs(ra - rb) <= tol * max(1, abs(rb))


def orbit_contains(orbit: Iterable[ParameterPoint], p: ParameterPoint, tol: float = 1e-9) -> bool:
    return any(same_point(x, p, tol) for x in orbit)


# -- traces at a point --------------------------------------------------------------

def _classical_trace(lam: YoungDiagram, delta: float) -> float:
    out = 1.0
    for _, _, c, h in lam.cells():
        out *= (delta + c) / h
    return out


def trace_value(lam: YoungDiagram, p: ParameterPoint, tol: float = DEFAULT_TOL) -> Optional[float]:
    """Real trace of m_λ at p, or None if the idempotent is ill-defined or the value is not real."""
    if p.mode == "exact_root_of_unity":
        try:
            return trace_at_specialization(lam, p.N, m=p.m).value
        except IllDefinedIdempotent:
            return None
    if p.mode == "exact_real" and p.N is not None and p.q0 > 1:
        return trace_at_specialization(lam, p.N, q0=float(p.q0)).value
    q, r = p.values()
    if abs(q - 1 / q) <= tol:
        if p.delta is None:
            return None
        return _classical_trace(lam, float(p.delta))  # (-q, -r) leaves traces unchanged
    try:
        v = trace_numeric(lam, q, r, tol=1e-12).value
    except PoleError:
        return None
    for _, _, _, h in lam.cells():
        if abs(q ** h - q ** -h) <= 1e-9:
            return None
    if abs(v.imag) > 1e-7 * max(1.0, abs(v)):
        return None
    return v.real


def _negative(v: Optional[float], tol: float) -> bool:
    return v is not None and v < -tol


def witness_search(p: ParameterPoint, max_cells: int = 12, tol: float = DEFAULT_TOL) -> Optional[YoungDiagram]:
    """First diagram (by cell count, then rows) with a well-defined negative trace at p."""
    for lam in all_diagrams(max_cells):
        if _negative(trace_value(lam, p, tol), tol):
            return lam
    return None


# -- positivity ---------------------------------------------------------------------

def _near_int(x: float, tol: float) -> Optional[int]:
    n = round(x)
    return n if abs(x - n) <= tol * max(1.0, abs(x)) else None


def _normalize(q: complex, r: complex, tol: float):
    """Pick an orbit member with q real >= 1 and r > 0, or q = e^{iθ}, 0 < θ <= π/2, Im r >= 0."""
    for g in _GROUP:
        qq, rr = _act(g, q, r)
        if abs(qq.imag) <= tol and qq.real >= 1 - tol and abs(rr.imag) <= tol and rr.real > 0:
            return "real", qq.real, rr.real, g[2]
        if abs(abs(qq) - 1) <= tol and abs(abs(rr) - 1) <= tol:
            th, al = cmath.phase(qq), cmath.phase(rr)
            if tol < th <= math.pi / 2 + tol and -tol <= al <= math.pi + tol:
                return "circle", th, max(al, 0.0), g[2]
    return None


def _checked(candidates: list[YoungDiagram], transpose: bool, p: ParameterPoint, tol: float, reason: str):
    for lam in candidates:
        w = lam.transpose() if transpose else lam
        v = trace_value(w, p, tol)
        if _negative(v, tol):
            return Verdict("Negative", witness=w, value=v, reason=reason)
    w = witness_search(p, tol=tol)
    if w is not None:
        return Verdict("Negative", witness=w, value=trace_value(w, p, tol), reason=reason + "; witness from scan")
    return None


def positivity(p: ParameterPoint, tol: float = 1e-9, n_cap: int = N_CAP) -> Verdict:
    if p.mode == "exact_root_of_unity":
        return Verdict("PositiveRootOfUnity", N=p.N, l=p.m - p.N,
                       reason="r = q^N with q = exp(i pi/(N+l))")
    if p.mode == "exact_real":
        return _positivity_exact_real(p, tol, n_cap)
    return _positivity_numeric(p, tol, n_cap)


def _positivity_exact_real(p: ParameterPoint, tol: float, n_cap: int) -> Verdict:
    q0 = p.q0
    if q0 == 1:
        return _case_q_one(p, tol)
    if q0 < 1:
        p = ParameterPoint.exact_real(1 / q0, N=p.N, r0=(1 / p.r0 if p.r0 is not None else None))
        q0 = p.q0
    if p.N is not None:
        return Verdict("PositiveReal", N=p.N, reason="r = q^N with q >= 1")
    for n in range(1, n_cap + 1):
        if q0 ** n == p.r0:
            return Verdict("PositiveReal", N=n, reason="r = q^N with q >= 1")
    return _positivity_numeric(p.as_numeric(), tol, n_cap)


def _case_q_one(p: ParameterPoint, tol: float) -> Verdict:
    if p.delta is None:
        raise ParameterError("q = 1 requires the circle parameter delta")
    d = float(p.delta)
    n = _near_int(d, tol)
    if n is not None and n >= 1:
        return Verdict("PositiveReal", N=n, reason="q = r = 1 with integer delta")
    if d <= 2:
        return Verdict("Indeterminate", reason=E6_REASON)
    lam = YoungDiagram.column(math.floor(d) + 2)
    v = _classical_trace(lam, d)
    if v < -tol:
        return Verdict("Negative", witness=lam, value=v, reason="q = 1, non-integer delta")
    return Verdict("Indeterminate", reason="q = 1: no witness")


def _positivity_numeric(p: ParameterPoint, tol: float, n_cap: int) -> Verdict:
    q, r = p.values()
    if abs(q - 1 / q) <= tol:
        if q.real < 0:
            p = ParameterPoint.numeric(-q, -r, p.delta)
        return _case_q_one(p, tol)
    delta = (r - 1 / r) / (q - 1 / q)
    norm = _normalize(q, r, 1e-9)
    if norm is None:
        return Verdict("Indeterminate", reason="point is neither on the real (q >= 1) nor the unit-circle regime")
    regime, x, y, transpose = norm
    if regime == "real":
        qq, rr = x, y
        exponent = math.log(rr) / math.log(qq)
        n = _near_int(exponent, tol)
        if n is not None and 1 <= n <= n_cap:
            return Verdict("PositiveReal", N=n, reason="r = q^N with q >= 1")
    else:
        th, al = x, y
        n = _near_int(al / th, tol)
        m = _near_int(math.pi / th, tol)
        if n is not None and m is not None and 1 <= n < m and n <= n_cap:
            return Verdict("PositiveRootOfUnity", N=n, l=m - n, reason="r = q^N with q = exp(i pi/(N+l))")
    if abs(delta.imag) > 1e-7 * max(1.0, abs(delta)):
        return Verdict("Indeterminate", reason="circle parameter is not real")
    if delta.real <= 2 + tol:
        # a negative-trace idempotent rules out positivity at any index; otherwise defer to the citation
        w = witness_search(p, tol=tol)
        if w is not None:
            return Verdict("Negative", witness=w, value=trace_value(w, p, tol),
                           reason="delta <= 2; witness from scan")
        return Verdict("Indeterminate", reason=E6_REASON)
    if regime == "real":
        N = math.floor(exponent)
        if N > n_cap:
            return Verdict("Indeterminate", reason=f"exponent log r/log q exceeds the cap {n_cap}")
        found = _checked([YoungDiagram.column(N + 2), YoungDiagram.row(N + 2)], transpose, p, tol,
                         f"q > 1 with q^{N} < r < q^{N + 1}")
    else:
        if not (th + tol < al < math.pi - th - tol):
            return Verdict("Indeterminate", reason="arg r outside the band theta < alpha < pi - theta")
        ratio = al / th
        N = math.floor(ratio)
        if _near_int(ratio, tol) is None:
            found = _checked([YoungDiagram.column(N + 2), YoungDiagram.row(N + 2)], transpose, p, tol,
                             f"unit circle with {N} theta < alpha < {N + 1} theta")
        else:
            N = round(ratio)
            l = math.floor(math.pi / th) - N
            found = _checked([YoungDiagram.row(l + 2), YoungDiagram.column(l + 1)], transpose, p, tol,
                             f"alpha = {N} theta with pi/(N+l+1) < theta < pi/(N+l), l = {l}")
    if found is not None:
        return found
    return Verdict("Indeterminate", reason="no negativity witness found up to 12 cells")


def positivity_from_delta_gamma(delta: float, gamma: float, tol: float = 1e-9) -> Verdict:
    if delta <= 2:
        return Verdict("Indeterminate", reason=E6_REASON)
    sols = [s for s in qr_from_delta_gamma(delta, gamma) if s.gamma_matches]
    if not sols:
        return Verdict("Indeterminate", reason="no (q, r) reproduces gamma")
    best = sols[0]
    if best.q == 1 and best.r == 1:
        return positivity(ParameterPoint.numeric(1, 1, delta), tol)
    return positivity(best.point(), tol)


# -- scans --------------------------------------------------------------------------

SCAN_COLUMNS = ("q_re", "q_im", "r_re", "r_im", "delta", "gamma", "verdict", "witness", "trace_value")


@dataclass(frozen=True)
class ScanRow:
    q: complex
    r: complex
    delta: Optional[complex]
    gamma: Optional[complex]
    verdict: Verdict

    def as_dict(self) -> dict:
        def real(z):
            if z is None:
                return None
            return z.real if abs(z.imag) <= 1e-9 * max(1, abs(z)) else None
        return {"q_re": self.q.real, "q_im": self.q.imag, "r_re": self.r.real, "r_im": self.r.imag,
                "delta": real(self.delta), "gamma": real(self.gamma),
                "verdict": self.verdict.kind,
                "witness": self.verdict.witness.to_text() if self.verdict.witness else "",
                "trace_value": self.verdict.value}


def scan_point(qr: tuple[complex, complex]) -> ScanRow:
    q, r = qr
    p = ParameterPoint.numeric(q, r)
    try:
        dg = delta_gamma_from_qr(p)
        d, g = dg.delta, dg.gamma
    except (PoleError, ZeroDivisionError):
        g = None
        d = (r - 1 / r) / (q - 1 / q) if abs(q - 1 / q) > DEFAULT_TOL else None
    try:
        v = positivity(p)
    except (ParameterError, PoleError, ZeroDivisionError) as exc:
        v = Verdict("Indeterminate", reason=str(exc))
    return ScanRow(q, r, d, g, v)


def scan(points: list[tuple[complex, complex]], workers: Optional[int] = None) -> list[ScanRow]:
    """Evaluate every point; output order follows input order."""
    if workers == 1 or len(points) < 16:
        return [scan_point(x) for x in points]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(scan_point, points, chunksize=8))
