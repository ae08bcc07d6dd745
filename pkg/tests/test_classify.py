from __future__ import annotations

import cmath
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from skeinkit.classify import (E6_REASON, SCAN_COLUMNS, ParameterError, ParameterPoint, classical_gamma,
                               delta_gamma_from_qr, full_orbit, orbit_contains, positivity,
                               positivity_from_delta_gamma, qr_from_delta_gamma, same_point, scan,
                               symmetry_orbit, trace_value, witness_search)
from skeinkit.coeffring import PoleError, evaluate
from skeinkit.linkinv import BraidWord, closure_value, mirror
from skeinkit.young import YoungDiagram

P = ParameterPoint.numeric
Y = YoungDiagram.parse


def _random_point(rng: random.Random) -> ParameterPoint:
    """A point in the real (q > 1) or unit-circle regime, away from r = q^N."""
    if rng.random() < 0.5:
        q = rng.uniform(1.05, 2.0)
        e = rng.uniform(1.0, 5.0)
        if abs(e - round(e)) < 1e-3:
            e += 0.01
        return P(q, q ** e)
    m = rng.uniform(6, 14)
    th = math.pi / m
    al = rng.uniform(th * 1.01, math.pi - th * 1.01)
    return P(cmath.exp(1j * th), cmath.exp(1j * al))


# -- point types ------------------------------------------------------------------

def test_point_validation():
    with pytest.raises(ParameterError):
        ParameterPoint.root_of_unity(3, 3)
    with pytest.raises(ParameterError):
        P(0, 1)
    with pytest.raises(ParameterError):
        ParameterPoint("polar")
    with pytest.raises(ParameterError):
        ParameterPoint.exact_real(2)


def test_point_values():
    q, r = ParameterPoint.root_of_unity(3, 6).values()
    assert abs(q - cmath.exp(1j * math.pi / 6)) < 1e-15 and abs(r - q ** 3) < 1e-12
    q, r = ParameterPoint.exact_real("6/5", N=3).values()
    assert q == 1.2 and abs(r - 1.728) < 1e-12


# -- (δ, γ) -----------------------------------------------------------------------

def test_delta_gamma_at_real_positive_point():
    dg = delta_gamma_from_qr(P(1.2, 1.2 ** 3))
    # δ = [3]_q at r = q^3
    assert abs(dg.delta - (1.2 ** 2 + 1 + 1.2 ** -2)) < 1e-12
    assert abs(dg.delta - 3.1344444444444446) < 1e-12
    assert dg.gamma.real > 0 and abs(dg.gamma.imag) < 1e-12


def test_delta_gamma_classical_limit():
    d = 3.5
    for eps in (1e-3, 1e-4):
        q = 1 + eps
        s = d * (q - 1 / q)
        r = (s + math.sqrt(s * s + 4)) / 2
        g = delta_gamma_from_qr(P(q, r)).gamma.real
        # the ratio is compared as unordered
        assert min(abs(g - classical_gamma(d)), abs(1 / g - classical_gamma(d))) < 10 * eps


def test_delta_gamma_pole_without_delta():
    with pytest.raises(PoleError):
        delta_gamma_from_qr(P(1, 2))
    dg = delta_gamma_from_qr(P(1, 1, delta=3.0))
    assert dg.delta == 3 and dg.gamma == classical_gamma(3.0)


def test_delta_invariant_under_inversion():
    a = delta_gamma_from_qr(P(1.2, 1.9)).delta
    b = delta_gamma_from_qr(P(1 / 1.2, 1 / 1.9)).delta
    assert abs(a - b) < 1e-12


def test_classical_gamma_gives_unit_point():
    sols = qr_from_delta_gamma(3.0, classical_gamma(3.0))
    assert any(abs(s.q - 1) < 1e-12 and abs(s.r - 1) < 1e-12 for s in sols)


def test_qr_roundtrip_example():
    p = P(1.3, 1.3 ** 3)
    dg = delta_gamma_from_qr(p)
    delta, gamma = dg.real_pair()
    sols = qr_from_delta_gamma(delta, gamma)
    assert len(sols) == 8
    assert any(orbit_contains([x for x, _ in full_orbit(s.point())], p, 1e-9) for s in sols if s.gamma_matches)
    for s in sols:
        assert s.eq_residual < 1e-9


def test_qr_preconditions():
    with pytest.raises(ParameterError):
        qr_from_delta_gamma(-1.0, 2.0)
    with pytest.raises(ParameterError):
        qr_from_delta_gamma(3.0, -1.0)


def test_inversion_all_candidates_in_orbit():
    # the eight candidates split into the γ and 1/γ labelings; together they fill the orbit
    p = P(1.4, 1.4 ** 2.5)
    delta, gamma = delta_gamma_from_qr(p).real_pair()
    sols = qr_from_delta_gamma(delta, gamma)
    orbit = [x for x, _ in full_orbit(p)]
    assert sum(s.gamma_matches for s in sols) == 4
    assert all(orbit_contains(orbit, s.point(), 1e-8) for s in sols)


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_qr_roundtrip_property(seed):
    rng = random.Random(seed)
    q = rng.uniform(1.01, 2.0)
    r = q ** rng.uniform(1.01, 4.99)
    p = P(q, r)
    delta, gamma = delta_gamma_from_qr(p).real_pair()
    sols = [s.point() for s in qr_from_delta_gamma(delta, gamma) if s.gamma_matches]
    assert any(orbit_contains(symmetry_orbit(s), p, 1e-9) for s in sols)


# -- orbit ------------------------------------------------------------------------

def test_orbit_example():
    orb = symmetry_orbit(P(1.2, 1.9))
    assert len(orb) == 4
    assert orbit_contains(orb, P(1 / 1.2, 1 / 1.9))
    assert orbit_contains(orb, P(-1 / 1.2, 1.9)) and orbit_contains(orb, P(-1.2, -1.9))


def test_orbit_of_member_is_same_set():
    p = P(1.2, 1.9)
    full = [x for x, _ in full_orbit(p)]
    for member in full:
        other = [x for x, _ in full_orbit(member)]
        assert all(orbit_contains(other, x) for x in full)
    # the four listed maps are closed under composition only up to the full eight-element group
    assert not all(orbit_contains(symmetry_orbit(p), x) for x in symmetry_orbit(symmetry_orbit(p)[1]))


def test_trefoil_mirror_under_inversion():
    tref = BraidWord.parse(2, "1 1 1")
    a = evaluate(closure_value(tref).value, 1 / 1.2, 1 / 1.9).value
    b = evaluate(closure_value(mirror(tref)).value, 1.2, 1.9).value
    assert abs(a - b) < 1e-9 * abs(a)


# -- positivity -------------------------------------------------------------------

def test_root_of_unity_positive():
    v = positivity(ParameterPoint.root_of_unity(3, 6))
    assert (v.kind, v.N, v.l) == ("PositiveRootOfUnity", 3, 3)
    v = positivity(ParameterPoint.root_of_unity(3, 6).as_numeric())
    assert (v.kind, v.N, v.l) == ("PositiveRootOfUnity", 3, 3)


def test_real_positive():
    for p in (P(1.2, 1.2 ** 3), ParameterPoint.exact_real("6/5", N=3), ParameterPoint.exact_real("6/5", r0="216/125")):
        v = positivity(p)
        assert (v.kind, v.N) == ("PositiveReal", 3)
    assert positivity(ParameterPoint.exact_real("5/6", r0="125/216")).N == 3


def test_real_negative_reference_point():
    v = positivity(P(1.2, 1.9))
    assert v.kind == "Negative"
    assert v.witness.rows in ((5,), (1, 1, 1, 1, 1))  # the [N+2] shape up to transposition
    assert v.value < 0 and trace_value(v.witness, P(1.2, 1.9)) < 0
    # with content convention [r q^c], the row has only positive factors
    assert trace_value(Y("5"), P(1.2, 1.9)) > 0


def test_q_one():
    assert positivity(P(1, 1, delta=4.0)).kind == "PositiveReal"
    v = positivity(P(1, 1, delta=3.5))
    assert v.kind == "Negative" and v.witness == YoungDiagram.column(5)
    assert positivity(P(-1, -1, delta=4.0)).N == 4
    with pytest.raises(ParameterError):
        positivity(P(1, 1))


def test_indeterminate_paths():
    assert "E_6^{(1)}" in E6_REASON
    v = positivity(P(1.2 + 0.3j, 1.9))
    assert v.kind == "Indeterminate"
    # inputs given through delta alone are refused below index 4
    v = positivity_from_delta_gamma(1.5, 2.0)
    assert v.kind == "Indeterminate" and v.reason == E6_REASON
    v = positivity(P(1, 1, delta=1.5))
    assert v.kind == "Indeterminate" and v.reason == E6_REASON


def test_low_index_points_with_witness():
    # a point with delta < 2 still gets Negative when a negative-trace idempotent exists
    p = P(1.1, 1.1 ** 1.2)
    assert delta_gamma_from_qr(p).delta.real < 2
    v = positivity(p)
    assert v.kind == "Negative" and "delta <= 2" in v.reason and trace_value(v.witness, p) < 0
    # outside the band θ < α < π - θ the circle parameter sin α / sin θ is below 1
    th = math.pi / 8
    p = P(cmath.exp(1j * th), cmath.exp(1j * (math.pi - th / 2)))
    assert delta_gamma_from_qr(p).delta.real < 1
    assert positivity(p).kind in ("Negative", "Indeterminate")
    # perturbing r at (N, l) = (3, 3), where delta = 2 exactly
    q = cmath.exp(1j * math.pi / 6)
    for eps in (1e-3, -1e-3):
        p = P(q, cmath.exp(1j * math.pi / 2 * (1 + eps)))
        v = positivity(p)
        assert v.kind == "Negative" and trace_value(v.witness, p) < 0


def test_circle_subcases():
    th = math.pi / 9.5  # strictly between π/10 and π/9
    v = positivity(P(cmath.exp(1j * th), cmath.exp(3j * th)))
    assert v.kind == "Negative" and trace_value(v.witness, P(cmath.exp(1j * th), cmath.exp(3j * th))) < 0
    v = positivity(P(cmath.exp(1j * th), cmath.exp(3.5j * th)))
    assert v.kind == "Negative"


def test_from_delta_gamma():
    p = P(1.2, 1.9)
    delta, gamma = delta_gamma_from_qr(p).real_pair()
    assert positivity_from_delta_gamma(delta, gamma).kind == "Negative"
    delta, gamma = delta_gamma_from_qr(P(1.2, 1.2 ** 3)).real_pair()
    v = positivity_from_delta_gamma(delta, gamma)
    assert (v.kind, v.N) == ("PositiveReal", 3)
    assert positivity_from_delta_gamma(4.0, classical_gamma(4.0)).N == 4


def test_witness_search_examples():
    w = witness_search(P(1.2, 1.9), max_cells=6)
    assert w is not None and w.size == 5
    assert witness_search(ParameterPoint.root_of_unity(3, 6), max_cells=12) is None


def test_no_witness_at_roots_of_unity():
    for m in range(2, 13):
        for N in range(1, m):
            p = ParameterPoint.root_of_unity(N, m)
            assert positivity(p).positive
            assert witness_search(p, max_cells=10) is None


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_orbit_constancy(seed):
    p = _random_point(random.Random(seed))
    kinds = {positivity(x).kind for x in symmetry_orbit(p)}
    assert len(kinds) == 1


@settings(max_examples=50)
@given(st.integers(0, 10 ** 6))
def test_witness_agreement(seed):
    p = _random_point(random.Random(seed))
    v = positivity(p)
    w = witness_search(p)
    if v.kind == "Negative":
        assert w is not None and trace_value(w, p) < 0
    elif v.positive:
        assert w is None


@settings(max_examples=60)
@given(st.integers(0, 10 ** 6))
def test_negative_witness_reevaluates(seed):
    p = _random_point(random.Random(seed))
    v = positivity(p, tol=1e-9)
    if v.kind == "Negative":
        assert trace_value(v.witness, p) < -1e-9


def test_same_point_tolerance():
    assert same_point(P(1.2, 1.9), P(1.2 + 1e-12, 1.9))
    assert not same_point(P(1.2, 1.9), P(1.2 + 1e-6, 1.9))


# -- scan -------------------------------------------------------------------------

def test_scan_rows_and_order():
    pts = [(complex(1.2), complex(1.2 ** k)) for k in (1.5, 2, 2.5, 3, 3.5)] * 4
    rows = scan(pts, workers=2)
    assert [(x.q, x.r) for x in rows] == pts
    assert rows == scan(pts, workers=1)
    d = rows[1].as_dict()
    assert tuple(d) == SCAN_COLUMNS
    assert d["verdict"] == "PositiveReal" and d["witness"] == ""


def test_scan_keeps_delta_when_gamma_undefined():
    q = cmath.exp(0.05j * math.pi)
    row = scan([(q, q * q)])[0].as_dict()
    assert row["gamma"] is None and abs(row["delta"] - (q + 1 / q).real) < 1e-12
    assert row["verdict"] == "PositiveRootOfUnity"
