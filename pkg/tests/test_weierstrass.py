from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st
from sympy import factorint

from ecbound.errors import NonIntegralResult, SingularCurve
from ecbound.weierstrass import (CoordinateChange, WeierstrassCurve, compute_invariants,
                                 is_minimal_at, minimal_model, transform_curve)

E389 = WeierstrassCurve(0, 1, 1, -2, 0)

coef = st.integers(-50, 50)
curves = st.lists(coef, min_size=5, max_size=5)


def _curve(a):
    try:
        return WeierstrassCurve(*a)
    except SingularCurve:
        assume(False)


def test_389a1_discriminant():
    assert compute_invariants(E389).disc == 389


def test_congruent_curve_invariants():
    inv = compute_invariants(WeierstrassCurve(0, 0, 0, -1, 0))
    assert (inv.b2, inv.b4, inv.b6, inv.b8) == (0, -2, 0, -1)
    assert inv.disc == 64 and inv.c4 == 48 and inv.j == 1728


def test_singular_rejected():
    with pytest.raises(SingularCurve):
        WeierstrassCurve(0, 0, 0, 0, 0)
    with pytest.raises(SingularCurve):
        WeierstrassCurve(0, 1, 0, 0, 0)


def test_display_format():
    assert str(E389) == "[0,1,1,-2,0]"


@given(curves)
def test_invariant_identities(a):
    E = _curve(a)
    inv = compute_invariants(E)
    assert 1728 * inv.disc == inv.c4**3 - inv.c6**2
    assert 4 * inv.b8 == inv.b2 * inv.b6 - inv.b4**2


def test_identity_transform():
    assert transform_curve(E389, CoordinateChange.identity()) == E389


def test_scaling_by_half():
    E = WeierstrassCurve(0, 0, 0, -1, 0)
    F = transform_curve(E, CoordinateChange(Fraction(1, 2)))
    assert F.disc == 262144 == 2**12 * E.disc


def test_non_integral_rejected():
    with pytest.raises(NonIntegralResult):
        transform_curve(E389, CoordinateChange(2))


@given(curves, st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5),
       st.sampled_from([Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(1, 3)]))
def test_transform_scales_invariants(a, r, s, t, u):
    E = _curve(a)
    phi = CoordinateChange(u, r, s, t)
    F = transform_curve(E, phi)
    assert F.disc == E.disc / u**12
    assert F.invariants.c4 == E.invariants.c4 / u**4
    assert F.j == E.j
    back = transform_curve(F, phi.inverse())
    assert back == E


@given(curves, st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5),
       st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_composition(a, r1, s1, t1, r2, s2, t2):
    E = _curve(a)
    f = CoordinateChange(1, r1, s1, t1)
    g = CoordinateChange(1, r2, s2, t2)
    assert transform_curve(transform_curve(E, f), g) == transform_curve(E, f.compose(g))


def test_389a1_already_minimal():
    Emin, phi = minimal_model(E389)
    assert Emin == E389


def test_round_trip_scaling_recovers_389a1():
    big = transform_curve(E389, CoordinateChange(Fraction(1, 3), 5, -2, 7))
    assert big.disc == 3**12 * 389
    Emin, phi = minimal_model(big)
    assert Emin == E389
    assert transform_curve(big, phi) == Emin


def test_x3_plus_64():
    Emin, _ = minimal_model(WeierstrassCurve(0, 0, 0, 0, 64))
    assert Emin == WeierstrassCurve(0, 0, 0, 0, 1)


def test_minimal_models_against_reference(minimal_fixtures):
    for row in minimal_fixtures:
        Emin, phi = minimal_model(WeierstrassCurve(*row["a"]))
        assert list(Emin.ainvs) == row["minimal"], row["label"]


def test_reference_curves_are_minimal(local_fixtures):
    for row in local_fixtures:
        E = WeierstrassCurve(*row["a"])
        assert minimal_model(E)[0] == E, row["label"]


@given(curves)
def test_minimal_model_idempotent_and_12th_power(a):
    E = _curve(a)
    Emin, phi = minimal_model(E)
    assert minimal_model(Emin)[0] == Emin
    q = Fraction(E.disc, Emin.disc)
    assert q.denominator == 1
    for l, e in factorint(q.numerator).items():
        assert e % 12 == 0
    for l in Emin.bad_primes():
        assert is_minimal_at(Emin, l)
