from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from ecbound.errors import MissingTrace, NotMinimal, NotMultiplicative, SingularCurve
from ecbound.numth import legendre_symbol, ord_p
from ecbound.reduction import (LocalReductionData, ReductionType, SplitKind, local_data_all,
                               nonsingular_count, split_type, tate_local_data)
from ecbound.weierstrass import (CoordinateChange, WeierstrassCurve, is_minimal_at,
                                 minimal_model, transform_curve)

E389 = WeierstrassCurve(0, 1, 1, -2, 0)
SPLIT = ReductionType.SPLIT_MULTIPLICATIVE
NONSPLIT = ReductionType.NONSPLIT_MULTIPLICATIVE
ADDITIVE = ReductionType.ADDITIVE


def test_389a1_at_389():
    d = tate_local_data(E389, 389)
    assert d.type.is_multiplicative
    assert (d.kodaira, d.tamagawa, d.ord_delta) == ("I1", 1, 1)


def test_389a1_split_two_ways():
    # split_type works from the tangent cone; -c6 being a square mod 389 is
    # the independent route valid for l >= 5
    assert split_type(E389, 389) is SplitKind.SPLIT
    assert legendre_symbol(-E389.invariants.c6, 389) == 1
    assert tate_local_data(E389, 389).type is SPLIT


def test_389a1_good_at_2():
    d = tate_local_data(E389, 2)
    assert d.type is ReductionType.GOOD and d.kodaira == "I0"


def test_type_ii_example():
    d = tate_local_data(WeierstrassCurve(0, 0, 0, 0, 5), 5)
    assert (d.type, d.kodaira, d.tamagawa, d.ord_delta) == (ADDITIVE, "II", 1, 2)


@pytest.mark.parametrize("l", [5, 7, 11, 13, 101])
def test_split_example(l):
    # y^2 = x^3 + x^2 - l reduces to y^2 = x^2 (x + 1)
    assert split_type(WeierstrassCurve(0, 1, 0, 0, -l), l) is SplitKind.SPLIT


def test_nonsplit_example():
    # tangent cone t^2 = -1 has no root mod 7
    assert split_type(WeierstrassCurve(0, -1, 0, 0, 7), 7) is SplitKind.NONSPLIT


def test_split_type_rejects_good():
    with pytest.raises(NotMultiplicative):
        split_type(E389, 2)


def test_not_minimal_detected():
    big = transform_curve(E389, CoordinateChange(Fraction(1, 5)))
    with pytest.raises(NotMinimal):
        tate_local_data(big, 5)


@given(st.lists(st.integers(-30, 30), min_size=5, max_size=5),
       st.sampled_from([2, 3, 5, 7]))
def test_not_minimal_iff_minimal_model_moves(a, l):
    try:
        E = WeierstrassCurve(*a)
    except SingularCurve:
        assume(False)
    big = transform_curve(E, CoordinateChange(Fraction(1, l)))
    assert not is_minimal_at(big, l)
    with pytest.raises(NotMinimal):
        tate_local_data(big, l)


def test_nonsingular_counts():
    add = LocalReductionData(7, ADDITIVE, "II", 1, 2)
    assert nonsingular_count(add) == 7
    assert nonsingular_count(LocalReductionData(11, SPLIT, "I3", 3, 3)) == 10
    assert nonsingular_count(LocalReductionData(11, NONSPLIT, "I3", 1, 3)) == 12
    good = LocalReductionData(5, ReductionType.GOOD, "I0", 1, 0)
    assert nonsingular_count(good, -3) == 9
    with pytest.raises(MissingTrace):
        nonsingular_count(good)


def test_report_line():
    assert tate_local_data(E389, 389).report_line() == \
        "l=389 type=split-mult kodaira=I1 c=1 ordDelta=1"


def test_reference_local_data(local_fixtures):
    """Every row of the reference table."""
    seen = set()
    for row in local_fixtures:
        E = WeierstrassCurve(*row["a"])
        for ref in row["local"]:
            d = tate_local_data(E, ref["l"])
            got = (d.type.value, d.kodaira, d.tamagawa, d.ord_delta)
            want = (ref["type"], ref["kodaira"], ref["c"], ref["ord_delta"])
            assert got == want, (row["label"], ref["l"])
            seen.add(d.kodaira if d.kodaira in ("I0*", "II", "III", "IV", "II*", "III*", "IV*")
                     else ("In*" if d.kodaira.endswith("*") else "In"))
    # every Kodaira family turns up in the reference set
    assert seen == {"In", "In*", "I0*", "II", "III", "IV", "II*", "III*", "IV*"}


def test_trichotomy(local_fixtures):
    for row in local_fixtures[:400]:
        E = WeierstrassCurve(*row["a"])
        c4 = E.invariants.c4
        for d in local_data_all(E):
            mult = c4 % d.prime != 0
            assert d.type.is_multiplicative == mult
            assert (d.type is ADDITIVE) == (not mult)
            assert d.ord_delta == ord_p(E.disc, d.prime)


def test_conductor_exponent_consistency(local_fixtures):
    # conductor exponent is 1 exactly at multiplicative primes
    for row in local_fixtures:
        for ref in row["local"]:
            if ref["type"] == "additive":
                assert ref["f"] >= 2
            else:
                assert ref["f"] == 1


def test_structural_constraints(local_fixtures):
    for row in local_fixtures:
        for ref in row["local"]:
            if ref["type"] == "split-mult":
                assert ref["c"] == ref["ord_delta"]
            elif ref["type"] == "nonsplit-mult":
                assert ref["c"] == (2 if ref["ord_delta"] % 2 == 0 else 1)
            else:
                assert 1 <= ref["c"] <= 4


@given(st.lists(st.integers(-200, 200), min_size=5, max_size=5))
def test_random_minimal_models_run(a):
    try:
        E = WeierstrassCurve(*a)
    except SingularCurve:
        assume(False)
    Emin, _ = minimal_model(E)
    for d in local_data_all(Emin):
        assert d.ord_delta == ord_p(Emin.disc, d.prime)
