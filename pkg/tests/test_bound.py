import json

import pytest
from hypothesis import given, strategies as st

from ecbound.bound import (JSON_SAFE, BoundConfig, BoundInput, bound_exponent, full_report,
                           nu_l, nu_table)
from ecbound.errors import IncompleteLocalData, SamePrime
from ecbound.reduction import LocalReductionData, ReductionType, local_data_all
from ecbound.weierstrass import WeierstrassCurve

E389 = WeierstrassCurve(0, 1, 1, -2, 0)
SPLIT = ReductionType.SPLIT_MULTIPLICATIVE
NONSPLIT = ReductionType.NONSPLIT_MULTIPLICATIVE
ADDITIVE = ReductionType.ADDITIVE


def test_nu_split_examples():
    d = LocalReductionData(11, SPLIT, "I25", 25, 25)
    assert nu_l(d, 5, 1) == 1
    assert nu_l(d, 5, 2) == 2
    assert nu_l(d, 5, 3) == 2
    assert nu_l(d, 7, 3) == 0


def test_nu_additive_c3_at_p3():
    d = LocalReductionData(7, ADDITIVE, "IV", 3, 4)
    assert nu_l(d, 3, 2) == 2
    assert nu_l(d, 5, 2) == 0
    assert nu_l(LocalReductionData(7, ADDITIVE, "IV", 1, 4), 3, 2) == 0


def test_nu_zero_elsewhere():
    assert nu_l(LocalReductionData(7, NONSPLIT, "I5", 1, 5), 5, 4) == 0
    assert nu_l(LocalReductionData(7, ADDITIVE, "I0*", 4, 6), 5, 4) == 0


def test_nu_same_prime():
    with pytest.raises(SamePrime):
        nu_l(LocalReductionData(5, SPLIT, "I5", 5, 5), 5, 1)


@pytest.mark.parametrize("n,want", [(1, 2), (2, 4), (3, 6)])
def test_389a1_bound(n, want):
    inp = BoundInput(E389, 5, n, 2)
    assert bound_exponent(inp, local_data_all(E389)) == want


def test_389a1_p389_excluded_from_sum():
    # l = p is dropped from the nu sum
    inp = BoundInput(E389, 389, 2, 2)
    assert nu_table(local_data_all(E389), 389, 2) == {}
    assert bound_exponent(inp, local_data_all(E389)) == 4


def test_incomplete_local_data():
    E = WeierstrassCurve(0, 1, 0, -24, 52)
    local = local_data_all(E)[1:]
    with pytest.raises(IncompleteLocalData):
        bound_exponent(BoundInput(E, 5, 1, 2), local)


@given(st.integers(1, 30), st.integers(0, 5), st.sampled_from([5, 7, 11, 13]))
def test_bound_monotone_in_n_when_rank_positive(n, r, p):
    E = WeierstrassCurve(0, 1, 0, -24, 52)
    local = local_data_all(E)
    a = bound_exponent(BoundInput(E, p, n, r), local)
    b = bound_exponent(BoundInput(E, p, n + 1, r), local)
    if r >= 2:
        # nu_l grows by at most 1 per level, so each step adds >= 2(r-1) - 2k
        assert b - a >= 2 * (r - 1) - 2 * len(local)
    assert b - a <= 2 * (r - 1)


def test_input_validation():
    with pytest.raises(ValueError):
        BoundInput(E389, 9, 1, 2)
    with pytest.raises(ValueError):
        BoundInput(E389, 5, 0, 2)
    with pytest.raises(ValueError):
        BoundInput(E389, 5, 1, -1)


def test_full_report_389a1_certified():
    rep = full_report(BoundInput(E389, 5, 3, 2))
    assert rep.certified
    assert rep.exponent_bound == 6 == rep.bound_clamped
    assert rep.full_status.proven
    assert rep.red_l == {389: True}
    assert rep.red_p is False and rep.disc is False
    text = rep.render()
    assert "certified" in text and "warning" not in text


def test_report_json_fields():
    rep = full_report(BoundInput(E389, 5, 2, 2))
    d = json.loads(json.dumps(rep.as_json()))
    assert d["curve"] == "[0,1,1,-2,0]"
    assert d["conditions"] == {"full": "proven", "tor": "holds", "red_l": True,
                               "red_p": False, "disc": False}
    assert d["nu"] == {"389": 0}
    assert d["bound_raw"] == 4 and d["certified"] is True


def test_big_ints_are_strings():
    rep = full_report(BoundInput(E389, 5, 2**60, 2))
    d = rep.as_json()
    assert d["n"] == str(2**60)
    assert d["bound_raw"] == str(2 * 2**60)
    assert isinstance(d["p"], int)
    assert 2**60 > JSON_SAFE


def test_negative_bound_clamped():
    rep = full_report(BoundInput(E389, 5, 2, 0))
    assert rep.exponent_bound == -4 and rep.bound_clamped == 0


def test_p2_refused():
    rep = full_report(BoundInput(WeierstrassCurve(1, 0, 1, 4, -6), 2, 1, 0))
    assert not rep.certified
    assert any("p = 2" in w for w in rep.notes)


def test_p3_never_certified():
    rep = full_report(BoundInput(E389, 3, 1, 2))
    assert rep.full_status is None and not rep.certified
    assert rep.full_text() == "not-evaluated"


def test_tor_failure_blocks_certificate():
    rep = full_report(BoundInput(WeierstrassCurve(0, 1, 0, -24, 52), 11, 1, 2))
    assert rep.tor_status.status.value == "fails"
    assert not rep.certified
    assert "bound shown but not certified" in rep.notes


def test_non_minimal_input_is_minimised():
    big = WeierstrassCurve(0, 0, 0, 0, 64)
    rep = full_report(BoundInput(big, 5, 1, 0), BoundConfig(sample_bound=50))
    assert rep.input.curve == WeierstrassCurve(0, 0, 0, 0, 1)
