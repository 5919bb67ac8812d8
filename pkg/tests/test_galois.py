import pytest
from hypothesis import given, strategies as st

from ecbound.errors import SmallPrime
from ecbound.galois import (ImageEvidence, Surjectivity, exceptional_flag, nonsplit_flag,
                            prove_surjective, split_flag)
from ecbound.numth import legendre_symbol
from ecbound.weierstrass import WeierstrassCurve

E389 = WeierstrassCurve(0, 1, 1, -2, 0)
E11a1 = WeierstrassCurve(0, -1, 1, -10, -20)


def test_389a1_p7():
    v = prove_surjective(E389, 7, 1000)
    assert v.status is Surjectivity.PROVEN
    assert v.evidence.recheck()


def test_cm_curve_never_proven():
    v = prove_surjective(WeierstrassCurve(0, 0, 0, 0, 1), 7, 10**4)
    assert v.status is Surjectivity.INCONCLUSIVE and v.bound_reached


@pytest.mark.slow
def test_11a1_p5_inconclusive_large_sample():
    # rational 5-isogeny: the image is reducible
    v = prove_surjective(E11a1, 5, 10**4)
    assert v.status is Surjectivity.INCONCLUSIVE


def test_11a1_p5_inconclusive():
    assert prove_surjective(E11a1, 5, 1000).status is Surjectivity.INCONCLUSIVE


@pytest.mark.parametrize("a", [[0, 0, 0, -1, 0], [0, 0, 0, 3, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, -2]])
@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_j0_j1728_inconclusive(a, p):
    E = WeierstrassCurve(*a)
    assert E.j in (0, 1728)
    assert prove_surjective(E, p, 500).status is Surjectivity.INCONCLUSIVE


def test_small_prime_rejected():
    with pytest.raises(SmallPrime):
        prove_surjective(E389, 3)


def test_report_format():
    line = prove_surjective(E389, 5).report_line()
    assert line.startswith("full(p=5): proven witnesses=[(")
    assert line.endswith("flags=111")


def test_witnesses_are_good_primes():
    v = prove_surjective(E389, 11)
    for l, t, d in v.evidence.sampled:
        assert E389.disc % l and l != 11


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_monotone_in_sample_bound(p):
    first = prove_surjective(E389, p, 1000)
    assert first.proven
    for bound in (len(first.evidence.sampled), 2000):
        assert prove_surjective(E389, p, bound).proven


@given(st.integers(0, 100), st.integers(1, 100), st.sampled_from([5, 7, 11, 13, 17]))
def test_flag_predicates(t, d, p):
    if d % p == 0:
        return
    disc = legendre_symbol(t * t - 4 * d, p)
    assert split_flag(t, d, p) == (t % p != 0 and disc == 1)
    assert nonsplit_flag(t, d, p) == (t % p != 0 and disc == -1)
    u = t * t * pow(d, -1, p) % p
    assert exceptional_flag(t, d, p) == (u not in (0, 1, 2, 4) and (u * u - 3 * u + 1) % p != 0)


def test_recheck_catches_tampering():
    ev = ImageEvidence(7)
    ev.add(2, 3)
    ev.witnesses[0] = (2, 0, 2)
    assert not ev.recheck()
