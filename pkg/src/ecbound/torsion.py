"""Certified verdicts on whether E(Q_p) has a point of order p."""
from __future__ import annotations

import enum
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional, Union

from .divpoly import ROOT_PRECISION, local_p_torsion_x
from .errors import PreconditionViolated, SamePrime
from .frobenius import count_points
from .lifting import hensel_lift, order_p_point, times_p_vanishes
from .numth import ord_p, primes_between, strip_p, unit_is_pth_power
from .reduction import ReductionType, tate_local_data
from .weierstrass import WeierstrassCurve

PROVENANCE = frozenset({
    "trace-criterion", "lift-test", "nonsplit-mult", "disc-criterion",
    "tate-parameter", "cm-criterion", "p2-multiplicative", "brute-force-oracle",
    "additive-away",
})

# largest p for which the degree (p^2 - 1)/2 division polynomial is tried
BRUTE_FORCE_MAX_P = 13


class TorStatus(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PointWitness:
    """An order-p point: affine (x, y) mod p^2 on the given model."""
    p: int
    x: int
    y: int

    def verify(self, E: WeierstrassCurve) -> bool:
        p = self.p
        if (self.x, self.y) != (self.x % (p * p), self.y % (p * p)):
            return False
        return times_p_vanishes(E, p, self.x, self.y)

    def render(self) -> str:
        return f"({self.x},{self.y}) mod {self.p}^2"

    def as_json(self):
        return {"kind": "point-mod-p2", "p": self.p, "x": str(self.x), "y": str(self.y)}


@dataclass(frozen=True)
class RootWitness:
    """x-coordinate in Z_p of an order-p point, known mod p**precision."""
    p: int
    x: int
    precision: int

    def render(self) -> str:
        return f"x={self.x} mod {self.p}^{self.precision}"

    def as_json(self):
        return {"kind": "x-in-Zp", "p": self.p, "x": str(self.x), "precision": self.precision}


@dataclass(frozen=True)
class SymbolicWitness:
    description: str

    def render(self) -> str:
        return self.description

    def as_json(self):
        return {"kind": "symbolic", "description": self.description}


Witness = Union[PointWitness, RootWitness, SymbolicWitness]


@dataclass(frozen=True)
class TorsionVerdict:
    status: TorStatus
    provenance: str
    witness: Optional[Witness] = None
    reason: str = ""

    def __post_init__(self):
        assert self.provenance in PROVENANCE, self.provenance
        if self.status is TorStatus.FAILS:
            assert self.witness is not None

    @classmethod
    def holds(cls, provenance: str) -> TorsionVerdict:
        return cls(TorStatus.HOLDS, provenance)

    @classmethod
    def fails(cls, provenance: str, witness: Witness) -> TorsionVerdict:
        return cls(TorStatus.FAILS, provenance, witness)

    @classmethod
    def unknown(cls, provenance: str, reason: str) -> TorsionVerdict:
        return cls(TorStatus.UNKNOWN, provenance, None, reason)

    def scan_line(self, p: int) -> str:
        w = self.witness.render() if self.witness is not None else "-"
        return f"p={p} verdict={self.status.value} provenance={self.provenance} witness={w}"

    def as_json(self) -> dict:
        d = {"status": self.status.value, "provenance": self.provenance,
             "witness": self.witness.as_json() if self.witness is not None else None}
        if self.reason:
            d["reason"] = self.reason
        return d


@lru_cache(maxsize=1)
def cm_j_invariants() -> frozenset[Fraction]:
    raw = resources.files("ecbound").joinpath("data/cm_j.json").read_text()
    return frozenset(Fraction(e["j"]) for e in json.loads(raw)["j"])


def has_cm(E: WeierstrassCurve) -> bool:
    """CM over Qbar for a curve over Q is decided by j alone."""
    return E.j in cm_j_invariants()


def _lift_witness(E: WeierstrassCurve, p: int, count: int, rng=None) -> PointWitness:
    x, y = order_p_point(E, p, count, rng)
    x, y = hensel_lift(E, p, x, y, rng)
    return PointWitness(p, x, y)


def order_p_lift_test(E_min: WeierstrassCurve, p: int,
                      rng: Optional[random.Random] = None) -> TorsionVerdict:
    """Decide E(Q_p)[p] for good reduction at p >= 5 with p | #E(F_p).

    E(Q_p)[p] != 0 iff [p]P lies in E_2, i.e. vanishes in E(Z/p^2), for any
    lift P of a point of order p mod p. Lifts differ by E_1 and [p]E_1 = E_2,
    so the answer does not depend on the choices; rng only varies them.
    """
    if p < 5:
        raise PreconditionViolated("the lifting test needs p >= 5")
    if E_min.disc % p == 0:
        raise PreconditionViolated(f"{E_min} has bad reduction at {p}")
    count = count_points(E_min, p)
    if count % p:
        raise PreconditionViolated(f"{p} does not divide #E(F_{p}) = {count}")
    w = _lift_witness(E_min, p, count, rng)
    if times_p_vanishes(E_min, p, w.x, w.y):
        return TorsionVerdict.fails("lift-test", w)
    return TorsionVerdict.holds("lift-test")


def tate_parameter_test(j: Fraction, p: int, ord_delta: int) -> TorsionVerdict:
    """Split multiplicative at p with p | ord_p(Delta): is q a p-th power?

    q = (1/j)(1 + 744/j + ...) and ord_p(q) = ord_delta >= p >= 3, so
    unit(q) = unit(1/j) mod p^2 and only the unit part needs checking.
    """
    j = Fraction(j)
    if p == 2:
        raise PreconditionViolated("the Tate parameter test needs p odd")
    if ord_delta % p:
        raise PreconditionViolated(f"{p} does not divide ord_p(Delta) = {ord_delta}")
    if j == 0 or -ord_p(j, p) != ord_delta:
        raise PreconditionViolated(f"ord_{p}(j) does not equal -{ord_delta}")
    inv = 1 / j
    m = p * p
    unit = strip_p(inv.numerator, p) * pow(strip_p(inv.denominator, p), -1, m) % m
    if unit_is_pth_power(unit, p):
        return TorsionVerdict.fails(
            "tate-parameter",
            SymbolicWitness(f"Tate parameter is a {p}-th power (unit {unit} mod {p}^2)"))
    return TorsionVerdict.holds("tate-parameter")


def brute_force_test(E_min: WeierstrassCurve, p: int) -> TorsionVerdict:
    """Roots of psi_p in Z_p whose y-equation is solvable over Q_p."""
    xs = local_p_torsion_x(E_min, p)
    if xs:
        return TorsionVerdict.fails("brute-force-oracle", RootWitness(p, xs[0], ROOT_PRECISION))
    return TorsionVerdict.holds("brute-force-oracle")


def check_tor(E_min: WeierstrassCurve, p: int, deep: bool = False,
              cm: Optional[bool] = None) -> TorsionVerdict:
    """Three-valued verdict on E(Q_p)[p] = 0. Never raises on valid input."""
    data = tate_local_data(E_min, p)
    t = data.type

    if p == 2:
        if t.is_multiplicative:
            # -1 in the Tate uniformization has order 2
            return TorsionVerdict.fails(
                "p2-multiplicative", SymbolicWitness("-1 in Q_2^x/q^Z (Tate uniformization)"))
        return TorsionVerdict.unknown("p2-multiplicative", "p = 2 without multiplicative reduction")

    if t is ReductionType.GOOD:
        count = count_points(E_min, p)
        if count % p:
            return TorsionVerdict.holds("trace-criterion")
        if p == 3:
            return brute_force_test(E_min, p)
        if cm is None:
            cm = has_cm(E_min)
        if cm and p >= 7:
            return TorsionVerdict.fails("cm-criterion", _lift_witness(E_min, p, count))
        return order_p_lift_test(E_min, p)

    if t is ReductionType.NONSPLIT_MULTIPLICATIVE:
        return TorsionVerdict.holds("nonsplit-mult")

    if t is ReductionType.SPLIT_MULTIPLICATIVE:
        if data.ord_delta % p:
            return TorsionVerdict.holds("disc-criterion")
        if deep:
            return tate_parameter_test(E_min.j, p, data.ord_delta)
        return TorsionVerdict.unknown("disc-criterion", "p | ord_p(Delta), deep test disabled")

    if deep and p <= BRUTE_FORCE_MAX_P:
        return brute_force_test(E_min, p)
    return TorsionVerdict.unknown("brute-force-oracle", "additive reduction at p; no criterion applies")


def check_torsion_away(E_min: WeierstrassCurve, l: int, p: int) -> TorsionVerdict:
    """E(Q_l)[p] for l != p, from the additive-reduction criterion only."""
    if l == p:
        raise SamePrime(f"l and p are both {p}")
    data = tate_local_data(E_min, l)
    if data.type is ReductionType.ADDITIVE and (p > 3 or data.tamagawa != 3):
        return TorsionVerdict.holds("additive-away")
    return TorsionVerdict.unknown("additive-away", "no criterion for this configuration")


def _scan_one(args) -> tuple[int, TorsionVerdict]:
    ainvs, p, deep = args
    return p, check_tor(WeierstrassCurve(*ainvs), p, deep)


def scan_local_torsion(E_min: WeierstrassCurve, p_min: int, p_max: int,
                       deep: bool = True, jobs: int = 1) -> list[tuple[int, TorsionVerdict]]:
    """Primes in [p_min, p_max] where (Tor) fails or is undecided, ascending."""
    if p_min < 3:
        raise ValueError("scan starts at p >= 3")
    tasks = [(E_min.ainvs, p, deep) for p in primes_between(p_min, p_max)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        results = [_scan_one(t) for t in tasks]
    return [(p, v) for p, v in results if v.status is not TorStatus.HOLDS]
