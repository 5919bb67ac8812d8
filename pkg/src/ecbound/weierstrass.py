"""Weierstrass curves over Q: invariants, coordinate changes, minimal models."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from sympy import factorint

from .errors import NonIntegralResult, SingularCurve
from .numth import ord_p


@dataclass(frozen=True)
class CurveInvariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j: Fraction

    def check(self):
        assert 4 * self.b8 == self.b2 * self.b6 - self.b4**2
        assert 1728 * self.disc == self.c4**3 - self.c6**2
        assert self.j == Fraction(self.c4**3, self.disc)


def _invariants(a1, a2, a3, a4, a6) -> CurveInvariants:
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    j = Fraction(c4**3, disc) if disc else None
    return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, j)


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integer coefficients."""
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an integer, got {v!r}")
        if self.invariants.disc == 0:
            raise SingularCurve(f"discriminant of {self} is zero")

    @classmethod
    def from_list(cls, a: Sequence[int]) -> WeierstrassCurve:
        if len(a) != 5:
            raise ValueError(f"expected five a-invariants, got {len(a)}")
        return cls(*(int(x) for x in a))

    @property
    def ainvs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @cached_property
    def invariants(self) -> CurveInvariants:
        return _invariants(*self.ainvs)

    @property
    def disc(self) -> int:
        return self.invariants.disc

    @property
    def j(self) -> Fraction:
        return self.invariants.j

    def bad_primes(self) -> list[int]:
        return sorted(int(q) for q in factorint(abs(self.disc)))

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.ainvs) + "]"


def compute_invariants(E: WeierstrassCurve) -> CurveInvariants:
    inv = _invariants(*E.ainvs)
    if inv.disc == 0:
        raise SingularCurve(f"discriminant of {E} is zero")
    inv.check()
    return inv


@dataclass(frozen=True)
class CoordinateChange:
    """x = u^2 x' + r,  y = u^3 y' + s u^2 x' + t."""
    u: Fraction = Fraction(1)
    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)
    t: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("u", "r", "s", "t"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.u == 0:
            raise ValueError("u must be nonzero")

    @classmethod
    def identity(cls) -> CoordinateChange:
        return cls()

    def compose(self, other: CoordinateChange) -> CoordinateChange:
        """Apply self first, then other."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = other.u, other.r, other.s, other.t
        return CoordinateChange(
            u1 * u2,
            r1 + u1 * u1 * r2,
            s1 + u1 * s2,
            t1 + u1 * u1 * s1 * r2 + u1**3 * t2,
        )

    def inverse(self) -> CoordinateChange:
        u, r, s, t = self.u, self.r, self.s, self.t
        return CoordinateChange(1 / u, -r / u**2, -s / u, (r * s - t) / u**3)


def _transform(a, phi: CoordinateChange) -> list[Fraction]:
    a1, a2, a3, a4, a6 = (Fraction(x) for x in a)
    u, r, s, t = phi.u, phi.r, phi.s, phi.t
    return [
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u**2,
        (a3 + r * a1 + 2 * t) / u**3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4,
        (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6,
    ]


def transform_curve(E: WeierstrassCurve, phi: CoordinateChange) -> WeierstrassCurve:
    new = _transform(E.ainvs, phi)
    if any(x.denominator != 1 for x in new):
        raise NonIntegralResult(f"{E} under {phi} has non-integral coefficients {new}")
    return WeierstrassCurve(*(int(x) for x in new))


def kraus_conditions(c4: int, c6: int) -> bool:
    """Whether (c4, c6) are the invariants of some integral Weierstrass model.

    Assumes c4^3 - c6^2 is a nonzero multiple of 1728.
    """
    # at 3: ord_3(c6) != 2
    ok3 = not (c6 % 9 == 0 and c6 % 27 != 0)
    # at 2
    ok2 = c6 % 4 == 3 or (c4 % 16 == 0 and c6 % 32 in (0, 8))
    return ok2 and ok3


def model_from_c4c6(c4: int, c6: int) -> WeierstrassCurve:
    """The reduced model (a1, a3 in {0, 1}, a2 in {-1, 0, 1}) with invariants c4, c6."""
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4, rem4 = divmod(b2 * b2 - c4, 24)
    b6, rem6 = divmod(-b2**3 + 36 * b2 * b4 - c6, 216)
    if rem4 or rem6:
        raise NonIntegralResult(f"no integral model with c4={c4}, c6={c6}")
    a1 = b2 % 2
    a3 = b6 % 2
    a2 = (b2 - a1) // 4
    a4 = (b4 - a1 * a3) // 2
    a6 = (b6 - a3) // 4
    E = WeierstrassCurve(a1, a2, a3, a4, a6)
    if (E.invariants.c4, E.invariants.c6) != (c4, c6):
        raise NonIntegralResult(f"no integral model with c4={c4}, c6={c6}")
    return E


def change_between(E: WeierstrassCurve, F: WeierstrassCurve, u: Fraction) -> CoordinateChange:
    """The (u, r, s, t) taking E to F, given the scaling u; c-invariants must match."""
    a1, a2, a3 = E.a1, E.a2, E.a3
    s = (u * F.a1 - a1) / Fraction(2)
    r = (u * u * F.a2 - a2 + s * a1 + s * s) / Fraction(3)
    t = (u**3 * F.a3 - a3 - r * a1) / Fraction(2)
    return CoordinateChange(u, r, s, t)


def _local_scaling_exponent(c4: int, c6: int, disc: int, l: int) -> int:
    d = ord_p(disc, l) // 12
    if c4:
        d = min(d, ord_p(c4, l) // 4)
    if c6:
        d = min(d, ord_p(c6, l) // 6)
    if l >= 5:
        return d
    # at 2 and 3 the Kraus conditions decide how far down we can go
    while d > 0:
        u = l**d
        if kraus_conditions(c4 // u**4, c6 // u**6):
            return d
        d -= 1
    return 0


def minimal_model(E: WeierstrassCurve) -> tuple[WeierstrassCurve, CoordinateChange]:
    """Global minimal model (reduced form) and the change of coordinates to it."""
    inv = E.invariants
    c4, c6, disc = inv.c4, inv.c6, inv.disc
    u = 1
    for l in E.bad_primes():
        u *= l ** _local_scaling_exponent(c4, c6, disc, l)
    Emin = model_from_c4c6(c4 // u**4, c6 // u**6)
    phi = change_between(E, Emin, Fraction(u))
    assert transform_curve(E, phi) == Emin
    return Emin, phi


def is_minimal_at(E: WeierstrassCurve, l: int) -> bool:
    inv = E.invariants
    return _local_scaling_exponent(inv.c4, inv.c6, inv.disc, l) == 0
