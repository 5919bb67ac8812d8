"""Points of E over Z/p and Z/p^2, and the order-p lifting test.

Arithmetic runs on the short model Y^2 = X^3 - 27 c4 X - 54 c6, reached by
X = 36x + 3 b2, Y = 108(2y + a1 x + a3). For p >= 5 this is an isomorphism
over Z_p, so orders of points are unchanged.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import NonResidue
from .numth import legendre_symbol, sqrt_mod_prime
from .weierstrass import WeierstrassCurve

Projective = tuple[int, int, int]


@dataclass(frozen=True)
class ShortModel:
    A: int
    B: int
    modulus: int

    @classmethod
    def of(cls, E: WeierstrassCurve, modulus: int) -> ShortModel:
        inv = E.invariants
        return cls(-27 * inv.c4 % modulus, -54 * inv.c6 % modulus, modulus)

    def contains(self, P: Projective) -> bool:
        X, Y, Z = P
        m = self.modulus
        return (Y * Y * Z - X**3 - self.A * X * Z * Z - self.B * Z**3) % m == 0


def to_short(E: WeierstrassCurve, x: int, y: int, m: int) -> Projective:
    b2 = E.invariants.b2
    return ((36 * x + 3 * b2) % m, 108 * (2 * y + E.a1 * x + E.a3) % m, 1)


def from_short(E: WeierstrassCurve, X: int, Y: int, m: int) -> tuple[int, int]:
    """Inverse of to_short on affine points; needs 6 invertible mod m."""
    b2 = E.invariants.b2
    x = (X - 3 * b2) * pow(36, -1, m) % m
    y = ((Y * pow(108, -1, m) - E.a1 * x - E.a3) * pow(2, -1, m)) % m
    return x, y


def proj_add(P: Projective, Q: Projective, A: int, B: int, m: int) -> Projective:
    """Complete addition on Y^2 Z = X^3 + A X Z^2 + B Z^3 (Renes-Costello-Batina).

    Exceptional only when P - Q reduces to a point of order 2 modulo the
    maximal ideal; multiples of a point of odd order never hit that case.
    """
    X1, Y1, Z1 = P
    X2, Y2, Z2 = Q
    b3 = 3 * B
    xx, yy, zz = X1 * X2, Y1 * Y2, Z1 * Z2
    xy = X1 * Y2 + X2 * Y1
    yz = Y1 * Z2 + Y2 * Z1
    xz = X1 * Z2 + X2 * Z1
    u = yy + A * xz + b3 * zz
    v = yy - A * xz - b3 * zz
    w = A * xx + b3 * xz - A * A * zz
    k = 3 * xx + A * zz
    X3 = (xy * v - yz * w) % m
    Y3 = (u * v + k * w) % m
    Z3 = (yz * u + xy * k) % m
    return X3, Y3, Z3


def proj_mul(n: int, P: Projective, A: int, B: int, m: int) -> Projective:
    R: Projective = (0, 1, 0)
    Q = P
    while n:
        if n & 1:
            R = proj_add(R, Q, A, B, m)
        Q = proj_add(Q, Q, A, B, m)
        n >>= 1
    return R


def is_primitive(P: Projective, p: int) -> bool:
    return any(c % p for c in P)


def is_identity(P: Projective, m: int) -> bool:
    X, Y, Z = P
    return X % m == 0 and Z % m == 0 and Y % m != 0


def affine_add(P, Q, A: int, m: int):
    """Chord-tangent addition over Z/m; None is the identity.

    Valid only when the relevant denominator is a unit, which the callers
    arrange. Kept as an independent check on proj_add.
    """
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if (x1 - x2) % m == 0:
        if (y1 + y2) % m == 0:
            return None
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, m) % m
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, m) % m
    x3 = (lam * lam - x1 - x2) % m
    y3 = (lam * (x1 - x3) - y1) % m
    return x3, y3


def _curve_residual(E: WeierstrassCurve, x: int, y: int) -> int:
    a1, a2, a3, a4, a6 = E.ainvs
    return y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6


def points_mod_p(E: WeierstrassCurve, p: int, xs):
    """Affine F_p-points of E over the given x values, smaller root first."""
    inv = E.invariants
    inv2 = pow(2, -1, p)
    for x in xs:
        g = (4 * x**3 + inv.b2 * x * x + 2 * inv.b4 * x + inv.b6) % p
        if legendre_symbol(g, p) == -1:
            continue
        r = sqrt_mod_prime(g, p).value
        roots = [r] if r == 0 else [r, p - r]
        for s in roots:
            yield x, (s - E.a1 * x - E.a3) * inv2 % p


def order_p_point(E: WeierstrassCurve, p: int, count: int,
                  rng: Optional[random.Random] = None) -> tuple[int, int]:
    """A point of exact order p on E mod p, given p | count = #E(F_p).

    Deterministic (least x, smaller root) unless rng is supplied.
    """
    assert count % p == 0
    cof = count // p
    S = ShortModel.of(E, p)
    if rng is None:
        xs = range(p)
    else:
        xs = rng.sample(range(p), p)
    for x, y in points_mod_p(E, p, xs):
        P = to_short(E, x, y, p)
        Q = proj_mul(cof, P, S.A, S.B, p)
        if is_identity(Q, p):
            continue
        assert is_primitive(Q, p) and is_identity(proj_mul(p, Q, S.A, S.B, p), p)
        zi = pow(Q[2], -1, p)
        return from_short(E, Q[0] * zi % p, Q[1] * zi % p, p)
    raise NonResidue(f"no point of order {p} found on {E} mod {p}")


def hensel_lift(E: WeierstrassCurve, p: int, x: int, y: int,
                rng: Optional[random.Random] = None) -> tuple[int, int]:
    """Lift an F_p-point to a Z/p^2-point. rng perturbs the lift."""
    m = p * p
    a1, a2, a3, a4, _ = E.ainvs
    if rng is not None:
        x += p * rng.randrange(p)
    fy = 2 * y + a1 * x + a3
    if fy % p:
        y = (y - _curve_residual(E, x, y) * pow(fy, -1, m)) % m
    else:
        fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
        # nonsingular reduction: one partial is a unit
        assert fx % p, "singular point on a curve of good reduction"
        x = (x - _curve_residual(E, x, y) * pow(fx, -1, m)) % m
    x, y = x % m, y % m
    assert _curve_residual(E, x, y) % m == 0
    return x, y


def times_p_vanishes(E: WeierstrassCurve, p: int, x: int, y: int) -> bool:
    """Whether [p](x, y) is the identity of E(Z/p^2)."""
    m = p * p
    S = ShortModel.of(E, m)
    P = to_short(E, x, y, m)
    assert S.contains(P)
    R = proj_mul(p, P, S.A, S.B, m)
    assert is_primitive(R, p), "complete addition law hit an exceptional pair"
    return is_identity(R, m)


def times_p_vanishes_affine(E: WeierstrassCurve, p: int, x: int, y: int) -> bool:
    """Oracle for times_p_vanishes: [p-1]P == -P by repeated affine addition.

    The multiples kP for 1 <= k <= p-1 all reduce to distinct nonzero
    points, so every chord and tangent has a unit denominator.
    """
    m = p * p
    S = ShortModel.of(E, m)
    X, Y, _ = to_short(E, x, y, m)
    P = (X, Y)
    R = P
    for _ in range(p - 2):
        R = affine_add(R, P, S.A, m)
    return R == (X, (-Y) % m)
