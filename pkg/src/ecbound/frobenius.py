"""Point counts over F_p and traces of Frobenius."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import BadReduction, EvenPrime
from .weierstrass import WeierstrassCurve

# beyond this the Horner products no longer fit in int64
_NUMPY_LIMIT = 3 * 10**9


@dataclass(frozen=True)
class FrobeniusData:
    prime: int
    count: int
    trace: int

    def __post_init__(self):
        p = self.prime
        assert self.count >= 1
        assert self.trace == p + 1 - self.count
        assert self.trace * self.trace <= 4 * p, f"Hasse bound violated at {p}: a_p={self.trace}"

    def report_line(self) -> str:
        return f"p={self.prime} ap={self.trace}"


def completed_cubic(E: WeierstrassCurve) -> tuple[int, int, int, int]:
    """Coefficients (4, b2, 2 b4, b6) of g with (2y + a1 x + a3)^2 = g(x)."""
    inv = E.invariants
    return 4, inv.b2, 2 * inv.b4, inv.b6


def _squares_table(p: int) -> np.ndarray:
    xs = np.arange(p, dtype=np.int64)
    table = np.zeros(p, dtype=bool)
    table[(xs * xs) % p] = True
    return table


def _affine_count_numpy(coeffs, p: int) -> int:
    c3, c2, c1, c0 = (c % p for c in coeffs)
    x = np.arange(p, dtype=np.int64)
    g = (c3 * x + c2) % p
    g = (g * x + c1) % p
    g = (g * x + c0) % p
    sq = _squares_table(p)
    zeros = int(np.count_nonzero(g == 0))
    nonzero_squares = int(np.count_nonzero(sq[g])) - zeros
    return zeros + 2 * nonzero_squares


def _affine_count_python(coeffs, p: int) -> int:
    c3, c2, c1, c0 = (c % p for c in coeffs)
    half = (p - 1) // 2
    total = 0
    for x in range(p):
        g = ((c3 * x + c2) * x + c1) * x + c0
        g %= p
        if g == 0:
            total += 1
        elif pow(g, half, p) == 1:
            total += 2
    return total


def count_points(E: WeierstrassCurve, p: int) -> int:
    """#E(F_p) including the point at infinity, for odd p of good reduction."""
    if p == 2:
        raise EvenPrime("point counting needs an odd prime")
    if E.disc % p == 0:
        raise BadReduction(f"{E} has bad reduction at {p}")
    coeffs = completed_cubic(E)
    if p < _NUMPY_LIMIT:
        affine = _affine_count_numpy(coeffs, p)
    else:
        affine = _affine_count_python(coeffs, p)
    return 1 + affine


def trace_of_frobenius(E_min: WeierstrassCurve, p: int) -> FrobeniusData:
    count = count_points(E_min, p)
    data = FrobeniusData(p, count, p + 1 - count)
    if count % p == 0:
        # a_p = 1 mod p together with Hasse pins a_p down
        if p >= 5:
            assert data.trace == 1 or (p == 5 and data.trace == -4)
        elif p == 3:
            assert data.trace in (1, -2)
    return data


def naive_count(E: WeierstrassCurve, p: int) -> int:
    """Double loop over F_p x F_p; an oracle, quadratic in p."""
    a1, a2, a3, a4, a6 = (a % p for a in E.ainvs)
    n = 1
    for x in range(p):
        rhs = (((x + a2) * x + a4) * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - rhs) % p == 0:
                n += 1
    return n


def hasse_bound(p: int) -> int:
    """Largest integer a with a^2 <= 4p."""
    return isqrt(4 * p)
