"""Local reduction data by Tate's algorithm."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import MissingTrace, NotMinimal, NotMultiplicative
from .numth import legendre_symbol, ord_p
from .weierstrass import WeierstrassCurve


class ReductionType(enum.Enum):
    GOOD = "good"
    SPLIT_MULTIPLICATIVE = "split-mult"
    NONSPLIT_MULTIPLICATIVE = "nonsplit-mult"
    ADDITIVE = "additive"

    @property
    def is_multiplicative(self) -> bool:
        return self in (ReductionType.SPLIT_MULTIPLICATIVE, ReductionType.NONSPLIT_MULTIPLICATIVE)


class SplitKind(enum.Enum):
    SPLIT = "split"
    NONSPLIT = "nonsplit"


@dataclass(frozen=True)
class LocalReductionData:
    prime: int
    type: ReductionType
    kodaira: str
    tamagawa: int
    ord_delta: int

    def __post_init__(self):
        t = self.type
        if t is ReductionType.GOOD:
            assert self.kodaira == "I0" and self.tamagawa == 1 and self.ord_delta == 0
        elif t is ReductionType.SPLIT_MULTIPLICATIVE:
            assert self.tamagawa == self.ord_delta
        elif t is ReductionType.NONSPLIT_MULTIPLICATIVE:
            assert self.tamagawa in (1, 2)
        else:
            assert 1 <= self.tamagawa <= 4

    def report_line(self) -> str:
        return (f"l={self.prime} type={self.type.value} kodaira={self.kodaira} "
                f"c={self.tamagawa} ordDelta={self.ord_delta}")


class _Model:
    """Mutable working copy of the a-invariants during the algorithm."""

    def __init__(self, a):
        self.a1, self.a2, self.a3, self.a4, self.a6 = a

    def shift(self, r=0, s=0, t=0):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.a1 = a1 + 2 * s
        self.a2 = a2 - s * a1 + 3 * r - s * s
        self.a3 = a3 + r * a1 + 2 * t
        self.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
        self.a6 = a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1

    @property
    def b2(self):
        return self.a1**2 + 4 * self.a2

    @property
    def b6(self):
        return self.a3**2 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4


def _divides(pk: int, n: int) -> bool:
    return n % pk == 0


def _inv(a: int, m: int) -> int:
    return pow(a, -1, m)


# --- small polynomial helpers over F_p (lists, lowest degree first) ---

def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    inv = _inv(g[-1], p)
    while len(f) >= len(g):
        coef = f[-1] * inv % p
        shift = len(f) - len(g)
        for i, c in enumerate(g):
            f[shift + i] = (f[shift + i] - coef * c) % p
        f = _trim(f)
    return f


def _pgcd(f, g, p):
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    while g:
        f, g = g, _pmod(f, g, p)
    if f:
        inv = _inv(f[-1], p)
        f = [c * inv % p for c in f]
    return f


def _pmulmod(f, g, m, p):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _count_distinct_roots(f, p: int) -> int:
    """Number of distinct roots in F_p of a nonzero polynomial."""
    f = _trim([c % p for c in f])
    if len(f) <= 1:
        return 0
    if p < 64:
        return sum(1 for x in range(p) if sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0)
    # deg gcd(f, x^p - x)
    result, base, e = [1], [0, 1], p
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    xp_minus_x = _trim(list(result) + [0] * max(0, 2 - len(result)))
    xp_minus_x[1] = (xp_minus_x[1] - 1) % p
    g = _pgcd(f, _trim(xp_minus_x), p)
    return len(g) - 1 if g else len(f) - 1


def _quadratic_roots(a: int, b: int, c: int, p: int) -> tuple[bool, int]:
    """For a X^2 + b X + c over F_p with a != 0: (has distinct roots, number of F_p roots)."""
    if p == 2:
        distinct = b % 2 == 1
        return distinct, sum(1 for x in (0, 1) if (a * x * x + b * x + c) % 2 == 0)
    d = (b * b - 4 * a * c) % p
    if d == 0:
        return False, 1
    return True, 2 if legendre_symbol(d, p) == 1 else 0


def _double_root(a: int, b: int, c: int, p: int) -> int:
    """The repeated root of a X^2 + b X + c over F_p (a != 0)."""
    if p == 2:
        # X^2 = c/a and squaring is the identity on F_2
        return (c * a) % 2
    return (-b * _inv(2 * a, p)) % p


def _singular_point(m: _Model, p: int) -> tuple[int, int]:
    a1, a2, a3, a4, a6 = m.a1, m.a2, m.a3, m.a4, m.a6
    if p <= 3:
        for x in range(p):
            for y in range(p):
                F = y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6
                Fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
                Fy = 2 * y + a1 * x + a3
                if F % p == 0 and Fx % p == 0 and Fy % p == 0:
                    return x, y
        raise AssertionError("no singular point on a curve with bad reduction")
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    g = [b6, 2 * b4, b2, 4]
    dg = [2 * b4, 2 * b2, 12]
    h = _pgcd(g, dg, p)
    if len(h) == 2:
        x0 = (-h[0]) % p
    elif len(h) == 3:
        x0 = (-b2 * _inv(12, p)) % p
    else:
        raise AssertionError("reduced cubic has no repeated root")
    y0 = (-(a1 * x0 + a3) * _inv(2, p)) % p
    return x0, y0


def _cubic_shape(a2: int, a4: int, a6: int, p: int) -> tuple[str, int]:
    """Root pattern of T^3 + a2 T^2 + a4 T + a6 over F_p.

    Returns ("distinct", #roots in F_p), ("double", root) or ("triple", root).
    """
    f = [a6 % p, a4 % p, a2 % p, 1]
    if p <= 3:
        # multiplicities can be divisible by p here, so the derivative is no
        # use; the repeated root is F_p-rational, so read multiplicities off
        # by synthetic division
        mult = {}
        for x in range(p):
            g, k = f, 0
            while len(g) > 1 and sum(c * x**i for i, c in enumerate(g)) % p == 0:
                # divide by (T - x)
                q, carry = [0] * (len(g) - 1), 0
                for i in range(len(g) - 1, 0, -1):
                    carry = (g[i] + carry * x) % p
                    q[i - 1] = carry
                g, k = q, k + 1
            if k:
                mult[x] = k
        for x, k in mult.items():
            if k == 3:
                return "triple", x
            if k == 2:
                return "double", x
        return "distinct", len(mult)
    df = [a4 % p, 2 * a2 % p, 3]
    h = _pgcd(f, df, p)
    if len(h) == 1:
        return "distinct", _count_distinct_roots(f, p)
    if len(h) == 2:
        return "double", (-h[0]) % p
    return "triple", (-a2 * _inv(3, p)) % p


def _translate_to_singular(E: WeierstrassCurve, l: int) -> _Model:
    m = _Model(E.ainvs)
    x0, y0 = _singular_point(m, l)
    m.shift(r=x0, t=y0)
    assert m.a3 % l == 0 and m.a4 % l == 0 and m.a6 % l == 0
    return m


def split_type(E_min: WeierstrassCurve, l: int) -> SplitKind:
    """Split or non-split multiplicative reduction, from the tangent cone at the node."""
    n = ord_p(E_min.disc, l) if E_min.disc % l == 0 else 0
    if n == 0 or E_min.invariants.c4 % l == 0:
        raise NotMultiplicative(f"{E_min} does not have multiplicative reduction at {l}")
    m = _translate_to_singular(E_min, l)
    # tangent cone y^2 + a1 xy - a2 x^2 at the origin
    _, nroots = _quadratic_roots(1, m.a1, -m.a2, l)
    return SplitKind.SPLIT if nroots == 2 else SplitKind.NONSPLIT


def tate_local_data(E_min: WeierstrassCurve, l: int) -> LocalReductionData:
    disc = E_min.disc
    if disc % l:
        return LocalReductionData(l, ReductionType.GOOD, "I0", 1, 0)
    n = ord_p(disc, l)
    p = l
    m = _translate_to_singular(E_min, p)

    if m.b2 % p:
        kind = split_type(E_min, p)
        if kind is SplitKind.SPLIT:
            return LocalReductionData(p, ReductionType.SPLIT_MULTIPLICATIVE, f"I{n}", n, n)
        c = 2 if n % 2 == 0 else 1
        return LocalReductionData(p, ReductionType.NONSPLIT_MULTIPLICATIVE, f"I{n}", c, n)

    def additive(kod, c):
        return LocalReductionData(p, ReductionType.ADDITIVE, kod, c, n)

    p2, p3 = p * p, p**3
    if not _divides(p2, m.a6):
        return additive("II", 1)
    if not _divides(p3, m.b8):
        return additive("III", 2)
    if not _divides(p3, m.b6):
        _, nroots = _quadratic_roots(1, m.a3 // p, -(m.a6 // p2), p)
        return additive("IV", 3 if nroots == 2 else 1)

    # make p | a1, a2; p^2 | a3, a4; p^3 | a6
    if p == 2:
        s = m.a2 % 2
        t = 2 * ((m.a6 // 4) % 2)
    else:
        s = (-m.a1 * _inv(2, p)) % p
        t = (-m.a3 * _inv(2, p2)) % p2
    m.shift(s=s, t=t)
    assert m.a1 % p == 0 and m.a2 % p == 0 and m.a3 % p2 == 0
    assert m.a4 % p2 == 0 and m.a6 % p3 == 0

    shape, root = _cubic_shape(m.a2 // p, m.a4 // p2, m.a6 // p3, p)
    if shape == "distinct":
        return additive("I0*", 1 + root)

    if shape == "double":
        m.shift(r=root * p)
        # alternate between quadratics in y = p^k Y and x = p^k X, each
        # homogeneous of weight p^(nu+3), until one has distinct roots
        nu = 1
        while True:
            if nu % 2 == 1:
                k = (nu + 3) // 2
                a, b, c = 1, m.a3 // p**k, -(m.a6 // p ** (nu + 3))
            else:
                k = (nu + 2) // 2
                a, b, c = m.a2 // p, m.a4 // p ** (nu + 3 - k), m.a6 // p ** (nu + 3)
            distinct, nroots = _quadratic_roots(a, b, c, p)
            if distinct:
                return additive(f"I{nu}*", 4 if nroots == 2 else 2)
            z = _double_root(a, b, c, p)
            if nu % 2 == 1:
                m.shift(t=z * p**k)
            else:
                m.shift(r=z * p**k)
            nu += 1

    # triple root
    m.shift(r=root * p)
    assert m.a2 % p2 == 0 and m.a4 % p3 == 0 and m.a6 % p**4 == 0
    distinct, nroots = _quadratic_roots(1, m.a3 // p2, -(m.a6 // p**4), p)
    if distinct:
        return additive("IV*", 3 if nroots == 2 else 1)
    z = _double_root(1, m.a3 // p2, -(m.a6 // p**4), p)
    m.shift(t=z * p2)
    if not _divides(p**4, m.a4):
        return additive("III*", 2)
    if not _divides(p**6, m.a6):
        return additive("II*", 1)
    raise NotMinimal(f"{E_min} is not minimal at {p}")


def local_data_all(E_min: WeierstrassCurve) -> list[LocalReductionData]:
    return [tate_local_data(E_min, l) for l in E_min.bad_primes()]


def nonsingular_count(data: LocalReductionData, a_l: Optional[int] = None) -> int:
    """#E_ns(F_l) for the reduction described by data."""
    l = data.prime
    t = data.type
    if t is ReductionType.GOOD:
        if a_l is None:
            raise MissingTrace(f"good reduction at {l} needs a_{l}")
        return l + 1 - a_l
    if t is ReductionType.SPLIT_MULTIPLICATIVE:
        return l - 1
    if t is ReductionType.NONSPLIT_MULTIPLICATIVE:
        return l + 1
    return l
