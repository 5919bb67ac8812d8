"""One-sided certificate that the mod-p Galois image is all of GL_2(F_p).

Serre's criterion for p >= 5: a subgroup of GL_2(F_p) with surjective
determinant is everything once it contains
  * an element with nonzero trace and nonzero square discriminant,
  * an element with nonzero trace and nonsquare discriminant,
  * an element with u = tr^2/det outside {0, 1, 2, 4} and u^2 - 3u + 1 != 0.
Frobenius at a good prime l has trace a_l and determinant l.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from sympy import nextprime

from .errors import SmallPrime
from .frobenius import naive_count, trace_of_frobenius
from .numth import legendre_symbol
from .weierstrass import WeierstrassCurve

DEFAULT_SAMPLE_BOUND = 1000

FLAG_NAMES = ("split", "nonsplit", "exceptional")


def split_flag(t: int, d: int, p: int) -> bool:
    return t % p != 0 and legendre_symbol(t * t - 4 * d, p) == 1


def nonsplit_flag(t: int, d: int, p: int) -> bool:
    return t % p != 0 and legendre_symbol(t * t - 4 * d, p) == -1


def exceptional_flag(t: int, d: int, p: int) -> bool:
    u = t * t * pow(d, -1, p) % p
    return u not in (0, 1, 2, 4) and (u * u - 3 * u + 1) % p != 0


_PREDICATES = (split_flag, nonsplit_flag, exceptional_flag)


@dataclass
class ImageEvidence:
    prime: int
    sampled: list = field(default_factory=list)
    witnesses: list = field(default_factory=lambda: [None, None, None])

    @property
    def flags(self) -> tuple[bool, bool, bool]:
        return tuple(w is not None for w in self.witnesses)

    def add(self, l: int, a_l: int):
        p = self.prime
        entry = (l, a_l % p, l % p)
        self.sampled.append(entry)
        for i, pred in enumerate(_PREDICATES):
            if self.witnesses[i] is None and pred(entry[1], entry[2], p):
                self.witnesses[i] = entry

    def recheck(self) -> bool:
        """Re-derive every set flag from its stored witness alone."""
        p = self.prime
        for pred, w in zip(_PREDICATES, self.witnesses):
            if w is not None:
                _, t, d = w
                if d % p == 0 or not pred(t, d, p):
                    return False
        return True

    def flag_bits(self) -> str:
        return "".join("1" if f else "0" for f in self.flags)

    def witness_list(self) -> list[tuple[int, int, int]]:
        seen = []
        for w in self.witnesses:
            if w is not None and w not in seen:
                seen.append(w)
        return seen


class Surjectivity(enum.Enum):
    PROVEN = "proven"
    INCONCLUSIVE = "inconclusive"


@dataclass
class SurjectivityVerdict:
    status: Surjectivity
    evidence: ImageEvidence
    bound_reached: bool = False

    def __post_init__(self):
        if self.status is Surjectivity.PROVEN:
            assert all(self.evidence.flags)

    @property
    def proven(self) -> bool:
        return self.status is Surjectivity.PROVEN

    def report_line(self) -> str:
        ws = ",".join(f"({l},{t},{d})" for l, t, d in self.evidence.witness_list())
        return (f"full(p={self.evidence.prime}): {self.status.value} "
                f"witnesses=[{ws}] flags={self.evidence.flag_bits()}")

    def as_json(self) -> dict:
        ev = self.evidence
        return {
            "status": self.status.value,
            "flags": ev.flag_bits(),
            "witnesses": [list(w) for w in ev.witness_list()],
            "sampled": len(ev.sampled),
        }


def _trace(E: WeierstrassCurve, l: int) -> int:
    if l == 2:
        return 3 - naive_count(E, 2)
    return trace_of_frobenius(E, l).trace


def prove_surjective(E_min: WeierstrassCurve, p: int,
                     sample_bound: int = DEFAULT_SAMPLE_BOUND) -> SurjectivityVerdict:
    """Sample Frobenius at the first sample_bound good primes l != p."""
    if p <= 3:
        raise SmallPrime(f"the criterion needs p > 3, got {p}")
    if sample_bound < 1:
        raise ValueError("sample_bound must be >= 1")
    ev = ImageEvidence(p)
    bad = E_min.disc * p
    l = 2
    used = 0
    while used < sample_bound:
        if bad % l:
            ev.add(l, _trace(E_min, l))
            used += 1
            if all(ev.flags):
                return SurjectivityVerdict(Surjectivity.PROVEN, ev)
        l = int(nextprime(l))
    return SurjectivityVerdict(Surjectivity.INCONCLUSIVE, ev, bound_reached=True)
