"""The nu_l table and the class-number exponent lower bound."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import IncompleteLocalData, SamePrime
from .galois import DEFAULT_SAMPLE_BOUND, SurjectivityVerdict, prove_surjective
from .numth import is_prime, ord_p
from .reduction import LocalReductionData, ReductionType, local_data_all
from .torsion import TorStatus, TorsionVerdict, check_tor
from .weierstrass import WeierstrassCurve, minimal_model

P3_CAVEAT = ("p = 3: the surjectivity criterion needs p > 3 and full image at level 3 "
             "would not give full image at every level 3^n, so (Full) is not certified")

# integers at or above this are written as strings in JSON
JSON_SAFE = 2**53 - 1


@dataclass(frozen=True)
class BoundInput:
    curve: WeierstrassCurve
    p: int
    n: int
    rank: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 1:
            raise ValueError("level n must be >= 1")
        if self.rank < 0:
            raise ValueError("rank must be >= 0")


@dataclass(frozen=True)
class BoundConfig:
    deep: bool = False
    sample_bound: int = DEFAULT_SAMPLE_BOUND


def nu_l(data: LocalReductionData, p: int, n: int) -> int:
    if data.prime == p:
        raise SamePrime(f"nu_l needs l != p, both are {p}")
    if data.type is ReductionType.SPLIT_MULTIPLICATIVE:
        return min(ord_p(data.ord_delta, p), n)
    if p == 3 and data.type is ReductionType.ADDITIVE and data.tamagawa == 3:
        return n
    return 0


def nu_table(local_data: list[LocalReductionData], p: int, n: int) -> dict[int, int]:
    return {d.prime: nu_l(d, p, n) for d in local_data if d.prime != p}


def bound_exponent(inp: BoundInput, local_data: list[LocalReductionData]) -> int:
    """2n(r - 1) - 2 sum of nu_l over l | Delta, l != p; not clamped."""
    have = {d.prime for d in local_data}
    missing = [l for l in inp.curve.bad_primes() if l not in have]
    if missing:
        raise IncompleteLocalData(f"no local data at {missing}")
    nus = nu_table(local_data, inp.p, inp.n)
    return 2 * inp.n * (inp.rank - 1) - 2 * sum(nus.values())


@dataclass
class BoundReport:
    input: BoundInput
    local_data: list
    full_status: Optional[SurjectivityVerdict]
    tor_status: TorsionVerdict
    red_l: dict = field(default_factory=dict)
    red_p: bool = False
    disc: bool = False
    nu_table: dict = field(default_factory=dict)
    exponent_bound: int = 0
    certified: bool = False
    notes: list = field(default_factory=list)

    @property
    def bound_clamped(self) -> int:
        return max(0, self.exponent_bound)

    @property
    def red_l_holds(self) -> bool:
        return all(self.red_l.values())

    def full_text(self) -> str:
        if self.full_status is None:
            return "not-evaluated"
        return self.full_status.status.value

    def as_json(self) -> dict:
        inp = self.input
        return {
            "curve": str(inp.curve),
            "p": _num(inp.p),
            "n": _num(inp.n),
            "rank": _num(inp.rank),
            "conditions": {
                "full": self.full_text(),
                "tor": self.tor_status.status.value,
                "red_l": self.red_l_holds,
                "red_p": self.red_p,
                "disc": self.disc,
            },
            "nu": {str(l): _num(v) for l, v in sorted(self.nu_table.items())},
            "bound_raw": _num(self.exponent_bound),
            "bound_clamped": _num(self.bound_clamped),
            "certified": self.certified,
        }

    def render(self) -> str:
        inp = self.input
        rows = [
            ("curve", str(inp.curve)),
            ("p, n, rank", f"{inp.p}, {inp.n}, {inp.rank}"),
            ("(Full)", self.full_status.report_line() if self.full_status else "not evaluated"),
            ("(Tor)", f"{self.tor_status.status.value} ({self.tor_status.provenance})"),
            ("(Red_p)", str(self.red_p).lower()),
            ("(Disc)", str(self.disc).lower()),
            ("(Red_l)", " ".join(f"{l}:{'ok' if v else 'no'}" for l, v in sorted(self.red_l.items())) or "-"),
            ("nu", " ".join(f"{l}:{v}" for l, v in sorted(self.nu_table.items())) or "-"),
            ("bound_raw", str(self.exponent_bound)),
            ("bound_clamped", str(self.bound_clamped)),
            ("certified", str(self.certified).lower()),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
        lines += [f"warning: {w}" for w in self.notes]
        return "\n".join(lines)


def _num(v: int):
    return str(v) if abs(v) > JSON_SAFE else v


def _red_l(E: WeierstrassCurve, local_data, p: int) -> dict[int, bool]:
    """Multiplicative, or additive with integral j (potentially good), away from p."""
    out = {}
    for d in local_data:
        if d.prime == p:
            continue
        if d.type.is_multiplicative:
            out[d.prime] = True
        else:
            out[d.prime] = E.j == 0 or ord_p(E.j, d.prime) >= 0
    return out


def full_report(inp: BoundInput, config: BoundConfig = BoundConfig()) -> BoundReport:
    E, _ = minimal_model(inp.curve)
    if E != inp.curve:
        inp = BoundInput(E, inp.p, inp.n, inp.rank)
    p = inp.p
    local = local_data_all(E)
    at_p = next((d for d in local if d.prime == p), None)
    notes = []

    full = None
    if p > 3:
        full = prove_surjective(E, p, config.sample_bound)
    elif p == 3:
        notes.append(P3_CAVEAT)
    tor = check_tor(E, p, config.deep)

    ord_p_delta = at_p.ord_delta if at_p else 0
    report = BoundReport(
        input=inp,
        local_data=local,
        full_status=full,
        tor_status=tor,
        red_l=_red_l(E, local, p),
        red_p=bool(at_p and at_p.type.is_multiplicative),
        disc=ord_p_delta % p != 0,
        nu_table=nu_table(local, p, inp.n),
        exponent_bound=bound_exponent(inp, local),
        notes=notes,
    )

    if p == 2:
        notes.append("p = 2 is excluded, the bound needs an odd prime; certification refused")
        return report
    # at p = 3 there is no (Full) certificate, so ok stays False
    ok = full is not None and full.proven and tor.status is TorStatus.HOLDS
    report.certified = ok
    if not ok:
        if full is not None and not full.proven:
            notes.append("(Full) not proven within the sample bound")
        if tor.status is not TorStatus.HOLDS:
            notes.append(f"(Tor) {tor.status.value}: {tor.reason or tor.provenance}")
        notes.append("bound shown but not certified")
    return report

