"""JSON-lines curve corpus: strict parsing, canonical output, bundled fixtures."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from .errors import ParseError
from .numth import is_prime
from .weierstrass import WeierstrassCurve

# canonical key order on output; also the full set of accepted keys
FIELDS = ("label", "a", "rank", "torsion_order", "cm_j_flag", "expected_local_torsion", "source")


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


@dataclass(frozen=True)
class CurveRecord:
    label: str
    a_invariants: tuple[int, int, int, int, int]
    rank: Optional[int] = None
    torsion_order: Optional[int] = None
    cm_j_flag: Optional[bool] = None
    expected_local_torsion: Optional[tuple[int, ...]] = None
    source: Optional[str] = None

    @property
    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve(*self.a_invariants)

    def to_json(self) -> str:
        d = {"label": self.label, "a": list(self.a_invariants)}
        if self.rank is not None:
            d["rank"] = self.rank
        if self.torsion_order is not None:
            d["torsion_order"] = self.torsion_order
        if self.cm_j_flag is not None:
            d["cm_j_flag"] = self.cm_j_flag
        if self.expected_local_torsion is not None:
            d["expected_local_torsion"] = list(self.expected_local_torsion)
        if self.source is not None:
            d["source"] = self.source
        return json.dumps(d, separators=(",", ":"), ensure_ascii=False)


def parse_curve_record(line: str, lineno: Optional[int] = None) -> CurveRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as e:
        row = lineno if lineno is not None else e.lineno
        raise ParseError(f"invalid JSON: {e.msg}", row, e.colno) from None

    def bad(msg):
        return ParseError(msg, lineno)

    if not isinstance(obj, dict):
        raise bad("expected a JSON object")
    unknown = sorted(set(obj) - set(FIELDS))
    if unknown:
        raise bad(f"unknown field(s) {unknown}")
    label = obj.get("label")
    if not isinstance(label, str):
        raise bad("label must be a string")
    a = obj.get("a")
    if not isinstance(a, list) or len(a) != 5 or not all(_is_int(x) for x in a):
        raise bad("a must be a list of five integers")

    rank = obj.get("rank")
    if rank is not None and not (_is_int(rank) and rank >= 0):
        raise bad("rank must be a nonnegative integer")
    tors = obj.get("torsion_order")
    if tors is not None and not (_is_int(tors) and tors >= 1):
        raise bad("torsion_order must be a positive integer")
    cm = obj.get("cm_j_flag")
    if cm is not None and not isinstance(cm, bool):
        raise bad("cm_j_flag must be a boolean")
    elt = obj.get("expected_local_torsion")
    if elt is not None:
        if not isinstance(elt, list) or not all(_is_int(p) and is_prime(p) for p in elt):
            raise bad("expected_local_torsion must be a list of primes")
        if any(x >= y for x, y in zip(elt, elt[1:])):
            raise bad("expected_local_torsion must be strictly increasing")
        elt = tuple(elt)
    source = obj.get("source")
    if source is not None and not isinstance(source, str):
        raise bad("source must be a string")

    # raises SingularCurve for a zero discriminant
    WeierstrassCurve(*a)
    return CurveRecord(label, tuple(a), rank, tors, cm, elt, source)


def parse_corpus(lines: Iterable[str]) -> list[CurveRecord]:
    out = []
    for i, line in enumerate(lines, 1):
        if line.strip():
            out.append(parse_curve_record(line, i))
    return out


def load_corpus(path) -> list[CurveRecord]:
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh)


def bundled_text() -> str:
    return resources.files("ecbound").joinpath("data/curves.jsonl").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def bundled_corpus() -> tuple[CurveRecord, ...]:
    return tuple(parse_corpus(bundled_text().splitlines()))


def find_record(label: str, records: Iterable[CurveRecord] = ()) -> Optional[CurveRecord]:
    for rec in list(records) + list(bundled_corpus()):
        if rec.label == label:
            return rec
    return None


def resolve_curve(spec: str, records: Iterable[CurveRecord] = ()) -> tuple[WeierstrassCurve, Optional[CurveRecord]]:
    """A curve from "[a1,a2,a3,a4,a6]" or a label in the loaded/bundled corpus.

    Labels are only looked up, never turned into coefficients by any rule.
    """
    spec = spec.strip()
    if spec.startswith("["):
        try:
            a = json.loads(spec)
        except json.JSONDecodeError as e:
            raise ParseError(f"cannot read curve {spec!r}: {e.msg}", None, e.colno) from None
        if not isinstance(a, list) or len(a) != 5 or not all(_is_int(x) for x in a):
            raise ParseError(f"curve must be five integers, got {spec!r}")
        return WeierstrassCurve(*a), None
    rec = find_record(spec, records)
    if rec is None:
        raise ParseError(f"unknown curve label {spec!r}; pass coefficients or a corpus file")
    return rec.curve, rec


def write_corpus(records: Iterable[CurveRecord], path) -> None:
    Path(path).write_text("".join(r.to_json() + "\n" for r in records), encoding="utf-8")
