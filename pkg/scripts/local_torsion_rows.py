"""Check (Tor) at the listed local torsion prime for every bundled table curve.

    python scripts/local_torsion_rows.py [--scan] [--jobs 4]

With --scan, also list every prime in [3, listed prime] where (Tor) fails,
which shows whether the listed prime is the first one.
"""
import argparse
import time

from ecbound.corpus import bundled_corpus
from ecbound.torsion import check_tor, scan_local_torsion


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--scan", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    bad = 0
    for rec in bundled_corpus():
        if not rec.expected_local_torsion:
            continue
        E = rec.curve
        for p in rec.expected_local_torsion:
            t0 = time.perf_counter()
            v = check_tor(E, p)
            line = f"{rec.label:8} p={p:<5} {v.status.value:7} {v.provenance:16} {time.perf_counter() - t0:.3f}s"
            if args.scan:
                hits = scan_local_torsion(E, 3, p, deep=False, jobs=args.jobs)
                line += "  fails at " + ",".join(str(q) for q, w in hits if w.status.value == "fails")
            print(line)
            bad += v.status.value != "fails"
    print(f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
