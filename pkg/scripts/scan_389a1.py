"""Scan 389a1 for primes where E(Q_p)[p] != 0.

    python scripts/scan_389a1.py --pmax 1000000 --jobs 8

The default bound 10^4 takes well under a second; 10^6 is a few minutes
on one core since each prime costs one O(p) point count.
"""
import argparse
import time

from ecbound.frobenius import count_points
from ecbound.numth import primes_between
from ecbound.torsion import scan_local_torsion
from ecbound.weierstrass import WeierstrassCurve


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmin", type=int, default=3)
    ap.add_argument("--pmax", type=int, default=10**4)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    E = WeierstrassCurve(0, 1, 1, -2, 0)
    t0 = time.perf_counter()
    hits = scan_local_torsion(E, args.pmin, args.pmax, deep=True, jobs=args.jobs)
    dt = time.perf_counter() - t0
    for p, v in hits:
        print(v.scan_line(p))
    anomalous = [p for p in primes_between(max(args.pmin, 5), min(args.pmax, 10**5))
                 if p != 389 and count_points(E, p) == p]
    print(f"{len(hits)} primes flagged in [{args.pmin}, {args.pmax}] ({dt:.2f}s)")
    print(f"anomalous primes below {min(args.pmax, 10**5)} (all decided by the lift test): {anomalous}")


if __name__ == "__main__":
    main()
