"""Compare the Z/p^2 lift test with the division-polynomial oracle on random curves.

    python scripts/oracle_agreement.py --pairs 500 --primes 5 7 11 13 17
"""
import argparse
import random
import time
from collections import Counter

from ecbound.divpoly import local_p_torsion_x
from ecbound.errors import SingularCurve
from ecbound.frobenius import count_points
from ecbound.torsion import TorStatus, order_p_lift_test
from ecbound.weierstrass import WeierstrassCurve, minimal_model


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--primes", type=int, nargs="+", default=[5, 7, 11, 13])
    ap.add_argument("--coeff", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tally = Counter()
    t0 = time.perf_counter()
    while sum(tally.values()) < args.pairs:
        try:
            E, _ = minimal_model(WeierstrassCurve(*(rng.randint(-args.coeff, args.coeff) for _ in range(5))))
        except SingularCurve:
            continue
        for p in args.primes:
            if E.disc % p == 0 or count_points(E, p) != p:
                continue
            lift = order_p_lift_test(E, p).status is TorStatus.FAILS
            oracle = bool(local_p_torsion_x(E, p))
            tally[(lift, oracle)] += 1
            if lift != oracle:
                print(f"DISAGREE {E} p={p} lift={lift} oracle={oracle}")
    agree = tally[(True, True)] + tally[(False, False)]
    print(f"{sum(tally.values())} pairs: {agree} agree, {tally[(True, True)]} with local torsion, "
          f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
