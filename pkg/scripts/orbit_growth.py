"""Growth of the orbit of e under the composite of the two Beauville involutions.

The log of the largest coordinate should grow linearly with slope log(beta).
"""

import argparse
import math

from k3lat.hilb2 import BeauvillePolarization, beauville_involution, orbit, symbolic_family
from k3lat.lattice import compose, pair
from k3lat.poly import order_certificate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, default=21)
    ap.add_argument("-n", type=int, default=30)
    args = ap.parse_args()
    hl, h1, h2 = symbolic_family(args.m)
    i1 = beauville_involution(hl, BeauvillePolarization(h1, True))
    i2 = beauville_involution(hl, BeauvillePolarization(h2, True))
    a = compose(i1, i2)
    lo, hi = order_certificate(a).interval
    beta = float((lo + hi) / 2)
    cls = orbit(hl, a, hl.e, args.n)
    print(f"m = {args.m}, beta ~ {beta:.9f}, log beta = {math.log(beta):.6f}")
    print(f"{'n':>3}  {'digits':>6}  {'log max|c| / n':>15}  square")
    for n, c in enumerate(cls):
        big = max(abs(x) for x in c.coords)
        rate = math.log(big) / n if n else float("nan")
        print(f"{n:>3}  {len(str(big)):>6}  {rate:>15.6f}  {pair(c, c)}")


if __name__ == "__main__":
    main()
