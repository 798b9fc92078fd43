"""Truncation residual ||a v - alpha v|| against the order N, next to the bound 2|alpha|^{N+1}/sqrt((N+1)!).

The last column marks where the bound holds.
"""

import argparse
import math

from qmeta.fock import eigen_residual


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", type=complex, nargs="+", default=[0.5, 1.0, 1.5, 2.0])
    ap.add_argument("--orders", type=int, nargs="+", default=[8, 16, 24, 32, 48, 64])
    args = ap.parse_args()

    print(f"{'|alpha|':>8} {'N':>4} {'residual':>12} {'bound':>12}  ok")
    for alpha in args.alpha:
        for N in args.orders:
            res = eigen_residual(alpha, N)
            bound = 2 * abs(alpha) ** (N + 1) / math.sqrt(math.factorial(N + 1))
            print(f"{abs(alpha):8.3f} {N:4d} {res:12.4e} {bound:12.4e}  {'yes' if res <= bound else 'no'}")
    print(f"\nin exact arithmetic the bound holds iff |alpha| >= sqrt(ln((N+1)/4)); "
          f"at N=32 that is {math.sqrt(math.log(33 / 4)):.4f}")


if __name__ == "__main__":
    main()
