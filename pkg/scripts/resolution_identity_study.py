"""Residual of the truncated resolution of identity over cut-off radius and grid size."""

import argparse

from qmeta.errors import QuadratureUnderResolved
from qmeta.fock import QuadratureGrid, identity_resolution_residual


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=8)
    ap.add_argument("--radii", type=float, nargs="+", default=[3.0, 4.0, 5.0, 6.0, 7.0])
    ap.add_argument("--radial", type=int, nargs="+", default=[8, 24, 48, 96])
    ap.add_argument("--tol", type=float, default=1e-6)
    args = ap.parse_args()

    print(f"{'R':>5} {'radial':>7} {'residual':>12}")
    for R in args.radii:
        for radial in args.radial:
            try:
                res = identity_resolution_residual(args.N, R, QuadratureGrid(radial=radial), tol=args.tol)
                cell = f"{res:12.4e}"
            except QuadratureUnderResolved as exc:
                cell = f"{'unresolved':>12}  ({exc})"
            print(f"{R:5.1f} {radial:7d} {cell}")


if __name__ == "__main__":
    main()
