"""Roots of the metadata constraint for symmetric coherent pairs, with the extracted qubits."""

import argparse

from qmeta.semantics import metadata_check, qubit_extract, shape_pair, solve_symmetric_metadata


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-12)
    args = ap.parse_args()
    for shape in ("antipodal", "equal"):
        t = solve_symmetric_metadata(shape, args.tol)
        q = qubit_extract(*shape_pair(shape, t))
        v = metadata_check(q, 1e-9)
        print(f"{shape:>9}: t = {t:.15f}  lambda0 = {q.lambda0:.12f}  lambda1 = {q.lambda1:.12f}  "
              f"residual = {v.residual:.2e}  admissible(1e-9) = {v.admissible}")


if __name__ == "__main__":
    main()
