"""Run a robot task and print the position marginal after every phase."""

import argparse
import json
from pathlib import Path

from qmeta.dsl import to_json
from qmeta.robot import Lattice, build_task, run_task

DEFAULT_TASK = Path(__file__).parent / "data" / "walk_task.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("task", nargs="?", default=str(DEFAULT_TASK))
    ap.add_argument("--lattice", type=int, default=8)
    ap.add_argument("--width", type=int, default=1)
    ap.add_argument("--p-dec", type=float, default=0.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="emit the full report instead of a table")
    args = ap.parse_args()

    doc = json.loads(Path(args.task).read_text())
    task = build_task(doc["phases"], args.width)
    report = run_task(task, Lattice(args.lattice), args.width, args.p_dec, args.seed)
    if args.json:
        print(to_json(report, indent=2))
        return
    for i, (ph, m) in enumerate(zip(task.phases, report.position_marginals)):
        bar = " ".join(f"{x:.3f}" for x in m)
        print(f"{i:3d} {type(ph).__name__:8s} {bar}")
    print(f"collapses: {len(report.decoherence_log)}")


if __name__ == "__main__":
    main()
