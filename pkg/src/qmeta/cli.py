"""Command-line front end.

Every subcommand prints one JSON document on stdout. Exit status is 0 on
success, 1 for a domain error (machine-readable code on stderr) and 2 for a
usage error. Defaults for ``--fock-n``, ``--tol`` and ``--seed`` can be set
through ``QML_FOCK_N``, ``QML_TOL`` and ``QML_SEED``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fock, logic, robot, semantics
from .config import Config
from .dsl import format as fmt
from .dsl import parse, parse_complex, to_dict
from .dsl.jsonio import cpair
from .errors import QMLError, SchemaError


class _Mismatch(Exception):
    """A command whose JSON result is itself a failed check."""

    def __init__(self, payload: dict, code: str, message: str):
        self.payload, self.code, self.message = payload, code, message


def _complex_arg(text: str) -> complex:
    return complex(parse_complex(text))


def _read_source(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else Path(arg).read_text(encoding="utf-8")


def cmd_parse(args, cfg):
    node = parse(_read_source(args.source))
    return {"ast": to_dict(node), "canonical": fmt(node)}


def cmd_reflect(args, cfg):
    node = parse(args.expr)
    if isinstance(node, logic.MetaJunction) and len(node) >= 2:
        out = logic.reflect_down(node)
        return {"direction": "down", "result": fmt(out), "ast": to_dict(out)}
    if isinstance(node, logic.MetaJunction):
        out = logic.reflect_up(node.parts[0])
        return {"direction": "up", "result": fmt(out), "ast": to_dict(out)}
    if isinstance(node, logic.ReflectionClaim):
        return _check(node.meta, node.obj)
    raise SchemaError(f"cannot reflect a {type(node).__name__}")


def _check(meta, obj):
    verdict = logic.check_reflection(meta, obj)
    payload = {"meta": fmt(meta), "obj": fmt(obj), **verdict.to_dict()}
    if not verdict.ok:
        raise _Mismatch(payload, verdict.code, verdict.message)
    return payload


def cmd_check(args, cfg):
    meta = parse(args.meta)
    obj = parse(args.obj)
    if not isinstance(meta, logic.MetaJunction):
        raise SchemaError("META must be a metajunction")
    if not isinstance(obj, logic.MetaJunction) or len(obj) != 1:
        raise SchemaError("OBJ must be a single assertion")
    return _check(meta, obj.parts[0])


def cmd_truth(args, cfg):
    alpha = _complex_arg(args.alpha)
    sem = semantics.assertion_semantics(alpha, args.fock_n)
    return {"alpha": cpair(alpha), "fock_n": args.fock_n, "g": cpair(sem.g), "v": sem.v,
            "closed_form": {"g": cpair(alpha), "v": abs(alpha) ** 2}}


def cmd_overlap(args, cfg):
    a, b = _complex_arg(args.a), _complex_arg(args.b)
    analytic = fock.overlap_analytic(b, a)
    numeric = fock.inner_product(fock.coherent_fock(b, args.fock_n), fock.coherent_fock(a, args.fock_n))
    return {"alpha": cpair(a), "beta": cpair(b), "fock_n": args.fock_n,
            "analytic": cpair(analytic), "numeric": cpair(numeric),
            "abs_difference": abs(analytic - numeric)}


def cmd_qubit(args, cfg):
    q = semantics.qubit_extract(_complex_arg(args.a), _complex_arg(args.b))
    if args.renormalize:
        q = semantics.renormalize(q)
    verdict = semantics.metadata_check(q, cfg.tol_meta)
    return {"qubit": to_dict(q), "admissible": verdict.admissible, "tol_meta": cfg.tol_meta}


def cmd_solve_meta(args, cfg):
    t = semantics.solve_symmetric_metadata(args.shape, args.tol)
    q = semantics.qubit_extract(*semantics.shape_pair(args.shape, t))
    return {"shape": args.shape, "tol": args.tol, "root": t,
            "qubit": to_dict(q), "residual": q.constraint_residual}


def cmd_sim(args, cfg):
    doc = json.loads(_read_source(args.task))
    if not isinstance(doc, dict) or doc.get("schema") != 1:
        raise SchemaError("task document must be a JSON object with \"schema\": 1")
    task = robot.build_task(doc.get("phases", []), args.width)
    report = robot.run_task(task, robot.Lattice(args.lattice), args.width, args.p_dec, args.seed)
    return to_dict(report)


def build_parser(cfg: Config) -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qml", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", help="parse a file (or - for stdin) to AST JSON")
    s.add_argument("source")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("reflect", help="reflect a metajunction down, or a compound assertion up")
    s.add_argument("expr")
    s.set_defaults(func=cmd_reflect)

    s = sub.add_parser("check", help="check a definitional equation OBJ iff META")
    s.add_argument("meta")
    s.add_argument("obj")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("truth", help="assertion and truth degree of |-^alpha p_alpha")
    s.add_argument("alpha")
    s.add_argument("--fock-n", type=int, default=cfg.fock_n)
    s.set_defaults(func=cmd_truth)

    s = sub.add_parser("overlap", help="<B|A> in closed form and on truncated vectors")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--fock-n", type=int, default=cfg.fock_n)
    s.set_defaults(func=cmd_overlap)

    s = sub.add_parser("qubit", help="extract the qubit from |A> + |B>")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--renormalize", action="store_true")
    s.set_defaults(func=cmd_qubit)

    s = sub.add_parser("solve-meta", help="solve the metadata constraint for a symmetric pair")
    s.add_argument("shape", choices=["antipodal", "equal"])
    s.add_argument("--tol", type=float, default=cfg.tol)
    s.set_defaults(func=cmd_solve_meta)

    s = sub.add_parser("sim", help="run a robot task from a JSON document")
    s.add_argument("task")
    s.add_argument("--lattice", type=int, required=True)
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--p-dec", type=float, default=0.0)
    s.add_argument("--seed", type=int, default=cfg.seed)
    s.set_defaults(func=cmd_sim)
    return ap


def _emit_error(code: str, message: str, extra: dict | None = None) -> None:
    print(json.dumps({"error": code, "message": message, **(extra or {})}), file=sys.stderr)


def main(argv=None) -> int:
    try:
        cfg = Config.from_env()
    except ValueError as exc:
        _emit_error("E_USAGE", f"bad QML_ environment default: {exc}")
        return 2
    ap = build_parser(cfg)
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = args.func(args, cfg)
    except _Mismatch as m:
        print(json.dumps(m.payload))
        _emit_error(m.code, m.message)
        return 1
    except QMLError as exc:
        d = exc.to_dict()
        _emit_error(d.pop("error"), d.pop("message"), d)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        _emit_error("E_INPUT", str(exc))
        return 1
    except ValueError as exc:
        _emit_error("E_DOMAIN", str(exc))
        return 1
    print(json.dumps(payload))
    return 0


if __name__ == "__main__":
    sys.exit(main())
