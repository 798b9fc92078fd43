"""Schema-versioned JSON for every public value.

Each top-level document carries ``"schema": 1`` and a ``"type"`` tag;
complex numbers are ``[re, im]`` arrays. Floats go through ``repr`` so that
``from_json(to_json(x)) == x`` bit for bit.
"""

from __future__ import annotations

import json
from typing import Any, Callable

import numpy as np

from ..complexvalue import ComplexValue
from ..errors import QMLError, SchemaError
from ..fock import FockVector
from ..logic import (Assertion, ClassicalAnd, ClassicalAtom, MetaJunction, QuantumAnd,
                     QuantumAtom, ReflectionCheck, ReflectionClaim, Sequent)
from ..robot import Compute, DecoherenceEvent, Task, TrajectoryReport, build_task
from ..semantics import AssertionSemantics, MetadataVerdict, QubitState

SCHEMA_VERSION = 1


def cpair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _complex(v) -> complex:
    if (not isinstance(v, (list, tuple)) or len(v) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v)):
        raise SchemaError(f"expected a [re, im] pair, got {v!r}")
    return complex(float(v[0]), float(v[1]))


def _cvalue(v) -> ComplexValue:
    z = _complex(v)
    return ComplexValue(z.real, z.imag)


def _get(d: dict, key: str):
    try:
        return d[key]
    except (KeyError, TypeError):
        raise SchemaError(f"missing field {key!r}") from None


# encoders ------------------------------------------------------------------

def _prop_dict(p) -> dict:
    if isinstance(p, ClassicalAtom):
        return {"kind": "ClassicalAtom", "id": p.id}
    if isinstance(p, QuantumAtom):
        return {"kind": "QuantumAtom", "label": cpair(p.label)}
    if isinstance(p, ClassicalAnd):
        return {"kind": "ClassicalAnd", "left": _prop_dict(p.left), "right": _prop_dict(p.right)}
    if isinstance(p, QuantumAnd):
        return {"kind": "QuantumAnd",
                "degrees": [cpair(p.degree_left), cpair(p.degree_right)],
                "left": _prop_dict(p.left), "right": _prop_dict(p.right)}
    raise SchemaError(f"not a proposition: {p!r}")


def _assertion_dict(a: Assertion) -> dict:
    return {"degree": None if a.degree is None else cpair(a.degree),
            "prop": _prop_dict(a.prop),
            "context": [_prop_dict(g) for g in a.context]}


def _phase_dict(ph) -> dict:
    if isinstance(ph, Compute):
        d = {"op": "compute", "gate": ph.gate, "qubit": ph.qubit}
        if ph.theta is not None:
            d["theta"] = ph.theta
        return d
    return {"op": "act", "qubit": ph.qubit, "direction": ph.direction}


def _qubit_dict(q: QubitState) -> dict:
    return {"lambda0": cpair(q.lambda0), "lambda1": cpair(q.lambda1),
            "residual": q.constraint_residual, "renormalized": q.renormalized}


def _event_dict(e: DecoherenceEvent) -> dict:
    return {"step": e.step, "bitstring": e.bitstring, "qubit": e.qubit,
            "supply": _qubit_dict(e.supply)}


def _encode(x) -> tuple[str, dict]:
    if isinstance(x, ComplexValue):
        return "ComplexValue", {"value": cpair(x)}
    if isinstance(x, FockVector):
        return "FockVector", {"N": x.truncation_order,
                              "amplitudes": [cpair(z) for z in x.amplitudes],
                              "truncation_loss": x.truncation_loss}
    if isinstance(x, (ClassicalAtom, QuantumAtom, ClassicalAnd, QuantumAnd)):
        return "Proposition", {"prop": _prop_dict(x)}
    if isinstance(x, Assertion):
        return "Assertion", _assertion_dict(x)
    if isinstance(x, MetaJunction):
        return "MetaJunction", {"parts": [_assertion_dict(a) for a in x.parts]}
    if isinstance(x, Sequent):
        return "Sequent", {"antecedent": [_prop_dict(g) for g in x.antecedent],
                           "consequent": [_prop_dict(d) for d in x.consequent]}
    if isinstance(x, ReflectionClaim):
        return "ReflectionClaim", {"obj": _assertion_dict(x.obj),
                                   "meta": [_assertion_dict(a) for a in x.meta.parts]}
    if isinstance(x, ReflectionCheck):
        return "ReflectionCheck", x.to_dict()
    if isinstance(x, AssertionSemantics):
        return "AssertionSemantics", {"g": cpair(x.g), "v": x.v}
    if isinstance(x, QubitState):
        return "QubitState", _qubit_dict(x)
    if isinstance(x, MetadataVerdict):
        return "MetadataVerdict", {"admissible": x.admissible, "residual": x.residual}
    if isinstance(x, Task):
        return "Task", {"width": x.width, "phases": [_phase_dict(p) for p in x.phases]}
    if isinstance(x, TrajectoryReport):
        return "TrajectoryReport", {
            "lattice_size": x.lattice_size, "width": x.width, "p_dec": x.p_dec,
            "seed": x.seed, "rng_algorithm": x.rng_algorithm,
            "position_marginals": [list(m) for m in x.position_marginals],
            "final_amplitudes": [cpair(z) for z in x.final_amplitudes],
            "decoherence_log": [_event_dict(e) for e in x.decoherence_log],
            "norm_squared": list(x.norm_squared)}
    raise SchemaError(f"no JSON encoding for {type(x).__name__}")


def to_dict(x) -> dict:
    kind, body = _encode(x)
    return {"schema": SCHEMA_VERSION, "type": kind, **body}


def to_json(x, **dumps_kwargs) -> str:
    return json.dumps(to_dict(x), allow_nan=False, **dumps_kwargs)


# decoders ------------------------------------------------------------------

def _prop(d):
    kind = _get(d, "kind")
    if kind == "ClassicalAtom":
        ident = _get(d, "id")
        if not isinstance(ident, str):
            raise SchemaError("ClassicalAtom id must be a string")
        return ClassicalAtom(ident)
    if kind == "QuantumAtom":
        return QuantumAtom(_cvalue(_get(d, "label")))
    if kind == "ClassicalAnd":
        return ClassicalAnd(_prop(_get(d, "left")), _prop(_get(d, "right")))
    if kind == "QuantumAnd":
        degrees = _get(d, "degrees")
        if not isinstance(degrees, list) or len(degrees) != 2:
            raise SchemaError("QuantumAnd needs exactly two degrees")
        return QuantumAnd(_cvalue(degrees[0]), _cvalue(degrees[1]),
                          _prop(_get(d, "left")), _prop(_get(d, "right")))
    raise SchemaError(f"unknown proposition kind {kind!r}")


def _assertion(d) -> Assertion:
    deg = _get(d, "degree")
    return Assertion(_prop(_get(d, "prop")), None if deg is None else _cvalue(deg),
                     tuple(_prop(g) for g in d.get("context", [])))


def _qubit(d) -> QubitState:
    return QubitState(_complex(_get(d, "lambda0")), _complex(_get(d, "lambda1")),
                      bool(d.get("renormalized", False)))


def _event(d) -> DecoherenceEvent:
    return DecoherenceEvent(int(_get(d, "step")), str(_get(d, "bitstring")),
                            int(_get(d, "qubit")), _qubit(_get(d, "supply")))


def _fock(d) -> FockVector:
    amps = np.array([_complex(z) for z in _get(d, "amplitudes")], dtype=np.complex128)
    if amps.size != int(_get(d, "N")) + 1:
        raise SchemaError("FockVector length does not match N + 1")
    return FockVector(amps, float(d.get("truncation_loss", 0.0)))


_DECODERS: dict[str, Callable[[dict], Any]] = {
    "ComplexValue": lambda d: _cvalue(_get(d, "value")),
    "FockVector": _fock,
    "Proposition": lambda d: _prop(_get(d, "prop")),
    "Assertion": _assertion,
    "MetaJunction": lambda d: MetaJunction(tuple(_assertion(a) for a in _get(d, "parts"))),
    "Sequent": lambda d: Sequent(tuple(_prop(g) for g in _get(d, "antecedent")),
                                 tuple(_prop(x) for x in _get(d, "consequent"))),
    "ReflectionClaim": lambda d: ReflectionClaim(
        _assertion(_get(d, "obj")), MetaJunction(tuple(_assertion(a) for a in _get(d, "meta")))),
    "ReflectionCheck": lambda d: ReflectionCheck(bool(_get(d, "ok")), d.get("code"),
                                                 d.get("message", "")),
    "AssertionSemantics": lambda d: AssertionSemantics(_complex(_get(d, "g")), float(_get(d, "v"))),
    "QubitState": _qubit,
    "MetadataVerdict": lambda d: MetadataVerdict(bool(_get(d, "admissible")),
                                                 float(_get(d, "residual"))),
    "Task": lambda d: build_task(list(_get(d, "phases")), int(d.get("width", 1))),
    "TrajectoryReport": lambda d: TrajectoryReport(
        lattice_size=int(_get(d, "lattice_size")), width=int(_get(d, "width")),
        p_dec=float(_get(d, "p_dec")), seed=int(_get(d, "seed")),
        rng_algorithm=str(_get(d, "rng_algorithm")),
        position_marginals=tuple(tuple(float(x) for x in m) for m in _get(d, "position_marginals")),
        final_amplitudes=tuple(_complex(z) for z in _get(d, "final_amplitudes")),
        decoherence_log=tuple(_event(e) for e in _get(d, "decoherence_log")),
        norm_squared=tuple(float(x) for x in d.get("norm_squared", []))),
}


def from_dict(d: dict, expected: str | None = None):
    if not isinstance(d, dict):
        raise SchemaError("a JSON document must be an object")
    version = d.get("schema")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {version!r}; expected {SCHEMA_VERSION}")
    kind = d.get("type", expected)
    if expected is not None and kind != expected:
        raise SchemaError(f"expected a {expected} document, got {kind!r}")
    decoder = _DECODERS.get(kind)
    if decoder is None:
        raise SchemaError(f"unknown document type {kind!r}")
    try:
        return decoder(d)
    except QMLError:
        raise
    except (TypeError, ValueError, KeyError) as exc:
        raise SchemaError(f"malformed {kind} document: {exc}") from exc


def from_json(text: str | bytes | dict, expected: str | None = None):
    if isinstance(text, dict):
        return from_dict(text, expected)
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return from_dict(d, expected)
