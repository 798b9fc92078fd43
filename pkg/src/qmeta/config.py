"""Default numeric settings, overridable through ``QML_*`` environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_PREFIX = "QML_"


@dataclass(frozen=True)
class Config:
    fock_n: int = 64
    tol_norm: float = 1e-9
    tol_meta: float = 1e-6
    tol: float = 1e-6  # root-finding tolerance exposed by the CLI
    seed: int = 0

    @classmethod
    def from_env(cls, environ=None) -> "Config":
        environ = os.environ if environ is None else environ
        overrides = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                overrides[f.name] = int(raw) if f.type in ("int", int) else float(raw)
        return replace(cls(), **overrides)


DEFAULT = Config()
