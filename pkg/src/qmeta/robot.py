"""Quantum robot on a ring lattice with an on-board register.

The joint state lives on ``position (L cells) x register (w qubits)`` and is
stored as an array of shape ``(L, 2, ..., 2)``; flattened, index
``pos * 2**w + bits`` with qubit 0 the most significant bit. A task alternates
computation phases (one-qubit gates on the register) and action phases (a
register qubit controls a one-cell move).

Decoherence is modelled as a Born-rule collapse of the whole register in the
computational basis. The qubit the phase acted on is then re-supplied with an
admissible qubit extracted from a pair of coherent states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import BadGate, NormDrift, NotAdmissible, QubitIndexOutOfRange, StateTooLarge
from .semantics import QubitState, metadata_check, qubit_extract, solve_symmetric_metadata

MAX_WIDTH = 3
MAX_CELLS = 16
MAX_DIM = 128
NORM_TOL = 1e-9
RESUPPLY_TOL = 1e-9
RNG_ALGORITHM = "numpy.random.PCG64"

GATES = ("H", "X", "Z", "PHASE")


def gate_matrix(gate: str, theta: float | None = None) -> np.ndarray:
    if gate == "H":
        return np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
    if gate == "X":
        return np.array([[0, 1], [1, 0]], dtype=np.complex128)
    if gate == "Z":
        return np.array([[1, 0], [0, -1]], dtype=np.complex128)
    if gate == "PHASE":
        return np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=np.complex128)
    raise BadGate(f"unknown gate {gate!r}; expected one of {', '.join(GATES)}")


@dataclass(frozen=True)
class Lattice:
    size: int

    def __post_init__(self):
        if not 2 <= self.size <= MAX_CELLS:
            raise ValueError(f"lattice size must be in 2..{MAX_CELLS}, got {self.size}")


@dataclass(frozen=True)
class Compute:
    gate: str
    qubit: int
    theta: float | None = None

    def __post_init__(self):
        if self.gate not in GATES:
            raise BadGate(f"unknown gate {self.gate!r}; expected one of {', '.join(GATES)}")
        if (self.gate == "PHASE") != (self.theta is not None):
            raise BadGate("PHASE needs an angle theta and the other gates take none")


@dataclass(frozen=True)
class Act:
    """Register qubit ``qubit`` in state 1 moves the robot by ``direction``; 0 stays."""

    qubit: int
    direction: int = 1

    def __post_init__(self):
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")

    def inverse(self) -> "Act":
        return Act(self.qubit, -self.direction)


Phase = Union[Compute, Act]


@dataclass(frozen=True)
class Task:
    phases: tuple = ()
    width: int = 1


def _phase_from_dict(d: dict) -> Phase:
    op = d.get("op")
    if op == "compute":
        return Compute(str(d.get("gate")), int(d["qubit"]),
                       None if d.get("theta") is None else float(d["theta"]))
    if op == "act":
        return Act(int(d["qubit"]), int(d.get("direction", 1)))
    raise BadGate(f"unknown phase op {op!r}; expected 'compute' or 'act'")


def build_task(phases: Sequence[Phase | dict], width: int = 1) -> Task:
    """Validate a phase list against the register width.

    Phases may be given as objects or as dicts such as
    ``{"op": "compute", "gate": "H", "qubit": 0}`` / ``{"op": "act", "qubit": 0}``.
    """
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"register width must be in 1..{MAX_WIDTH}")
    out = []
    for ph in phases:
        if isinstance(ph, dict):
            ph = _phase_from_dict(ph)
        if not isinstance(ph, (Compute, Act)):
            raise BadGate(f"not a phase: {ph!r}")
        if not 0 <= ph.qubit < width:
            raise QubitIndexOutOfRange(f"qubit {ph.qubit} outside register of width {width}")
        out.append(ph)
    return Task(tuple(out), width)


@dataclass(frozen=True)
class DecoherenceEvent:
    step: int
    bitstring: str
    qubit: int
    supply: QubitState


@dataclass(frozen=True, eq=False)
class RobotState:
    amplitudes: np.ndarray  # shape (L, 2, ..., 2)
    decoherence_log: tuple = ()
    rng_seed: int = 0
    step_index: int = 0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def initial(cls, lattice: Lattice, width: int, seed: int = 0) -> "RobotState":
        amps = np.zeros((lattice.size,) + (2,) * width, dtype=np.complex128)
        amps[(0,) * (width + 1)] = 1.0
        return cls(amps, (), seed)

    @property
    def lattice_size(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def width(self) -> int:
        return self.amplitudes.ndim - 1

    def flat(self) -> np.ndarray:
        return self.amplitudes.reshape(-1)

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def position_marginal(self) -> np.ndarray:
        probs = np.abs(self.amplitudes) ** 2
        return probs.reshape(self.lattice_size, -1).sum(axis=1)

    def register_marginal(self) -> np.ndarray:
        probs = np.abs(self.amplitudes) ** 2
        return probs.reshape(self.lattice_size, -1).sum(axis=0)

    def __eq__(self, other):
        if not isinstance(other, RobotState):
            return NotImplemented
        return (np.array_equal(self.amplitudes, other.amplitudes)
                and self.decoherence_log == other.decoherence_log
                and self.rng_seed == other.rng_seed and self.step_index == other.step_index)

    __hash__ = None


def _apply_gate(amps: np.ndarray, U: np.ndarray, qubit: int) -> np.ndarray:
    axis = qubit + 1
    moved = np.moveaxis(amps, axis, -1) @ U.T
    return np.moveaxis(moved, -1, axis)


def _apply_act(amps: np.ndarray, act: Act) -> np.ndarray:
    out = amps.copy()
    idx = [slice(None)] * amps.ndim
    idx[act.qubit + 1] = 1
    idx = tuple(idx)
    out[idx] = np.roll(amps[idx], act.direction, axis=0)
    return out


def apply_phase(amps: np.ndarray, phase: Phase) -> np.ndarray:
    if isinstance(phase, Compute):
        return _apply_gate(amps, gate_matrix(phase.gate, phase.theta), phase.qubit)
    if isinstance(phase, Act):
        return _apply_act(amps, phase)
    raise BadGate(f"not a phase: {phase!r}")


def default_supply() -> QubitState:
    """Qubit extracted from the antipodal admissible pair ``(sqrt(ln 4), -sqrt(ln 4))``."""
    t = solve_symmetric_metadata("antipodal")
    return qubit_extract(t, -t)


def _collapse_and_resupply(amps: np.ndarray, qubit: int, rng: np.random.Generator,
                           supply: QubitState) -> tuple[np.ndarray, str]:
    L, w = amps.shape[0], amps.ndim - 1
    probs = (np.abs(amps) ** 2).reshape(L, -1).sum(axis=0)
    probs = probs / probs.sum()
    outcome = int(rng.choice(probs.size, p=probs))
    bits = tuple(int(b) for b in format(outcome, f"0{w}b"))

    spatial = amps[(slice(None),) + bits]
    spatial = spatial / np.linalg.norm(spatial)
    q = supply.vector() / math.hypot(abs(supply.lambda0), abs(supply.lambda1))
    new = np.zeros_like(amps)
    for value in (0, 1):
        target = list(bits)
        target[qubit] = value
        new[(slice(None),) + tuple(target)] = spatial * q[value]
    return new, "".join(map(str, bits))


def step(state: RobotState, phase: Phase, p_dec: float, rng: np.random.Generator,
         supply: QubitState | None = None) -> RobotState:
    """One phase, then with probability ``p_dec`` a register collapse and re-supply."""
    if not 0.0 <= p_dec <= 1.0:
        raise ValueError("p_dec must lie in [0, 1]")
    if not 0 <= phase.qubit < state.width:
        raise QubitIndexOutOfRange(f"qubit {phase.qubit} outside register of width {state.width}")
    amps = apply_phase(state.amplitudes, phase)
    drift = abs(float(np.vdot(amps, amps).real) - 1.0)
    if drift > NORM_TOL:
        raise NormDrift(f"norm^2 drifted by {drift:.3g} after {phase}")

    log = state.decoherence_log
    if p_dec > 0.0 and rng.random() < p_dec:
        supply = supply or default_supply()
        if not metadata_check(supply, RESUPPLY_TOL):
            raise NotAdmissible(f"re-supply qubit has constraint residual "
                                f"{supply.constraint_residual:.3g} > {RESUPPLY_TOL}")
        amps, bits = _collapse_and_resupply(amps, phase.qubit, rng, supply)
        log = log + (DecoherenceEvent(state.step_index, bits, phase.qubit, supply),)
    return RobotState(amps, log, state.rng_seed, state.step_index + 1)


@dataclass(frozen=True)
class TrajectoryReport:
    lattice_size: int
    width: int
    p_dec: float
    seed: int
    rng_algorithm: str
    position_marginals: tuple  # one tuple of L floats per phase
    final_amplitudes: tuple    # complex, flattened
    decoherence_log: tuple
    norm_squared: tuple = field(default=())

    @property
    def final_position_marginal(self) -> tuple:
        if self.position_marginals:
            return self.position_marginals[-1]
        probs = [abs(z) ** 2 for z in self.final_amplitudes]
        k = len(probs) // self.lattice_size
        return tuple(sum(probs[i * k:(i + 1) * k]) for i in range(self.lattice_size))


def run_task(task: Task, lattice: Lattice, width: int | None = None, p_dec: float = 0.0,
             seed: int = 0, supply: QubitState | None = None) -> TrajectoryReport:
    """Fold :func:`step` over the task from ``|pos=0>|0...0>``.

    Identical arguments give a bit-identical report.
    """
    width = task.width if width is None else width
    if width < task.width:
        raise QubitIndexOutOfRange(f"task needs {task.width} qubits, register has {width}")
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"register width must be in 1..{MAX_WIDTH}")
    if lattice.size * 2 ** width > MAX_DIM:
        raise StateTooLarge(f"L * 2^w = {lattice.size * 2 ** width} exceeds {MAX_DIM}")
    for ph in task.phases:
        if ph.qubit >= width:
            raise QubitIndexOutOfRange(f"qubit {ph.qubit} outside register of width {width}")

    rng = np.random.Generator(np.random.PCG64(seed))
    state = RobotState.initial(lattice, width, seed)
    marginals, norms = [], []
    for ph in task.phases:
        state = step(state, ph, p_dec, rng, supply)
        marginals.append(tuple(float(x) for x in state.position_marginal()))
        norms.append(state.norm_squared())
    return TrajectoryReport(
        lattice_size=lattice.size, width=width, p_dec=float(p_dec), seed=seed,
        rng_algorithm=RNG_ALGORITHM,
        position_marginals=tuple(marginals),
        final_amplitudes=tuple(complex(z) for z in state.flat()),
        decoherence_log=state.decoherence_log,
        norm_squared=tuple(norms),
    )
