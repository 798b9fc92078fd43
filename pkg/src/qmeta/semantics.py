"""Hilbert-space reading of the calculus.

Classical atoms are projectors on a qubit, quantum atoms are coherent states,
assertion degrees are eigenvalues of the annihilation operator, and the
quantum connective is a superposition from which a qubit is read off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .complexvalue import ComplexLike
from .errors import DegreeOutOfRange, NoRoot, UnknownAtom, ZeroState
from .logic import DEGREE_SLACK, ClassicalAtom, QuantumAtom

TOL_META = 1e-6

KET0 = np.array([1.0, 0.0], dtype=np.complex128)
KET1 = np.array([0.0, 1.0], dtype=np.complex128)


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ProjectorPair:
    P0: np.ndarray
    P1: np.ndarray


PROJECTORS = ProjectorPair(_frozen(np.diag([1.0, 0.0])), _frozen(np.diag([0.0, 1.0])))


def interpret_classical_atom(atom: ClassicalAtom | str) -> np.ndarray:
    """``p0`` -> ``P_0 = diag(1, 0)``, ``p1`` -> ``P_1 = diag(0, 1)``."""
    name = atom.id if isinstance(atom, ClassicalAtom) else atom
    if name == "p0":
        return PROJECTORS.P0
    if name == "p1":
        return PROJECTORS.P1
    raise UnknownAtom(f"no projector for classical atom {name!r}; only p0 and p1 are interpreted")


def interpret_quantum_atom(atom: QuantumAtom, N: int = fock.DEFAULT_N) -> fock.FockVector:
    return fock.coherent_fock(complex(atom.label), N)


@dataclass(frozen=True)
class AssertionSemantics:
    """Assertion degree ``g`` and truth degree ``v = |g|^2``."""

    g: complex
    v: float


def assertion_semantics(alpha: ComplexLike, N: int = fock.DEFAULT_N) -> AssertionSemantics:
    """Compute ``g = <a|a|a>`` and ``v = <a|a^+ a|a>`` on the truncated state.

    Both are divided by the squared norm of the truncated vector; for moderate
    N they agree with ``g = alpha`` and ``v = |alpha|^2`` to rounding.
    """
    alpha = complex(alpha)
    if abs(alpha) > 1.0 + DEGREE_SLACK:
        raise DegreeOutOfRange(f"|alpha| = {abs(alpha):.6g} > 1 gives a truth degree outside [0, 1]")
    state = fock.coherent_fock(alpha, N)
    lowered = fock.annihilate(state)
    n2 = state.norm_squared()
    g = fock.inner_product(state, lowered) / n2
    v = fock.inner_product(lowered, lowered).real / n2
    return AssertionSemantics(g, v)


def superpose_state(alpha: ComplexLike, beta: ComplexLike, N: int = fock.DEFAULT_N,
                    weighted: bool = False) -> fock.FockVector:
    """``|alpha> + |beta>``, or ``alpha|alpha> + beta|beta>`` when ``weighted``.

    The result is left unnormalized; read its norm off the vector.
    """
    alpha, beta = complex(alpha), complex(beta)
    a, b = fock.coherent_fock(alpha, N), fock.coherent_fock(beta, N)
    if weighted:
        return alpha * a + beta * b
    return a + b


@dataclass(frozen=True)
class QubitState:
    lambda0: complex
    lambda1: complex
    renormalized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lambda0", complex(self.lambda0))
        object.__setattr__(self, "lambda1", complex(self.lambda1))

    @property
    def constraint_residual(self) -> float:
        a, b = abs(self.lambda0), abs(self.lambda1)
        return abs(a * a + b * b - 1.0)  # inf rather than OverflowError for huge entries

    residual = constraint_residual

    def vector(self) -> np.ndarray:
        return np.array([self.lambda0, self.lambda1], dtype=np.complex128)


def qubit_extract(alpha: ComplexLike, beta: ComplexLike) -> QubitState:
    """Keep the ``|0>`` and ``|1>`` components of ``|alpha> + |beta>``.

    ``lambda0 = e^{-|a|^2/2} + e^{-|b|^2/2}``, ``lambda1 = a e^{-|a|^2/2} + b e^{-|b|^2/2}``.
    No normalization is applied; see :func:`metadata_check` and :func:`renormalize`.
    """
    alpha, beta = complex(alpha), complex(beta)
    ea = math.exp(-abs(alpha) ** 2 / 2)
    eb = math.exp(-abs(beta) ** 2 / 2)
    return QubitState(ea + eb, alpha * ea + beta * eb)


@dataclass(frozen=True)
class MetadataVerdict:
    admissible: bool
    residual: float

    def __bool__(self):
        return self.admissible


def metadata_check(q: QubitState, tol_meta: float = TOL_META) -> MetadataVerdict:
    if tol_meta <= 0:
        raise ValueError("tol_meta must be positive")
    r = q.constraint_residual
    return MetadataVerdict(r <= tol_meta, r)


def renormalize(q: QubitState) -> QubitState:
    s = math.hypot(abs(q.lambda0), abs(q.lambda1))  # no overflow in the squares
    if s == 0.0:
        raise ZeroState("cannot renormalize the zero qubit vector")
    if abs(s * s - 1.0) <= 1e-15 and q.renormalized:
        return q
    return QubitState(q.lambda0 / s, q.lambda1 / s, renormalized=True)


def _antipodal_gap(t: float) -> float:
    return 4.0 * math.exp(-t * t) - 1.0


def _equal_gap(t: float) -> float:
    return 4.0 * math.exp(-t * t) * (1.0 + t * t) - 1.0


SHAPES = {"antipodal": _antipodal_gap, "equal": _equal_gap}


def bisect(f, lo: float, hi: float, tol: float) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoRoot(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_symmetric_metadata(shape: str, tol: float = 1e-12) -> float:
    """Real t > 0 making the extracted qubit exactly normalized.

    ``antipodal`` (beta = -alpha = -t): ``4 e^{-t^2} = 1``, so ``t = sqrt(ln 4)``.
    ``equal`` (beta = alpha = t): root of ``4 e^{-t^2} (1 + t^2) = 1`` by bisection on [1, 3].
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if shape == "antipodal":
        return math.sqrt(math.log(4.0))
    if shape == "equal":
        return bisect(_equal_gap, 1.0, 3.0, tol)
    raise ValueError(f"unknown shape {shape!r}; expected 'antipodal' or 'equal'")


def shape_pair(shape: str, t: float) -> tuple[float, float]:
    return (t, -t) if shape == "antipodal" else (t, t)
