"""Coherent states and ladder operators in a truncated Fock basis.

A :class:`FockVector` holds amplitudes ``c_0..c_N`` over the number states
``|0>..|N>``. Nothing here renormalizes silently: whatever weight a truncation
drops is kept in ``truncation_loss`` so the error budget stays visible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexvalue import ComplexLike
from .errors import NotNormalized, QuadratureUnderResolved, TruncationMismatch

DEFAULT_N = 64
TOL_NORM = 1e-9

# below exp(-600) the plain recurrence would start from a subnormal c_0
_LOG_DOMAIN_THRESHOLD = 600.0


@dataclass(frozen=True, eq=False)
class FockVector:
    amplitudes: np.ndarray
    truncation_loss: float = 0.0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size < 2:
            raise ValueError("a FockVector needs truncation order N >= 1")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "truncation_loss", float(self.truncation_loss))

    @property
    def truncation_order(self) -> int:
        return self.amplitudes.size - 1

    def __len__(self):
        return self.amplitudes.size

    def __getitem__(self, n):
        return self.amplitudes[n]

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (np.array_equal(self.amplitudes, other.amplitudes)
                and self.truncation_loss == other.truncation_loss)

    __hash__ = None

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def is_normalized(self, tol: float = TOL_NORM) -> bool:
        return abs(self.norm_squared() - 1.0) <= tol

    def __add__(self, other: "FockVector") -> "FockVector":
        _check_orders(self, other)
        return FockVector(self.amplitudes + other.amplitudes,
                          self.truncation_loss + other.truncation_loss)

    def __sub__(self, other: "FockVector") -> "FockVector":
        _check_orders(self, other)
        return FockVector(self.amplitudes - other.amplitudes,
                          self.truncation_loss + other.truncation_loss)

    def __mul__(self, scalar: ComplexLike) -> "FockVector":
        s = complex(scalar)
        return FockVector(self.amplitudes * s, self.truncation_loss * abs(s) ** 2)

    __rmul__ = __mul__

    def __repr__(self):
        return (f"FockVector(N={self.truncation_order}, "
                f"norm={self.norm():.6g}, truncation_loss={self.truncation_loss:.3g})")


def _check_orders(u: FockVector, v: FockVector) -> None:
    if u.truncation_order != v.truncation_order:
        raise TruncationMismatch(
            f"truncation orders differ: {u.truncation_order} vs {v.truncation_order}")


def number_state(n: int, N: int = DEFAULT_N) -> FockVector:
    if not 0 <= n <= N:
        raise ValueError(f"number state |{n}> outside truncation 0..{N}")
    amps = np.zeros(N + 1, dtype=np.complex128)
    amps[n] = 1.0
    return FockVector(amps)


def vacuum(N: int = DEFAULT_N) -> FockVector:
    return number_state(0, N)


def _coherent_coefficients(alpha: complex, N: int) -> np.ndarray:
    """``c_n = exp(-|a|^2/2) a^n / sqrt(n!)`` for n = 0..N by recurrence."""
    c = np.empty(N + 1, dtype=np.complex128)
    r2 = abs(alpha) ** 2
    if r2 / 2 < _LOG_DOMAIN_THRESHOLD:
        c[0] = math.exp(-r2 / 2)
        for n in range(N):
            c[n + 1] = c[n] * alpha / math.sqrt(n + 1)
        return c
    # huge |alpha|: accumulate log-magnitudes additively instead
    log_r, theta = math.log(abs(alpha)), np.angle(alpha)
    logmag = -r2 / 2
    c[0] = math.exp(logmag)
    for n in range(N):
        logmag += log_r - 0.5 * math.log(n + 1)
        c[n + 1] = math.exp(logmag) * np.exp(1j * theta * (n + 1))
    return c


def _poisson_tail(mean: float, N: int) -> float:
    """Weight ``exp(-m) sum_{n>N} m^n/n!`` of a Poisson(m) law above N."""
    if mean == 0.0:
        return 0.0
    log_m = math.log(mean)
    tail, n = 0.0, N + 1
    while True:
        term = math.exp(-mean + n * log_m - math.lgamma(n + 1))
        tail += term
        if n > mean and term <= 1e-17 * tail:
            return min(tail, 1.0)
        n += 1


def coherent_fock(alpha: ComplexLike, N: int = DEFAULT_N) -> FockVector:
    """Coherent state ``|alpha>`` truncated to number states 0..N.

    The dropped tail weight is recorded in ``truncation_loss``.

    >>> v = coherent_fock(1.0, 2)
    >>> [round(float(x.real), 6) for x in v.amplitudes]
    [0.606531, 0.606531, 0.428882]
    """
    if N < 1:
        raise ValueError("truncation order N must be >= 1")
    alpha = complex(alpha)
    return FockVector(_coherent_coefficients(alpha, N),
                      truncation_loss=_poisson_tail(abs(alpha) ** 2, N))


def inner_product(u: FockVector, v: FockVector) -> complex:
    """``<u|v>``, conjugate-linear in the first argument."""
    _check_orders(u, v)
    return complex(np.vdot(u.amplitudes, v.amplitudes))


def norm(u: FockVector) -> float:
    return math.sqrt(inner_product(u, u).real)


def annihilate(u: FockVector) -> FockVector:
    """Apply the annihilation operator; the top component becomes 0.

    ``truncation_loss`` of the result adds ``|u_N|^2``: the weight sitting at
    the cutoff, whose true image would need ``u_{N+1}``.
    """
    amps = u.amplitudes
    out = np.zeros_like(amps)
    n = np.arange(1, amps.size)
    out[:-1] = np.sqrt(n) * amps[1:]
    return FockVector(out, u.truncation_loss + float(abs(amps[-1]) ** 2))


def create(u: FockVector) -> FockVector:
    """Apply the creation operator; weight pushed above N is recorded as lost."""
    amps = u.amplitudes
    out = np.zeros_like(amps)
    n = np.arange(1, amps.size)
    out[1:] = np.sqrt(n) * amps[:-1]
    lost = amps.size * float(abs(amps[-1]) ** 2)
    return FockVector(out, u.truncation_loss + lost)


def mean_photon(u: FockVector, tol_norm: float = TOL_NORM) -> float:
    if not u.is_normalized(tol_norm):
        raise NotNormalized(f"norm^2 = {u.norm_squared():.12g} deviates from 1 by more than {tol_norm}")
    n = np.arange(u.amplitudes.size)
    return float(np.sum(n * np.abs(u.amplitudes) ** 2))


def overlap_analytic(beta: ComplexLike, alpha: ComplexLike) -> complex:
    """Closed-form ``<beta|alpha>`` of two untruncated coherent states."""
    a, b = complex(alpha), complex(beta)
    return complex(np.exp(-0.5 * (abs(b) ** 2 + abs(a) ** 2 - 2 * b.conjugate() * a)))


def eigen_residual(alpha: ComplexLike, N: int = DEFAULT_N) -> float:
    """``|| a|alpha>_N - alpha |alpha>_N ||``: how well truncation keeps the eigenrelation."""
    alpha = complex(alpha)
    v = coherent_fock(alpha, N)
    return (annihilate(v) - alpha * v).norm()


# resolution of identity --------------------------------------------------

@dataclass(frozen=True)
class QuadratureGrid:
    """Gauss-Legendre radial nodes on [0, R] times a uniform angular grid.

    ``angular=None`` picks ``4N + 8`` angles, enough to integrate every phase
    factor ``exp(i(m-n)theta)`` with ``|m-n| <= N`` to zero exactly.
    """

    radial: int = 96
    angular: int | None = None

    def angular_nodes(self, N: int) -> int:
        return self.angular if self.angular is not None else 4 * N + 8

    def refined(self, N: int) -> "QuadratureGrid":
        return QuadratureGrid(2 * self.radial, 2 * self.angular_nodes(N))


def resolution_matrix(N: int, R: float, grid: QuadratureGrid | None = None) -> np.ndarray:
    """``(1/pi) * integral over |alpha| <= R of |alpha><alpha| d^2 alpha`` in the basis 0..N."""
    if R <= 0:
        raise ValueError("integration radius R must be positive")
    if N < 0:
        raise ValueError("N must be >= 0")
    grid = grid or QuadratureGrid()
    x, w = np.polynomial.legendre.leggauss(grid.radial)
    r = 0.5 * R * (x + 1.0)
    wr = 0.5 * R * w
    K = grid.angular_nodes(N)
    theta = 2 * np.pi * np.arange(K) / K
    alphas = (r[:, None] * np.exp(1j * theta[None, :])).ravel()
    weights = (wr * r)[:, None].repeat(K, axis=1).ravel() * (2 * np.pi / K)

    # vectorised version of the coherent-state recurrence over all nodes
    C = np.empty((alphas.size, N + 1), dtype=np.complex128)
    C[:, 0] = np.exp(-np.abs(alphas) ** 2 / 2)
    for n in range(N):
        C[:, n + 1] = C[:, n] * alphas / math.sqrt(n + 1)
    return (C.T * weights) @ C.conj() / np.pi


def radial_tail(n: int, R: float) -> float:
    """Weight of diagonal entry n lying outside the disk: ``exp(-R^2) sum_{k<=n} R^2k/k!``."""
    x = R * R
    term = math.exp(-x)
    total = term
    for k in range(1, n + 1):
        term *= x / k
        total += term
    return min(total, 1.0)


def identity_resolution_residual(N: int, R: float, grid: QuadratureGrid | None = None,
                                 tol: float = 1e-6, refine_floor: float = 1e-12) -> float:
    """Max-entry deviation of the disk-restricted closure integral from the identity.

    Only indices whose radial tail beyond R is below ``tol`` are compared; the
    rest are dominated by the cut-off, not by quadrature. The integral is
    evaluated on ``grid`` and on a grid twice as fine; the residual reported is
    the fine one, and if refinement moved any entry by more than that residual
    (or ``refine_floor`` when it is at rounding level) the grid is rejected.
    """
    grid = grid or QuadratureGrid()
    keep = [n for n in range(N + 1) if radial_tail(n, R) < tol]
    if not keep:
        raise QuadratureUnderResolved(f"no index up to N={N} has radial tail below {tol} at R={R}")
    idx = np.ix_(keep, keep)
    M = resolution_matrix(N, R, grid)[idx]
    M_fine = resolution_matrix(N, R, grid.refined(N))[idx]
    residual = float(np.max(np.abs(M_fine - np.eye(len(keep)))))
    change = float(np.max(np.abs(M_fine - M)))
    if change > max(residual, refine_floor):
        raise QuadratureUnderResolved(
            f"grid refinement moved the result by {change:.3g} > residual {residual:.3g}")
    return residual
