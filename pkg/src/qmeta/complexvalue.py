from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class ComplexValue:
    """A complex number as an immutable (re, im) pair of finite floats.

    Equality is exact field equality, so values inside propositions compare
    decidably. Use :func:`close` for tolerance-based comparisons.
    """

    re: float
    im: float = 0.0

    def __post_init__(self):
        re, im = float(self.re), float(self.im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError(f"complex value must be finite, got ({re}, {im})")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def from_polar(cls, modulus: float, phase: float) -> "ComplexValue":
        if modulus < 0:
            raise ValueError("modulus must be non-negative")
        z = cmath.rect(modulus, phase)
        return cls(z.real, z.imag)

    @property
    def modulus(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def phase(self) -> float:
        """Argument in (-pi, pi]."""
        theta = math.atan2(self.im, self.re)
        return math.pi if theta == -math.pi else theta

    def polar(self) -> tuple[float, float]:
        return self.modulus, self.phase

    def conjugate(self) -> "ComplexValue":
        return ComplexValue(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return self.modulus


ComplexLike = Union[ComplexValue, complex, float, int]


def as_complex(z: ComplexLike) -> complex:
    return complex(z)


def as_value(z: ComplexLike) -> ComplexValue:
    if isinstance(z, ComplexValue):
        return z
    z = complex(z)
    return ComplexValue(z.real, z.imag)


def close(a: ComplexLike, b: ComplexLike, tol: float = 1e-12) -> bool:
    return abs(complex(a) - complex(b)) <= tol
