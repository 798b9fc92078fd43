"""Quantum metalanguage toolkit.

Coherent states in a truncated Fock basis, a substructural assertion calculus
with complex assertion degrees and a reflection principle, extraction of a
qubit from a pair of coherent states, and a small quantum-robot simulator
whose re-supplied qubits come out of that extraction.
"""

from .complexvalue import ComplexValue
from .config import Config

__version__ = "0.1.0"

__all__ = ["ComplexValue", "Config", "__version__"]
