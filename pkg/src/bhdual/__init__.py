"""Strange duality of invertible polynomials in three variables.

Classification into the five normal forms, the transposed polynomial,
Dolgachev and Gabrielov numbers, canonical weights, Poincaré series and
characteristic functions, monodromy, T-graphs, and a golden atlas of named
singularities.
"""

from .errors import DualityError
from .invariants import dolgachev, gabrielov
from .invertible import TypedForm, WeightSystem, canonical_weights, classify, transpose
from .poly import Polynomial, parse_polynomial, render

__version__ = "0.1.0"

__all__ = [
    "DualityError", "Polynomial", "TypedForm", "WeightSystem", "canonical_weights", "classify",
    "dolgachev", "gabrielov", "parse_polynomial", "render", "transpose",
]
