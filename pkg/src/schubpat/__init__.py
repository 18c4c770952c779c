"""Exact computation and batch verification for Schubert-polynomial
pattern combinatorics: Rothe diagrams, dominance enumeration, dual
characters of flagged Weyl modules, alternating subword expansions, the
pattern-expansion coefficients c_w, and purple-box monomial families.
"""

from .permwords import Permutation, Word
from .diagrams import Diagram
from .polyx import Monomial, Polynomial

__all__ = ["Permutation", "Word", "Diagram", "Monomial", "Polynomial"]
__version__ = "0.1.0"
