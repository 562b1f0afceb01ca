"""Catalan words, 123-avoiding permutations and the maj-difference bijection."""
from .bijection import phi, phi_inverse
from .permutations import Permutation
from .qseries import LaurentPoly
from .tableaux import Tableau
from .words import BinaryWord, CatalanWord, FamilyKey, HalfWord

__all__ = ["phi", "phi_inverse", "Permutation", "LaurentPoly", "Tableau",
           "BinaryWord", "CatalanWord", "FamilyKey", "HalfWord"]
