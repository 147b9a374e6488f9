"""Independent correctness oracles: exact braid equality via the
left-greedy normal form, Burau matrices, and Jones polynomials of braid
closures evaluated through the Temperley-Lieb transfer construction."""

from .laurent import LaurentPoly
from .garside import NormalForm, braids_equal, canonical_word, normal_form

__all__ = [
    "LaurentPoly",
    "NormalForm",
    "braids_equal",
    "canonical_word",
    "normal_form",
]
