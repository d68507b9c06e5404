"""Artin groups of types A_n, B_n and affine A_{n-1}: normal forms, endomorphisms, classification."""

from .words import A, B, Alphabet, Family, Word, WordError, affine, parse_word
from .garside import BraidNF, braid_equal, normal_form
from .bn import Named, bn_equal, affine_equal, bn_central_power, expand, iota_B, iota_tilde_A, parse
from .endo import EndoSpec, apply, verify_homomorphism
from .classify import BarWord, bar_equal, classify_bar, classify_raw

__version__ = "0.1.0"
