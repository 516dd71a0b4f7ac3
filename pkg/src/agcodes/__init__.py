"""Algebraic error-correcting codes over small Galois fields.

Encoders and decoders for codes on plane curves (Hermitian over GF(9) as
the worked case), hyperbolic cascaded Reed-Solomon codes, and classical
RS codes, built on two-dimensional discrete Fourier transforms over the
field and linear recurrences from Groebner bases of point ideals.
"""

from .galois import Field, field_new, gf9, ZERO, ONE

__all__ = ["Field", "field_new", "gf9", "ZERO", "ONE"]
__version__ = "0.1.0"
