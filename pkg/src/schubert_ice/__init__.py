"""Exact computations with bumpless pipe dreams and diagonal Groebner
degenerations of matrix Schubert varieties."""

__version__ = "0.1.0"
