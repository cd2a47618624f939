"""Iterative derivations on the function field of x^3 = z^2 + z over GF(2)."""

__version__ = "0.1.0"
