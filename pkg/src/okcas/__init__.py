"""Exact Okounkov BC interpolation polynomials and restricted Casimir expansions."""

__version__ = "0.1.0"
