"""Galois-group censuses of integer polynomials in lopsided coefficient boxes."""

__version__ = "0.1.0"
