"""Finite-dimensional coalgebras, co-Frobenius and symmetric structure, over Q."""

__version__ = "0.1.0"
