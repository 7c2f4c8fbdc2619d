"""Exact computations with Jacobi diagram spaces and Johnson homomorphisms."""

__version__ = "0.1.0"
