"""Exact tools for symmetry groups of smooth cubic hypersurfaces."""

__version__ = "0.1.0"
