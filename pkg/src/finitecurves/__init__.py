"""Finite real algebraic curves: bounds, patchwork constructions, certified counts."""

from . import bounds, certify, dessins, geom, patchwork, poly

__all__ = ["bounds", "certify", "dessins", "geom", "patchwork", "poly"]
__version__ = "0.1.0"
