"""
Planar open books
Contact structures, their homotopy invariants and the planarity obstruction.
"""

from .app import app

__all__ = ["app"]
