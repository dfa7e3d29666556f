"""Computations on finitely presented locally finite infinite graphs."""

from .graph import FiniteGraph, GraphInputError
from .presentation import EndHandle, Presentation, ball, default_handle

__all__ = ["FiniteGraph", "GraphInputError", "EndHandle", "Presentation", "ball", "default_handle"]
__version__ = "0.1.0"
