"""Exact enumeration of labeled trees by proper vertices, and the bijection
from colored binary trees to bicolored forests."""

from .core import (
    BLACK,
    INFINITY,
    WHITE,
    Color,
    Forest,
    LabeledTree,
    PlaneForest,
    PlaneTree,
    Side,
    SlottedTree,
    hook,
    improper_side,
    is_proper,
    min_label,
    proper_set,
    pv,
    subtree,
)
from .poly import Poly

__version__ = "0.1.0"

__all__ = [
    "BLACK", "INFINITY", "WHITE", "Color", "Forest", "LabeledTree", "PlaneForest", "PlaneTree", "Side",
    "SlottedTree", "Poly", "hook", "improper_side", "is_proper", "min_label", "proper_set", "pv", "subtree",
]
