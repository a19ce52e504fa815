"""Monodromy models of double covers of curves and the polygonal constructions on them."""

__version__ = "0.1.0"

from .cover import BaseCurve, FiberPoint, GluedCover, MonodromyCover, Node, RelationError, SignedTower
from .perm import Perm
from .towerio import TowerFormatError, dump, dumps, load, loads
from .weyl import SignedPerm

__all__ = [
    "BaseCurve",
    "FiberPoint",
    "GluedCover",
    "MonodromyCover",
    "Node",
    "Perm",
    "RelationError",
    "SignedPerm",
    "SignedTower",
    "TowerFormatError",
    "dump",
    "dumps",
    "load",
    "loads",
]
