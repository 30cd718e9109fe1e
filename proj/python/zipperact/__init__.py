"""Zipper actions of Thompson-like groups V_d(H)."""

from ._zipperact import (
    Element,
    Structure,
    ZipperError,
    audit,
    cocycle_defect,
    nowalls,
    validate_automaton,
    wall_separation,
)

__all__ = [
    "Element",
    "Structure",
    "ZipperError",
    "audit",
    "cocycle_defect",
    "nowalls",
    "validate_automaton",
    "wall_separation",
]
