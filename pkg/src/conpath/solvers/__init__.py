"""Query layer: exact polynomial routes plus budgeted search for the hard kinds."""

from .colored import local2_search, pc_search
from .directed import (ALTERNATING_CIRCUIT, ALTERNATING_DIRECTED_PATH, HARD_KINDS, PC_CIRCUIT,
                       PC_DIRECTED_PATH, hard_directed_search, pc_directed_trail, pc_walk_to_trail)
from .dispatch import solve
from .rainbow import ClassVerdict, classify_color_classes, rainbow_search
from .search import DEFAULT_BUDGET, backtrack
from .trails import compatible_closed_trail, compatible_trail

__all__ = [
    "ALTERNATING_CIRCUIT", "ALTERNATING_DIRECTED_PATH", "ClassVerdict", "DEFAULT_BUDGET",
    "HARD_KINDS", "PC_CIRCUIT", "PC_DIRECTED_PATH", "backtrack", "classify_color_classes",
    "compatible_closed_trail", "compatible_trail", "hard_directed_search", "local2_search",
    "pc_directed_trail", "pc_search", "pc_walk_to_trail", "rainbow_search", "solve",
]
