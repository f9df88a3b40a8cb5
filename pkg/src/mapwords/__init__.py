"""Combinatorial maps, quasi-trees, chord diagrams and occurrence words."""

from .perm import DomainError, Permutation
from .maps import Map, RootedMap, dual, genus, loads, dumps
from .quasitree import count_quasi_trees, is_quasi_tree, list_quasi_trees
from .chords import BicoloredDiagram, diagram_of, reconstruct, pivot_diagram
from .dfs import early_tree, late_tree, is_tremaux
from .poset import build_poset
from .words import count_G, has_P, has_Q, has_N, has_Nprime, word_to_map

__all__ = [
    "DomainError", "Permutation", "Map", "RootedMap", "dual", "genus", "loads",
    "dumps", "count_quasi_trees", "is_quasi_tree", "list_quasi_trees",
    "BicoloredDiagram", "diagram_of", "reconstruct", "pivot_diagram",
    "early_tree", "late_tree", "is_tremaux", "build_poset", "count_G", "has_P",
    "has_Q", "has_N", "has_Nprime", "word_to_map",
]
