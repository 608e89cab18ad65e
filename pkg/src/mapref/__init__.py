"""mapref: maps on surfaces as permutation actions on flags.

A map is three involutions r0, r1, r2 on a flag set with
(r0*r2)^2 = 1 and a connected flag graph.  The library computes cells,
Euler characteristic, orientability, boundary structure, automorphism
groups, reflection conjugacy classes and the edge-transitive taxonomy,
and constructs families hitting prescribed reflection class data.
"""

from .analysis import AnalysisReport, analyze, classify_line
from .errors import (CapExceeded, Disconnected, EdgeOrbitBranching,
                     EdgeRelationViolated, MaprefError, NonPrime,
                     NotEdgeTransitive, NotInvolution, PartEmpty)
from .flagmap import (CellStructure, FlagMap, SurfaceReport, cells, dual,
                      euler_characteristic, from_json_dict, load_map,
                      orientability_and_boundary, petrie_dual, save_map,
                      to_json_dict, to_text, validate)
from .perm import (Perm, PermGroup, closure, compose,
                   involution_conjugacy_classes, is_primitive, is_transitive,
                   orbits, same_class_in_alt_or_sym)
from .symmetry import (ReflectionReport, TransitivityProfile,
                       automorphism_group, check_class_count_bounds,
                       quotient_map, reflections, transitivity,
                       wall_class_counts)
from .taxonomy import (GWType, check_edge_transitive_bounds, gw_type,
                       is_edge_transitive)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "CapExceeded", "CellStructure", "Disconnected",
    "EdgeOrbitBranching", "EdgeRelationViolated", "FlagMap", "GWType",
    "MaprefError", "NonPrime", "NotEdgeTransitive", "NotInvolution",
    "PartEmpty", "Perm", "PermGroup", "ReflectionReport", "SurfaceReport",
    "TransitivityProfile", "analyze", "automorphism_group", "cells",
    "check_class_count_bounds", "check_edge_transitive_bounds",
    "classify_line", "closure", "compose", "dual", "euler_characteristic",
    "from_json_dict", "gw_type", "involution_conjugacy_classes",
    "is_edge_transitive", "is_primitive", "is_transitive", "load_map",
    "orbits", "orientability_and_boundary", "petrie_dual", "quotient_map",
    "reflections", "same_class_in_alt_or_sym", "save_map", "to_json_dict",
    "to_text", "transitivity", "validate", "wall_class_counts",
]
