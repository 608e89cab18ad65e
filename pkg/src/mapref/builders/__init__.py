"""Constructors for the map families the library studies."""

from .catalog import (catalog, cube_map, disc_map, polyhedron_map,
                      tetrahedron_map, torus_map)
from .cover import (CoverResult, DoubleCoverResult, Mod2CoverResult,
                    branched_double_cover, mod2_abelian_cover, voltage_cover)
from .jet import (AlgebraicJetReport, CubeJetResult, InvolutionQuadruple,
                  algebraic_jet_report, cube_jet_map, cube_symmetry_group,
                  jet_map, make_quadruple, quadruple_class_count)
from .necklace import NecklaceResult, NecklaceSpec, necklace
from .paths import (PathFamilyResult, PathFamilySpec, path_assignment,
                    path_family)
from .rotation import SignedRotationSystem, loop_system, oriented_to_flags
from .tube import (DihedralProduct, TubeMapResult, cayley_tube,
                   dihedral_product, dihedral_tube, symmetric_group_tube)

__all__ = [
    "AlgebraicJetReport", "CoverResult", "CubeJetResult", "DihedralProduct",
    "DoubleCoverResult", "InvolutionQuadruple", "Mod2CoverResult",
    "NecklaceResult", "NecklaceSpec", "PathFamilyResult", "PathFamilySpec",
    "SignedRotationSystem", "TubeMapResult", "algebraic_jet_report",
    "branched_double_cover", "catalog", "cayley_tube", "cube_jet_map",
    "cube_map", "cube_symmetry_group", "dihedral_product", "dihedral_tube",
    "disc_map", "jet_map", "loop_system", "make_quadruple",
    "mod2_abelian_cover", "necklace", "oriented_to_flags", "path_assignment",
    "path_family", "polyhedron_map", "quadruple_class_count",
    "symmetric_group_tube", "tetrahedron_map", "torus_map", "voltage_cover",
]
