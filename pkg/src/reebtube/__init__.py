"""Exact-arithmetic models of compact Hermitian symmetric spaces and
verification of isometric-Reeb-flow tube geometry."""

from .roots import (RootSystem, build_root_system, cartan_integer, inner,
                    root_string, simple_coefficients, weyl_orbit)
from .chevalley import (AlgebraElement, StructureConstants, bracket,
                        coroot_expansion, invariant_form, is_compact_form,
                        structure_constants, verify_basis_properties)
from .hermitian import (HermitianSpaceModel, Omega, build_space, marked_nodes,
                        maximal_abelian, real_bracket)
from .curvature import (JacobiOperator, K0Decomposition, NoncompactSplit,
                        curvature_tensor, is_lie_triple, jacobi_operator,
                        jacobi_spectrum_u_delta, k0_decomposition,
                        split_noncompact, verify_accoeff)
from .tubes import (FocalModel, TubeModel, focal_data, focal_set_reconstruction,
                    focal_shape_operator, jacobi_ode_shape_operator,
                    principal_curvature_identities, reeb_isometry_check,
                    tube_shape_operator)
from .spaces import SpaceSpec, parse_space_spec

__version__ = "0.1.0"

__all__ = [
    "RootSystem", "build_root_system", "cartan_integer", "inner", "root_string",
    "simple_coefficients", "weyl_orbit",
    "AlgebraElement", "StructureConstants", "bracket", "coroot_expansion",
    "invariant_form", "is_compact_form", "structure_constants",
    "verify_basis_properties",
    "HermitianSpaceModel", "Omega", "build_space", "marked_nodes",
    "maximal_abelian", "real_bracket",
    "JacobiOperator", "K0Decomposition", "NoncompactSplit", "curvature_tensor",
    "is_lie_triple", "jacobi_operator", "jacobi_spectrum_u_delta",
    "k0_decomposition", "split_noncompact", "verify_accoeff",
    "FocalModel", "TubeModel", "focal_data", "focal_set_reconstruction",
    "focal_shape_operator", "jacobi_ode_shape_operator",
    "principal_curvature_identities", "reeb_isometry_check", "tube_shape_operator",
    "SpaceSpec", "parse_space_spec",
    "__version__",
]
