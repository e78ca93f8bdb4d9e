"""Graded filiform Lie algebras and their infinitesimal deformations.

Builds the model Z_3-graded filiform Lie algebra L^{n,m,p}, computes the
space of its infinitesimal deformations (degree-0 2-cocycles vanishing
on the characteristic vector) by exact sparse linear algebra, and checks
the closed-form dimension of each of the six blocks A-F against two
independent routes: brute-force kernel computation and weight counting.
"""

from .algebra import (BasisElement, ColorLieAlgebra, InvalidParams,
                      JacobiViolation, NilindexReport, NotNilpotent, bracket,
                      build_model, color_nilindex, from_json_dict,
                      is_filiform_module, l0_is_filiform, validate_jacobi)
from .cohomology import (ALL_BLOCKS, BlockKind, Cochain2, CohomologyReport,
                         ColumnKey, ConstraintSystem, DecompositionMismatch,
                         assemble_Z2_system, block_dims, cochain_from_json,
                         cochain_to_json, cocycle_basis_json,
                         cohomology_report, delta1, delta2, is_cocycle)
from .deformation import (CharacteristicVectorViolation, DeformedLaw,
                          NotACocycle, deform, filiform_check, is_integrable)
from .formulas import (DimensionReport, IntegralityError, branch_labels,
                       dim_A, dim_B, dim_C, dim_D, dim_E, dim_F,
                       main_theorem_total)
from .grading import (AxiomViolation, CommutationFactor, GradingGroup,
                      super_factor, trivial_factor, validate_commutation_factor)
from .linalg import (DEFAULT_PRIMES, KernelBasis, SparseIntMatrix,
                     kernel_basis, nullity, rank_certified,
                     rank_fraction_free, rank_mod, write_matrix_market)
from .weights import (IndexOutOfRange, WeightModel, cochain_weight,
                      count_weight_dim, weight_sequence)

__version__ = "0.1.0"
