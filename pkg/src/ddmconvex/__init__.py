"""Directed discrete midpoint convexity: verifiers, minimizers and examples."""
from .classify import (ClassificationReport, Verdict, Witness, check_ddm_characterization, check_parallelogram,
                       classify, classify_dmc, is_box_domain, is_ddm_convex, is_ddm_set, is_dmc_set,
                       is_globally_dmc, is_integrally_convex, is_lnat_by_argmax_exchange, is_lnat_convex,
                       is_locally_dmc, is_submodular, is_translation_submodular, local_convex_envelope)
from .continuous import (ContinuousFunction, RealBox, continuous_argmin, fractional_restriction,
                         verify_continuous_proximity, verify_r_ddm)
from .errors import (DescentError, DimensionMismatchError, EmptyDecompositionError, LPError,
                     NonConvexPieceError, NotDiagonallyDominantError, ResourceLimitError, SpecError,
                     UnboundedDomainError)
from .functions import (INF, Box, LatticeFunction, QuadraticSpec, TwoSeparableSpec, UnivariateConvex, combine,
                        direct_sum, indicator, infconv, infconv_separable, nonneg_sum, project,
                        quadratic_function, quadratic_is_diag_dominant, quadratic_to_two_separable, restrict,
                        separable_function, table_function, transform, two_separable_function)
from .gallery import run_gallery
from .lattice import (LevelSetPair, chebyshev_distance, directed_midpoint_pair, is_midpoint_pair,
                      level_set_decomposition, level_set_directions, midpoint_decompose, mu,
                      rounded_midpoint_pair)
from .minimize import (DescentTrace, ScalingTrace, box_barrier_verify, brute_force_argmin, is_global_min,
                       one_neighborhood_argmin, scaling_minimize, steepest_descent, verify_proximity)
from .spec_io import parse_function_spec

__version__ = "0.1.0"
