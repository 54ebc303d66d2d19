"""Max-times (tropical) linear algebra: cycle means, Kleene stars,
subeigencones, and the diagonal scalings that strictly visualize a
nonnegative matrix.

Quick tour::

    from maxvis import MaxMatrix, max_cycle_geometric_mean, strict_visualizer

    a = MaxMatrix.from_rows([["1", "2"], ["1/8", "1"]])
    max_cycle_geometric_mean(a)        # Fraction(1)
    x = strict_visualizer(a)           # column-sum scaling (3, 9/8)
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .assignment import (AssignmentVisualization, Permutation,
                         all_maximal_permutations, brute_force_assignment,
                         maximal_permutation, visualize_assignment)
from .cones import (EIGEN, OUTSIDE, SUBEIGEN_ONLY, ConeBasis, DimensionReport,
                    dimensions, eigencone_basis, exact_rank, linear_rank,
                    max_combination, membership, subeigencone_basis)
from .errors import (DimensionMismatch, DomainError, IrrationalLambda,
                     LambdaExceedsOne, MaxvisError, ModeError, ModeMismatch,
                     NegativeEntry, NoPositivePermutation, NotDefinite,
                     NotVisualized, OracleLimitExceeded, ParseError,
                     PowerIterationDivergence, ReducibleMatrix, ZeroLambda)
from .io import parse_matrix, parse_vector, serialize_matrix, validate_report
from .kleene import KleeneStar, is_kleene_star, kleene_series_oracle, kleene_star
from .semiring import (DEFAULT_TOL, EXACT, FLOAT, MaxMatrix, MaxVector,
                       ScalingVector, diag_similarity, mat_mul, mat_oplus,
                       mat_vec, matrices_close, scalar_mul, vec_oplus,
                       vec_scale, vectors_close)
from .spectral import (CycleMeanRoot, SpectralData, brute_force_lambda,
                       brute_force_lambda_root, critical_edges_oracle,
                       critical_structure, definite_form, is_irreducible,
                       max_cycle_geometric_mean, max_cycle_root)
from .visualize import (BREAKS, MAKES_STRICT, NOT_VISUALIZED,
                        PRESERVES_VISUALIZED, STRICTLY_VISUALIZED, VISUALIZED,
                        QuotientMatrix, VisualizationReport,
                        check_visualization, in_relative_interior,
                        lift_scaling, linear_hull_membership,
                        preserving_scaling_check, quotient_matrix,
                        star_block_structure, strict_visualizer)

__version__ = "0.1.0"
