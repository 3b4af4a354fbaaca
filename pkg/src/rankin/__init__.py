"""Weighted Rankin bounds for unit-vector families over atomic measure spaces."""

__version__ = "0.1.0"

from .errors import (DimensionMismatchError, InvalidArgumentError,
                     NormalizationError, PreconditionViolation, RankinError,
                     UndefinedBoundError)
from .measure import MeasureSpace, counting_space, diagonal_mass, offdiagonal_mass
from .family import (VectorFamily, abs_coherence, analysis, coherence,
                     counting_family, discretize, frame_operator_apply, gram,
                     l2_pairing, min_pairwise_distance_sq, synthesis,
                     weighted_gram_total)
from .bounds import BoundReport, classical_rankin_bound, rankin_bound
from .verify import (CoherenceReport, DecompositionReport, check_rankin,
                     implied_coherence_floor, polarization_identity,
                     proof_decomposition)
from .banach import (FunctionalFamily, FunctionalRankinReport,
                     check_functional_rankin, conjugate_exponent,
                     duality_functional, from_vector_family,
                     functional_coherence, gram_sum_condition, lp_norm)
from .optimizer import (OptimizerConfig, OptimizerResult, minimize_coherence,
                        simplex_family, smoothed_objective)
