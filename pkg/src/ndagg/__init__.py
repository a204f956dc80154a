"""Aggregation and group ranking over nondecreasing unit-interval tuples."""

from .core import (DimensionMismatch, NDimInterval, Permutation, ValidationError,
                   WeightingVector, degenerate, lattice_inf, lattice_sup,
                   product_order_leq, sorted_interval)
from .mcgdm import (CollectiveMatrix, DecisionProblem, PipelineResult, Ranking,
                    build_collective, rank, run_pipeline, score_alternatives, sensitivity)
from .ndim_agg import (ContractViolation, NDimAggregation, OrderCompatibilityError,
                       build_ndim_aggregation, classify, lift_componentwise, ndim_owa,
                       ndim_weighted_average)
from .orders import (AdmissibleOrder, AggLexOrder, LexOrder, Ordering, WeightedLexOrder,
                     lex_compare, max_under, min_under, order_from_spec,
                     verify_admissibility, weighted_excess, weighted_lex_compare)
from .report import CompatibilityReport
from .sampling import DEFAULT_SEED, Sampler
from .scalar_agg import (ScalarAggregation, build_scalar_aggregation, dominates,
                         geometric_mean, max_exp, owa, power_product, weighted_average,
                         weighted_max, weighted_min)
from .semivector import (bounded_add, check_order_compatibility, check_semifield_axioms,
                         check_semivector_axioms, natural_preorder_leq,
                         natural_preorder_witness, scalar_mul, vec_add)

__version__ = "0.1.0"
