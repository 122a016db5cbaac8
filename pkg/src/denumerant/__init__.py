"""Exact three-part denumerants d(n; a, b, c) in O(log b) ring operations.

>>> from denumerant import denumerant, oracle_count
>>> denumerant(25, 3, 7, 11), oracle_count(25, 3, 7, 11)
(3, 3)
"""

from .arith import (
    BezoutPair, ExpVec, bezout_unit, ext_gcd, mod_inverse_signed, rem_star, srem_star,
)
from .ctcore import (
    CTState, Factor, LaurentMonomial, RationalTerm, RawContribution,
    base_case, euclid_step, reduce_contribution, to_unit_state,
)
from .errors import DenumerantError, InternalError, InvalidInputError, ResourceGuardError
from .evaluation import (
    HQuad, MuVector, choose_mu, eval_sum, eval_term, h_values, is_valid_mu, iter_valid_mu,
)
from .pipeline import (
    ContributionSplit, GcdReductionStep, ProblemInstance, Solution, ZeroCount,
    choose_s, denumerant, denumerant2, normalize, oracle_count, oracle_table,
    reduce_gcd_ab, reduce_pairwise, solve, split_contributions,
)
from .trace import TraceLog, TraceRecord

__version__ = "0.1.0"
