"""Sum-set cardinality bounds: computation, exact evaluation, sweeps."""

from .core import (EnumKind, IntSequence, IntSet, ap_cover_length, dilate,
                   enumerate_sequences, enumerate_sets, gcd_of,
                   is_arithmetic_progression, m_index, normal_form, translate)
from .engine import (SumSet, h_fold_sumset, restricted_h_fold_sumset,
                     subsequence_sums, subsequence_sums_bounded_card,
                     subsequence_sums_min_card, subset_sums,
                     subset_sums_bounded_card, subset_sums_min_card, total_sum)
from .errors import (DegenerateInputError, EmptyCollectionError,
                     InapplicableError, IndexRangeError, InvalidDilationError,
                     MissingAuxiliaryError, OracleSizeError, SumboundsError)
from .exact import ExactBound, observed_meets
from .oracle import brute_force_oracle
from .registry import (Instance, TheoremId, applicable, bound_holds, catalog,
                       equality_characterization, evaluate_bound)
from .verifier import (ALL_APPLICABLE, CheckOutcome, VerificationReport,
                       check_instance, conjecture1_tightness,
                       cross_theorem_consistency, verify_range)

__version__ = "0.1.0"
