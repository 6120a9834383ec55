"""Improvable upper and lower bounds on weighted sums of variances.

The package evaluates free-parameter bounds for two and for N observables
alongside the classical Robertson, Schrodinger and Maccone-Pati relations,
and reproduces two worked examples from embedded fixtures.
"""

from .classic import (
    MPConfig,
    fb_bound,
    mp_bound,
    mp_l1,
    mp_l2,
    pb_bound,
    qubit_l1_identity_gap,
    robertson,
    schrodinger,
)
from .core import (
    DeviationVector,
    Observable,
    State,
    combine,
    commutator_expectation,
    deviation_vector,
    expectation,
    make_observable,
    make_state,
    variance,
)
from .multi import (
    Matching,
    MultiDecomposition,
    PairCase,
    WeightVector,
    all_matchings,
    b_tilde_sq,
    composite_bound,
    matching_bound,
    pair_index,
    resolve_multi,
    theorem2_bounds,
    verify_multi_identity,
)
from .pair import (
    PairDecomposition,
    WeightPair,
    b_quadratic,
    resolve_decomposition,
    theorem1_bounds,
    verify_sum_identity,
)

__version__ = "0.1.0"
