"""Stanley depth and quasi-depth of squarefree monomial ideals.

Squarefree monomials are subsets of {1..n}; ideals, quotients and
subquotients become families of subsets, and Stanley depth becomes a
question about partitioning such a family into intervals with large tops.
This package computes the quasi-depth bound exactly (a fast numerical
recursion on level counts), decides Stanley depth by exhaustive
interval-partition search, and builds the independence ideals of graphs
whose Stanley depth the gamma invariant conjecturally pins down.
"""

from .errors import (
    AmbientMismatchError,
    BudgetExhaustedError,
    LatticeLimitError,
    NotASubidealError,
    OracleCapError,
    ParseError,
    StanleyDepthError,
)
from .subsets import AlphaVector, SubsetFamily, VarSet, alpha_vector
from .ideals import (
    MonomialIdeal,
    hilbert_alpha_oracle,
    maximal_ideal,
    minimalize,
    poset_of_ideal,
    poset_of_quotient,
    poset_of_subquotient,
    unit_ideal,
    veronese_ideal,
    zero_ideal,
)
from .qdepth import (
    BetaProfile,
    GeneratorCountBound,
    beta_profile,
    binom,
    closed_form_beta,
    generator_count_bound,
    qdepth,
    qdepth_from_alpha,
    veronese_qdepth_bound,
    veronese_qdepth_exact_bound,
)
from .intervals import (
    Interval,
    IntervalPartition,
    interval_members,
    partition_from_json,
    partition_to_json,
    verify_partition,
)
from .search import (
    SdepthResult,
    SearchBudget,
    has_partition,
    sdepth,
    sdepth_bruteforce_oracle,
    union_lower_bound,
)
from .graphs import (
    Graph,
    all_graphs,
    canonical_key,
    graph_families,
    independence_number,
    independent_sets,
)
from .graph_ideals import (
    IndependenceIdealData,
    SandwichReport,
    gamma,
    gamma_from_counts,
    independence_ideal,
    invariants,
    linear_quotients_check,
    sandwich_report,
    sort_generators,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
