from .triples import (  # noqa
    CoverStructure,
    CoverTriple,
    c3,
    cover_structure,
    enumerate_three_covers,
    find_irredundant_triple,
    find_noncovering_distinct_triple,
    find_noncovering_irredundant_triple,
    is_cover,
    is_irredundant_triple,
    iter_three_covers,
)
from .sigma import SigmaResult, sigma, sigma_over, sigma_prediction  # noqa
from .theorems import (  # noqa
    NilpotentCoverCheck,
    UniqueCoverConditions,
    any_three_distinct_cover,
    any_three_irredundant_cover,
    corollary_e_check,
    unique_three_cover_equivalence,
)
