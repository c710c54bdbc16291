from .isomorphism import find_isomorphism, greedy_generating_set, is_isomorphic_small  # noqa
from .quotient import (  # noqa
    QuotientDescriptor,
    count_klein_quotients,
    elementary_abelian_2_kernels,
    has_quotient_isomorphic_to,
    is_elem_abelian_8,
    is_klein_four,
    klein_kernels,
    quotient,
)
