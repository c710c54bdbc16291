import functools
import logging
import attr

from ..constants import DEFAULT_SIGMA_CAP, ISOMORPHISM_CAP, SigmaOutcome
from ..groups.constructors import (
    build_alternating,
    build_dihedral,
    build_elementary_abelian,
    build_semidirect_cyclic,
    build_symmetric,
)
from ..quotients.quotient import count_klein_quotients, has_quotient_isomorphic_to
from ..utils import bits


logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class SigmaResult:
    """
    The minimal number of proper subgroups covering a group, or one of the
    SigmaOutcome markers, plus the lexicographically least minimal witness
    in canonical lattice order (empty unless the value is finite).
    """
    value = attr.ib()
    witness = attr.ib(converter=tuple, default=())

    @property
    def is_finite(self):
        return self.value not in SigmaOutcome.valid_outcomes

    def serialize(self):
        return self.value

    def __str__(self):
        return str(self.value)


def sigma_over(g, candidates, cap=DEFAULT_SIGMA_CAP):
    """
    Exact cover of g by the fewest members of `candidates` (proper subgroups,
    in canonical order).

    Iterative deepening on the cover size k. Each feasibility test branches on
    the uncovered element with the fewest candidates containing it, prunes on
    a counting bound, and short-circuits whenever a memoized greedy cover
    already fits in the remaining budget.
    """
    candidates = [h for h in candidates if h.is_proper()]
    everything = bits.full(g.order)
    masks = [h.members for h in candidates]
    union = 0
    for mask in masks:
        union |= mask
    if not candidates or union != everything:
        return SigmaResult(SigmaOutcome.NO_COVER)

    count = len(candidates)
    largest = max(h.size for h in candidates)
    containing = [0] * g.order
    for c, h in enumerate(candidates):
        for e in h.elements:
            containing[e] |= 1 << c

    @functools.lru_cache(maxsize=None)
    def greedy(uncovered, min_index):
        """
        Size of a greedy cover of `uncovered` by candidates from `min_index`
        on, or None when they do not cover it at all.
        """
        used = 0
        while uncovered:
            best, gain = None, 0
            for c in range(min_index, count):
                covered = bits.popcount(uncovered & masks[c])
                if covered > gain:
                    best, gain = c, covered
            if best is None:
                return None
            uncovered &= ~masks[best]
            used += 1
        return used

    infeasible = set()

    def feasible(uncovered, budget, min_index):
        if not uncovered:
            return True
        if budget <= 0:
            return False
        key = (uncovered, budget, min_index)
        if key in infeasible:
            return False
        if bits.popcount(uncovered) > budget * largest:
            infeasible.add(key)
            return False
        upper = greedy(uncovered, min_index)
        if upper is None:
            infeasible.add(key)
            return False
        if upper <= budget:
            return True
        allowed = (bits.full(count) >> min_index) << min_index
        branch = None
        for e in bits.to_indices(uncovered):
            options = containing[e] & allowed
            if branch is None or bits.popcount(options) < bits.popcount(branch):
                branch = options
                if bits.popcount(options) <= 1:
                    break
        for c in bits.to_indices(branch):
            if feasible(uncovered & ~masks[c], budget - 1, min_index):
                return True
        infeasible.add(key)
        return False

    upper = greedy(everything, 0)
    lower = -(-g.order // largest)
    value = None
    for k in range(lower, min(upper, cap) + 1):
        logger.debug("%s: trying covers of size %i over %i candidates", g.spec, k, count)
        if k == upper or feasible(everything, k, 0):
            value = k
            break
    if value is None:
        logger.debug("%s: no cover of size <= %i", g.spec, cap)
        return SigmaResult(SigmaOutcome.EXCEEDS_CAP)

    witness = []
    uncovered = everything
    start = 0
    for step in range(value):
        for c in range(start, count):
            if feasible(uncovered & ~masks[c], value - step - 1, c + 1):
                witness.append(candidates[c])
                uncovered &= ~masks[c]
                start = c + 1
                break
    return SigmaResult(value, witness)


def sigma(g, lattice, cap=DEFAULT_SIGMA_CAP):
    """
    sigma(G) over maximal subgroups: any cover member can be enlarged to a
    maximal overgroup without changing the count. Cyclic groups (and the
    trivial group) have no cover.
    """
    return sigma_over(g, lattice.maximal, cap=cap)


@functools.lru_cache(maxsize=None)
def prediction_targets():
    """
    (sigma value, quotient groups forcing it), in precedence order.
    """
    return (
        (4, (build_elementary_abelian(3, 2), build_symmetric(3))),
        (5, (build_alternating(4), )),
        (6, (build_elementary_abelian(5, 2), build_dihedral(10), build_semidirect_cyclic(5, 4, 2))),
    )


def sigma_prediction(g, lattice, klein_count=None, cap=ISOMORPHISM_CAP):
    """
    The sigma value in 3..6 that the quotients of g force, or None: 3 with a
    C2 x C2 quotient, else 4 with a C3 x C3 or S3 quotient, else 5 with an A4
    quotient, else 6 with a C5 x C5, D10 or SD(5,4,2) quotient.
    `cap` bounds the quotient isomorphism searches.
    """
    if klein_count is None:
        klein_count = count_klein_quotients(g, lattice)
    if klein_count:
        return 3
    for value, targets in prediction_targets():
        if any(has_quotient_isomorphic_to(g, lattice, target, cap=cap) for target in targets):
            return value
    return None
