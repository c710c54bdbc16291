import functools
import logging
import math
import attr

from ..constants import C3Method
from ..exceptions import CoprimeError, NotAPGroupError
from ..groups.constructors import build_direct_product
from ..lattice.subgroups import all_subgroups, min_generators_2group
from ..quotients.quotient import count_klein_quotients, elementary_abelian_2_kernels
from ..utils.functional import prime_power
from .triples import (
    c3,
    find_irredundant_triple,
    find_noncovering_distinct_triple,
    find_noncovering_irredundant_triple,
)


logger = logging.getLogger(__name__)


def any_three_irredundant_cover(g, lattice):
    """
    True iff g has an irredundant triple of proper subgroups and every such
    triple covers g.
    """
    if find_irredundant_triple(g, lattice) is None:
        return False
    return find_noncovering_irredundant_triple(g, lattice) is None


def any_three_distinct_cover(g, lattice):
    """
    True iff g has three distinct nontrivial proper subgroups and every triple
    of them covers g.
    """
    if len(lattice.nontrivial_proper) < 3:
        return False
    return find_noncovering_distinct_triple(g, lattice) is None


@attr.s(frozen=True)
class UniqueCoverConditions:
    """
    The three conditions that characterize a unique three-cover: exactly
    one cover, exactly one C2 x C2 quotient, and some C2 x C2 quotient but
    no C2 x C2 x C2 one.
    """
    unique_cover = attr.ib()
    unique_klein_quotient = attr.ib()
    no_rank_three_quotient = attr.ib()

    @property
    def consistent(self):
        return self.unique_cover == self.unique_klein_quotient == self.no_rank_three_quotient

    def serialize(self):
        return [self.unique_cover, self.unique_klein_quotient, self.no_rank_three_quotient]

    def __iter__(self):
        return iter(self.serialize())


def unique_three_cover_equivalence(g, lattice, c3_value=None, klein_count=None):
    if c3_value is None:
        c3_value = c3(g, lattice, method=C3Method.ENUMERATION)
    if klein_count is None:
        klein_count = count_klein_quotients(g, lattice)
    rank_three = elementary_abelian_2_kernels(g, lattice, 3) if klein_count else []
    return UniqueCoverConditions(
        unique_cover=c3_value == 1,
        unique_klein_quotient=klein_count == 1,
        no_rank_three_quotient=klein_count >= 1 and not rank_three,
    )


@attr.s(frozen=True)
class NilpotentCoverCheck:
    """
    Predicted versus computed uniqueness of the three-cover of a direct
    product of groups of pairwise coprime orders.
    """
    prediction = attr.ib()
    actual = attr.ib()
    product = attr.ib(eq=False, default=None)

    @property
    def agrees(self):
        return self.prediction == self.actual

    def serialize(self):
        return [self.prediction, self.actual]


def _is_two_group(part):
    if part.order % 2:
        return False
    pp = prime_power(part.order)
    if pp is None or pp[0] != 2:
        raise NotAPGroupError("{} has even order {} but is not a 2-group".format(part.spec or "group", part.order))
    return True


def corollary_e_check(parts):
    """
    For a direct product of groups of pairwise coprime orders, the product
    has a unique three-cover iff one part is a 2-group needing exactly two
    generators. Odd-order parts have no quotient of even order, so they may
    be arbitrary; the even-order part has to be a 2-group. Returns both sides
    of that equivalence.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("corollary_e_check needs at least one part")
    for i, left in enumerate(parts):
        for right in parts[i + 1:]:
            if math.gcd(left.order, right.order) != 1:
                raise CoprimeError("Parts {} (order {}) and {} (order {}) do not have coprime orders".format(
                    left.spec or "?", left.order, right.spec or "?", right.order,
                ))
    two_parts = [part for part in parts if _is_two_group(part)]
    prediction = bool(two_parts) and min_generators_2group(two_parts[0]) == 2
    ordered = sorted(parts, key=lambda part: part.order % 2 == 1)
    product = functools.reduce(build_direct_product, ordered)
    actual = c3(product, all_subgroups(product), method=C3Method.ENUMERATION) == 1
    logger.debug("Nilpotent check on %s: predicted %s, computed %s", product.spec, prediction, actual)
    return NilpotentCoverCheck(prediction, actual, product)
