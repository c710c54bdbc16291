import logging
import attr
import numpy as np

from .isomorphism import is_isomorphic_small
from ..constants import ISOMORPHISM_CAP
from ..exceptions import NotNormalError, ParentMismatchError
from ..groups.table import GroupTable
from ..lattice.subgroups import is_normal
from ..utils.functional import cached_property


logger = logging.getLogger(__name__)


@attr.s(frozen=True, eq=False, repr=False)
class QuotientDescriptor:
    """
    G/N: the normal kernel, the element -> coset map and the quotient table.
    Cosets are numbered by their smallest element, so the kernel is coset 0.
    """
    parent = attr.ib()
    kernel = attr.ib()
    coset_of = attr.ib(converter=tuple)
    quotient = attr.ib()

    @property
    def order(self):
        return self.quotient.order

    @cached_property
    def representatives(self):
        reps = [None] * self.order
        for element, coset in enumerate(self.coset_of):
            if reps[coset] is None:
                reps[coset] = element
        return tuple(reps)

    def is_well_defined(self):
        """
        Full scan: the coset of a*b equals the quotient product of the cosets
        of a and b for every pair, i.e. no representative choice matters.
        """
        coset_of = np.array(self.coset_of)
        expected = self.quotient.product[coset_of[:, None], coset_of[None, :]]
        return bool(np.array_equal(coset_of[self.parent.product], expected))

    def __repr__(self):
        return "<QuotientDescriptor {} / {} order={}>".format(self.parent.spec or "?", self.kernel.hex(), self.order)


def quotient(g, n):
    """
    Builds G/N for a normal subgroup N.
    """
    if not _same_group(g, n.parent):
        raise ParentMismatchError("Kernel {} is not a subgroup of {}".format(n.hex(), g.spec or "group"))
    if not is_normal(g, n):
        raise NotNormalError("Subgroup {} is not normal in {}".format(n.hex(), g.spec or "group"))
    rows = g.rows
    kernel = n.elements
    coset_of = [-1] * g.order
    representatives = []
    for element in range(g.order):
        if coset_of[element] != -1:
            continue
        coset = len(representatives)
        representatives.append(element)
        for k in kernel:
            coset_of[rows[element][k]] = coset
    coset_array = np.array(coset_of)
    reps = np.array(representatives)
    product = coset_array[g.product[np.ix_(reps, reps)]]
    labels = [g.labels[r] + "N" if r else "N" for r in representatives]
    table = GroupTable.from_table(product, labels, spec="{} / {}".format(g.spec or "G", n.hex()))
    return QuotientDescriptor(g, n, coset_of, table)


def _same_group(g, h_parent):
    return g is h_parent or g.same_table(h_parent)


def is_klein_four(q):
    return q.order == 4 and q.exponent == 2


def is_elem_abelian_8(q):
    # Exponent 2 forces commutativity
    return q.order == 8 and q.exponent == 2


def elementary_abelian_2_kernels(g, lattice, rank):
    """
    Normal subgroups N with G/N elementary abelian of order 2^rank.
    """
    target_index = 2 ** rank
    kernels = []
    for n in lattice.normal:
        if g.order != n.size * target_index:
            continue
        if quotient(g, n).quotient.exponent <= 2:
            kernels.append(n)
    return kernels


def klein_kernels(g, lattice):
    """
    Kernels of the quotients isomorphic to C2 x C2.
    """
    kernels = []
    for n in lattice.normal:
        if g.order != n.size * 4:
            continue
        if is_klein_four(quotient(g, n).quotient):
            kernels.append(n)
    return kernels


def count_klein_quotients(g, lattice):
    count = len(klein_kernels(g, lattice))
    logger.debug("%s has %i Klein four quotients", g.spec, count)
    return count


def has_quotient_isomorphic_to(g, lattice, target, cap=ISOMORPHISM_CAP):
    """
    True iff some normal N of index |target| gives G/N isomorphic to target.
    """
    if g.order % target.order:
        return False
    wanted = g.order // target.order
    for n in lattice.normal:
        if n.size == wanted and is_isomorphic_small(quotient(g, n).quotient, target, cap=cap):
            return True
    return False
