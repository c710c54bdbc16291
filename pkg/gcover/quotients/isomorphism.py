import logging
import sympy

from ..constants import ISOMORPHISM_CAP
from ..exceptions import TableCapExceeded
from ..lattice.subgroups import closure
from ..utils import bits


logger = logging.getLogger(__name__)


def greedy_generating_set(g):
    """
    Repeatedly adds the element of largest order (smallest index on ties)
    that the current generators do not reach yet.
    """
    orders = g.element_orders
    everything = bits.full(g.order)
    generators = []
    members = 1
    while members != everything:
        best = max(
            (x for x in range(g.order) if not members >> x & 1),
            key=lambda x: (orders[x], -x),
        )
        generators.append(best)
        members = closure(g, generators).members
    return generators


def _is_elementary_abelian(g):
    return g.is_abelian and sympy.isprime(g.exponent)


def _extend(a, b, generators, images):
    """
    Extends generators -> images to the subgroup they generate, multiplying on
    the right by generators breadth-first. Returns the partial map as a list
    (-1 where undefined), or None if the assignment is not a well-defined
    injective homomorphism on that subgroup.
    """
    rows_a, rows_b = a.rows, b.rows
    image = [-1] * a.order
    used = 1
    image[0] = 0
    queue = [0]
    pairs = list(zip(generators, images))
    i = 0
    while i < len(queue):
        e = queue[i]
        fe = image[e]
        for s, t in pairs:
            x = rows_a[e][s]
            y = rows_b[fe][t]
            if image[x] == -1:
                if used >> y & 1:
                    return None
                image[x] = y
                used |= 1 << y
                queue.append(x)
            elif image[x] != y:
                return None
        i += 1
    return image


def find_isomorphism(a, b, cap=ISOMORPHISM_CAP):
    """
    Returns an isomorphism a -> b as a list of image indices, or None.

    Backtracks over images of a greedy generating set of a, only trying
    targets of the same element order, and prunes as soon as the partial
    assignment fails to extend to an injective homomorphism.
    """
    if a.order != b.order:
        return None
    if a.order > cap:
        raise TableCapExceeded(a.order, cap, what="isomorphism search")
    if a.is_abelian != b.is_abelian or a.order_statistics != b.order_statistics:
        return None
    generators = greedy_generating_set(a)
    orders_a, orders_b = a.element_orders, b.element_orders
    candidates = [
        [y for y in range(b.order) if orders_b[y] == orders_a[s]]
        for s in generators
    ]
    images = []

    def search(depth):
        if depth == len(generators):
            return _extend(a, b, generators, images)
        for y in candidates[depth]:
            if y in images:
                continue
            images.append(y)
            partial = _extend(a, b, generators[:depth + 1], images)
            if partial is not None:
                result = search(depth + 1)
                if result is not None:
                    return result
            images.pop()
        return None

    mapping = search(0)
    logger.debug("Isomorphism search %s -> %s: %s", a.spec, b.spec, "found" if mapping else "none")
    return mapping


def is_isomorphic_small(a, b, cap=ISOMORPHISM_CAP):
    """
    True iff a and b are isomorphic. Elementary abelian groups are recognized
    directly by order and exponent, at any order: no search runs, so `cap`
    does not apply to them. Everything else goes through the backtracking
    search, which raises TableCapExceeded above `cap` elements.
    """
    if a.order != b.order:
        return False
    if _is_elementary_abelian(a) or _is_elementary_abelian(b):
        return _is_elementary_abelian(a) and _is_elementary_abelian(b) and a.exponent == b.exponent
    return find_isomorphism(a, b, cap=cap) is not None
