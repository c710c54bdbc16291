import logging
import os
import attr
import numpy as np

from ..constants import (
    ASSOCIATIVITY_SAMPLES,
    ASSOCIATIVITY_SEED,
    EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
    TABLE_CAP,
    TABLE_CAP_ENV,
)
from ..exceptions import BadConfigError, InvalidTableError, TableCapExceeded
from ..utils.functional import cached_property, lcm


logger = logging.getLogger(__name__)

# Set from configuration by the CLI; the environment still wins
_configured_cap = None


def configure_table_cap(cap):
    global _configured_cap
    _configured_cap = cap


def table_cap():
    """
    The largest group order constructors will build; GCOVER_MAX_ORDER overrides.
    """
    raw = os.environ.get(TABLE_CAP_ENV)
    if not raw:
        return _configured_cap or TABLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise BadConfigError("%s must be an integer, got %r" % (TABLE_CAP_ENV, raw))


def check_cap(order, what="group table"):
    cap = table_cap()
    if order > cap:
        raise TableCapExceeded(order, cap, what=what)


def _frozen_array(values):
    array = np.array(values, dtype=np.int32)
    array.setflags(write=False)
    return array


@attr.s(frozen=True, eq=False, repr=False)
class GroupTable:
    """
    A finite group as an order-n multiplication table over element indices
    0..n-1, with the identity at index 0.

    Build through `from_table` or `from_elements`, which check the group
    axioms; the instance is immutable afterwards and safe to share between
    threads.
    """
    product = attr.ib(converter=_frozen_array)
    inverse = attr.ib(converter=_frozen_array)
    labels = attr.ib(converter=tuple)
    spec = attr.ib(default="")

    @classmethod
    def from_table(cls, product, labels=None, spec="", validate=True):
        product = _frozen_array(product)
        if product.ndim != 2 or product.shape[0] != product.shape[1] or product.shape[0] == 0:
            raise InvalidTableError("Multiplication table must be a non-empty square, got shape {}".format(
                product.shape,
            ))
        order = product.shape[0]
        check_cap(order)
        if labels is None:
            labels = [str(i) for i in range(order)]
        if len(labels) != order:
            raise InvalidTableError("Got {} labels for a table of order {}".format(len(labels), order))
        if validate:
            validate_table(product)
        # In a Latin square with identity 0, each row holds 0 exactly once
        inverse = np.argmin(product, axis=1)
        return cls(product, inverse, labels, spec)

    @classmethod
    def from_elements(cls, elements, operation, label=str, spec="", validate=True):
        """
        Builds the table of `operation` on a list of hashable elements. The
        first element must be the identity.
        """
        elements = list(elements)
        position = {element: i for i, element in enumerate(elements)}
        if len(position) != len(elements):
            raise InvalidTableError("Duplicate elements given")
        check_cap(len(elements))
        product = []
        for a in elements:
            row = []
            for b in elements:
                try:
                    row.append(position[operation(a, b)])
                except KeyError:
                    raise InvalidTableError("{} * {} is not among the elements".format(label(a), label(b)))
            product.append(row)
        return cls.from_table(product, [label(element) for element in elements], spec=spec, validate=validate)

    @property
    def order(self):
        return len(self.labels)

    @cached_property
    def rows(self):
        """
        The table as nested lists; scalar lookups in hot loops are much
        cheaper on lists than on numpy arrays.
        """
        return self.product.tolist()

    @cached_property
    def inverses(self):
        return self.inverse.tolist()

    def multiply(self, a, b):
        return self.rows[a][b]

    def power(self, a, k):
        result = 0
        for _ in range(k % self.element_orders[a]):
            result = self.rows[result][a]
        return result

    @cached_property
    def element_orders(self):
        """
        The order of every element, computed for all elements at once by
        stepping every power in parallel.
        """
        indices = np.arange(self.order)
        power = indices.copy()
        orders = np.zeros(self.order, dtype=np.int64)
        k = 1
        while True:
            orders[(power == 0) & (orders == 0)] = k
            if orders.all():
                break
            power = self.product[power, indices]
            k += 1
        return tuple(int(o) for o in orders)

    def element_order(self, i):
        if not 0 <= i < self.order:
            raise IndexError("element index {} out of range for order {}".format(i, self.order))
        return self.element_orders[i]

    @cached_property
    def exponent(self):
        return lcm(*self.element_orders)

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.product, self.product.T))

    @cached_property
    def order_statistics(self):
        """
        Sorted (element order, count) pairs; an isomorphism invariant.
        """
        counts = {}
        for o in self.element_orders:
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    @cached_property
    def center(self):
        """
        Indices of the elements commuting with everything.
        """
        commuting = np.all(self.product == self.product.T, axis=1)
        return tuple(int(i) for i in np.flatnonzero(commuting))

    @cached_property
    def squares(self):
        return tuple(row[i] for i, row in enumerate(self.rows))

    def relabel(self, permutation, spec=None):
        """
        Returns an isomorphic copy where old element i becomes
        permutation[i]. The identity has to stay at 0.
        """
        permutation = np.asarray(permutation, dtype=np.int64)
        if sorted(permutation.tolist()) != list(range(self.order)):
            raise ValueError("relabeling must be a permutation of 0..{}".format(self.order - 1))
        if permutation[0] != 0:
            raise ValueError("relabeling must keep the identity at index 0")
        old_of_new = np.argsort(permutation)
        product = permutation[self.product[np.ix_(old_of_new, old_of_new)]]
        labels = [self.labels[old] for old in old_of_new]
        return GroupTable.from_table(product, labels, spec=self.spec if spec is None else spec)

    def with_spec(self, spec):
        return GroupTable(self.product, self.inverse, self.labels, spec)

    def same_table(self, other):
        return (
            self.order == other.order
            and bool(np.array_equal(self.product, other.product))
            and self.labels == other.labels
        )

    def __eq__(self, other):
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self.spec == other.spec and self.same_table(other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.spec, self.product.tobytes()))

    def __len__(self):
        return self.order

    def __repr__(self):
        return "<GroupTable {} order={}>".format(self.spec or "?", self.order)


def validate_table(product):
    """
    Checks the group axioms on a square integer table, raising
    InvalidTableError on the first violation.
    """
    n = product.shape[0]
    indices = np.arange(n)
    if product.min() < 0 or product.max() >= n:
        raise InvalidTableError("Table entries must lie in 0..{}".format(n - 1))
    if not (np.array_equal(product[0], indices) and np.array_equal(product[:, 0], indices)):
        raise InvalidTableError("Index 0 is not a two-sided identity")
    if not np.all(np.sort(product, axis=1) == indices):
        raise InvalidTableError("Some row is not a permutation")
    if not np.all(np.sort(product, axis=0) == indices[:, None]):
        raise InvalidTableError("Some column is not a permutation")
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            # (a*b)*c against a*(b*c) for every b, c
            if not np.array_equal(product[product[a], :], product[a][product]):
                raise InvalidTableError("Table is not associative (first failing a={})".format(a))
    else:
        rng = np.random.default_rng(ASSOCIATIVITY_SEED)
        a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
        if not np.array_equal(product[product[a, b], c], product[a, product[b, c]]):
            raise InvalidTableError("Table is not associative (sampled check)")
        logger.debug("Order %i table checked for associativity on %i sampled triples", n, ASSOCIATIVITY_SAMPLES)
