import itertools
import logging
import attr
import numpy as np

from ..exceptions import NotAPGroupError, ParentMismatchError
from ..groups.table import check_cap
from ..utils import bits
from ..utils.functional import cached_property, prime_power


logger = logging.getLogger(__name__)


@attr.s(frozen=True, eq=False, repr=False)
class SubgroupSet:
    """
    A subgroup of `parent`, stored as a bitset of element indices.

    `generators` is whatever generating set the subgroup was built from (or
    None when it came from a set operation); it is a construction detail and
    not part of equality.
    """
    parent = attr.ib()
    members = attr.ib()
    generators = attr.ib(default=None)

    @cached_property
    def size(self):
        return bits.popcount(self.members)

    @cached_property
    def elements(self):
        return tuple(bits.to_indices(self.members))

    @property
    def sort_key(self):
        return (self.size, self.members)

    def generating_set(self):
        if self.generators is not None:
            return self.generators
        return tuple(e for e in self.elements if e)

    def is_trivial(self):
        return self.members == 1

    def is_whole(self):
        return self.size == self.parent.order

    def is_proper(self):
        return not self.is_whole()

    def hex(self):
        return bits.to_hex(self.members)

    def __contains__(self, element):
        return bool(self.members >> element & 1)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.members == other.members and _same_parent(self.parent, other.parent)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return "<SubgroupSet of {} size={} {}>".format(self.parent.spec or "?", self.size, self.hex())


def _same_parent(a, b):
    return a is b or a.same_table(b)


def check_same_parent(*subgroups):
    first = subgroups[0].parent
    for subgroup in subgroups[1:]:
        if not _same_parent(first, subgroup.parent):
            raise ParentMismatchError("Subgroups belong to different parent groups ({} and {})".format(
                first.spec or "?", subgroup.parent.spec or "?",
            ))


def _close(g, start, generators):
    """
    Worklist closure: the least subgroup containing the elements of the
    `start` bitset (which must already be closed, or just {identity}) and
    `generators`. Multiplying by generators until nothing new appears is
    enough in a finite group, since inverses are positive powers.
    """
    rows = g.rows
    members = start
    elements = bits.to_indices(start)
    generators = [s for s in generators if s]
    for s in generators:
        if not members >> s & 1:
            members |= 1 << s
            elements.append(s)
    i = 0
    while i < len(elements):
        row = rows[elements[i]]
        for s in generators:
            x = row[s]
            if not members >> x & 1:
                members |= 1 << x
                elements.append(x)
        i += 1
    return members


def closure(g, generators):
    """
    The least subgroup of g containing every index in `generators`.
    """
    generators = sorted(set(generators))
    for s in generators:
        if not 0 <= s < g.order:
            raise IndexError("element index {} out of range for order {}".format(s, g.order))
    members = _close(g, 1, generators)
    return SubgroupSet(g, members, tuple(s for s in generators if s))


def join(h, x):
    """
    <h, x> for a subgroup h and an element index x.
    """
    if x in h:
        return h
    generators = h.generating_set() + (x, )
    # Close over the old generators too: they act on the new cosets
    members = _close(h.parent, h.members, generators)
    return SubgroupSet(h.parent, members, generators)


def cyclic_subgroups(g):
    """
    Every cyclic subgroup <x>, deduplicated, keyed by bitset, with the
    smallest generating index kept as its generator.
    """
    found = {}
    rows = g.rows
    for x in range(g.order):
        members = 1
        power = x
        while power:
            members |= 1 << power
            power = rows[power][x]
        if members not in found:
            found[members] = SubgroupSet(g, members, (x, ) if x else ())
    return found


@attr.s(frozen=True, eq=False, repr=False)
class SubgroupLattice:
    """
    All subgroups of a group, sorted by (size, bitset), with maximality and
    normality flags parallel to `subgroups`.
    """
    parent = attr.ib()
    subgroups = attr.ib(converter=tuple)
    maximal_flags = attr.ib(converter=tuple)
    normal_flags = attr.ib(converter=tuple)

    @classmethod
    def from_subgroups(cls, parent, subgroups):
        subgroups = sorted(subgroups, key=lambda h: h.sort_key)
        whole = parent.order
        maximal_flags = []
        for i, h in enumerate(subgroups):
            if h.size == whole:
                maximal_flags.append(False)
                continue
            # Sorted by size, so strict supersets can only come later
            maximal_flags.append(not any(
                k.size < whole and k.size > h.size and bits.is_subset(h.members, k.members)
                for k in subgroups[i + 1:]
            ))
        normal_flags = [is_normal(parent, h) for h in subgroups]
        return cls(parent, subgroups, maximal_flags, normal_flags)

    @cached_property
    def positions(self):
        return {h.members: i for i, h in enumerate(self.subgroups)}

    def index_of(self, h):
        return self.positions[h.members]

    def find(self, members):
        """
        The lattice entry with the given bitset, or None.
        """
        position = self.positions.get(members)
        return None if position is None else self.subgroups[position]

    @property
    def trivial(self):
        return self.subgroups[0]

    @property
    def whole(self):
        return self.subgroups[-1]

    @cached_property
    def maximal(self):
        return tuple(h for h, flag in zip(self.subgroups, self.maximal_flags) if flag)

    @cached_property
    def proper(self):
        return tuple(h for h in self.subgroups if h.is_proper())

    @cached_property
    def nontrivial_proper(self):
        return tuple(h for h in self.proper if not h.is_trivial())

    @cached_property
    def normal(self):
        return tuple(h for h, flag in zip(self.subgroups, self.normal_flags) if flag)

    def of_order(self, m):
        return tuple(h for h in self.subgroups if h.size == m)

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __repr__(self):
        return "<SubgroupLattice of {} with {} subgroups>".format(self.parent.spec or "?", len(self.subgroups))


def all_subgroups(g):
    """
    Enumerates every subgroup of g: seed with all cyclic subgroups, then keep
    joining each known subgroup with each cyclic subgroup until no new
    subgroup appears. Every subgroup is generated by cyclic subgroups, so the
    fixpoint is the whole lattice.
    """
    check_cap(g.order, what="subgroup enumeration")
    cyclic = cyclic_subgroups(g)
    seeds = [h for h in sorted(cyclic.values(), key=lambda h: h.sort_key)]
    found = dict(cyclic)
    pending = list(seeds)
    while pending:
        h = pending.pop()
        for c in seeds:
            if bits.is_subset(c.members, h.members):
                continue
            k = join(h, c.generating_set()[0])
            if k.members not in found:
                found[k.members] = k
                pending.append(k)
    lattice = SubgroupLattice.from_subgroups(g, found.values())
    logger.debug(
        "%s: %i subgroups (%i cyclic, %i maximal, %i normal)",
        g.spec, len(lattice), len(cyclic), len(lattice.maximal), len(lattice.normal),
    )
    return lattice


def all_subgroups_by_subset_scan(g):
    """
    Independent oracle: tests every subset containing the identity whose size
    divides |g| for closure under the product. Exponential, so only for tiny
    groups.
    """
    rows = g.rows
    n = g.order
    found = []
    for size in (d for d in range(1, n + 1) if n % d == 0):
        for rest in itertools.combinations(range(1, n), size - 1):
            elements = (0, ) + rest
            members = bits.from_indices(elements)
            if all(rows[a][b] in elements for a in elements for b in elements):
                found.append(SubgroupSet(g, members))
    return SubgroupLattice.from_subgroups(g, found)


def maximal_subgroups(lattice):
    return list(lattice.maximal)


def proper_subgroups(lattice):
    return list(lattice.proper)


def subgroups_of_order(lattice, m):
    return list(lattice.of_order(m))


def normal_subgroups(lattice):
    return list(lattice.normal)


def is_normal(g, h):
    """
    True iff x s x^-1 lies in h for every x in g and every generator s of h.
    """
    if h.is_trivial() or h.is_whole():
        return True
    if g.is_abelian:
        return True
    generators = np.array(h.generating_set(), dtype=np.int64)
    conjugates = g.product[g.product[:, generators], g.inverse[:, None]]
    mask = np.zeros(g.order, dtype=bool)
    mask[list(h.elements)] = True
    return bool(mask[conjugates].all())


def intersect(a, b):
    check_same_parent(a, b)
    return SubgroupSet(a.parent, a.members & b.members)


def is_subset(a, b):
    check_same_parent(a, b)
    return bits.is_subset(a.members, b.members)


def index(g, h):
    return g.order // h.size


def is_cyclic(h):
    orders = h.parent.element_orders
    return any(orders[e] == h.size for e in h.elements)


def frattini(lattice):
    """
    Intersection of all maximal subgroups (the whole group when there are none).
    """
    members = lattice.whole.members
    for h in lattice.maximal:
        members &= h.members
    return lattice.find(members)


def min_generators_2group(g, lattice=None):
    """
    Minimal number of generators of a 2-group: log2 of the Frattini index.
    """
    if g.order > 1:
        pp = prime_power(g.order)
        if pp is None or pp[0] != 2:
            raise NotAPGroupError("{} has order {}, not a power of 2".format(g.spec or "group", g.order))
    lattice = lattice or all_subgroups(g)
    return (index(g, frattini(lattice))).bit_length() - 1
