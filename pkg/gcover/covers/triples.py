import itertools
import logging
import attr

from ..constants import C3Method
from ..exceptions import ParentMismatchError
from ..lattice.subgroups import SubgroupSet, check_same_parent, is_normal
from ..quotients.quotient import count_klein_quotients, is_klein_four, quotient
from ..utils import bits


logger = logging.getLogger(__name__)


@attr.s(frozen=True, repr=False)
class CoverTriple:
    """
    Three distinct proper subgroups, kept in canonical lattice order together
    with their lattice positions. Whether they cover the group is a property
    of the triple, not an invariant of the type.
    """
    parent = attr.ib(eq=False)
    members = attr.ib(converter=tuple)
    positions = attr.ib(converter=tuple)

    @classmethod
    def from_positions(cls, lattice, positions):
        positions = sorted(positions)
        if len(set(positions)) != 3:
            raise ValueError("A cover triple needs three distinct subgroups, got positions {}".format(positions))
        members = [lattice.subgroups[p] for p in positions]
        if any(h.is_whole() for h in members):
            raise ValueError("Cover triple members must be proper subgroups")
        return cls(lattice.parent, members, positions)

    @property
    def union(self):
        return self.members[0].members | self.members[1].members | self.members[2].members

    @property
    def intersection(self):
        return self.members[0].members & self.members[1].members & self.members[2].members

    def covers(self):
        return self.union == bits.full(self.parent.order)

    def kernel(self):
        """
        The intersection of the three members, as a subgroup.
        """
        return SubgroupSet(self.parent, self.intersection)

    def to_dict(self):
        return {
            "positions": list(self.positions),
            "subgroups": [{"size": h.size, "members": h.hex()} for h in self.members],
        }

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return "<CoverTriple {} {}>".format(self.parent.spec or "?", list(self.positions))


def is_cover(g, parts):
    """
    True iff the union of `parts` is the whole of g.
    """
    parts = list(parts)
    if not parts:
        return False
    check_same_parent(*parts)
    if parts[0].parent is not g and not parts[0].parent.same_table(g):
        raise ParentMismatchError("Cover parts do not belong to {}".format(g.spec or "the group"))
    union = 0
    for h in parts:
        union |= h.members
    return union == bits.full(g.order)


def is_irredundant_triple(h1, h2, h3):
    """
    True iff none of the three is contained in the union of the other two.
    """
    check_same_parent(h1, h2, h3)
    a, b, c = h1.members, h2.members, h3.members
    return not (
        bits.is_subset(a, b | c)
        or bits.is_subset(b, a | c)
        or bits.is_subset(c, a | b)
    )


def iter_three_covers(g, lattice):
    """
    Yields every cover of g by three distinct nontrivial proper subgroups,
    in canonical order.

    For each pair H1 < H2 the third member must contain everything the pair
    misses, so candidates are found by intersecting, over the missed
    elements, the sets of later subgroups containing each element. Pairs
    that miss more elements than any proper subgroup could hold are skipped.
    """
    candidates = lattice.nontrivial_proper
    if len(candidates) < 3:
        return
    positions = [lattice.index_of(h) for h in candidates]
    masks = [h.members for h in candidates]
    full = bits.full(g.order)
    largest = max(h.size for h in candidates)
    containing = [0] * g.order
    for c, h in enumerate(candidates):
        for e in h.elements:
            containing[e] |= 1 << c
    for j in range(1, len(candidates)):
        later = (bits.full(len(candidates)) >> (j + 1)) << (j + 1)
        for i in range(j):
            missed = full & ~(masks[i] | masks[j])
            # The identity is never missed, and the third member also holds it
            if bits.popcount(missed) > largest - 1:
                continue
            allowed = later
            for e in bits.to_indices(missed):
                allowed &= containing[e]
                if not allowed:
                    break
            for k in bits.to_indices(allowed):
                yield CoverTriple(
                    g,
                    (candidates[i], candidates[j], candidates[k]),
                    (positions[i], positions[j], positions[k]),
                )


def enumerate_three_covers(g, lattice):
    return list(iter_three_covers(g, lattice))


def c3(g, lattice, method=C3Method.ENUMERATION):
    """
    Number of coverings of g by three proper subgroups, either counted
    directly or through the Klein four quotients they correspond to.
    """
    if method == C3Method.ENUMERATION:
        return sum(1 for _ in iter_three_covers(g, lattice))
    elif method == C3Method.QUOTIENT_COUNT:
        return count_klein_quotients(g, lattice)
    raise ValueError("Unknown c3 method {!r}".format(method))


@attr.s(frozen=True)
class CoverStructure:
    """
    What a three-cover says about its kernel H (the members' intersection).
    """
    kernel = attr.ib()
    normal = attr.ib()
    squares_in_kernel = attr.ib()
    klein_quotient = attr.ib()

    def holds(self):
        return self.normal and self.squares_in_kernel and self.klein_quotient


def cover_structure(g, triple):
    kernel = triple.kernel()
    normal = is_normal(g, kernel)
    squares_in_kernel = all(s in kernel for s in g.squares)
    klein = normal and is_klein_four(quotient(g, kernel).quotient)
    return CoverStructure(kernel, normal, squares_in_kernel, klein)


def _iter_triples(lattice):
    candidates = lattice.nontrivial_proper
    positions = [lattice.index_of(h) for h in candidates]
    for combo in itertools.combinations(range(len(candidates)), 3):
        yield CoverTriple(
            lattice.parent,
            [candidates[c] for c in combo],
            [positions[c] for c in combo],
        )


def find_noncovering_irredundant_triple(g, lattice):
    """
    The first irredundant triple (canonical order) that does not cover g,
    or None. Triples containing the trivial subgroup are never irredundant,
    so only nontrivial proper subgroups are scanned.
    """
    for triple in _iter_triples(lattice):
        if is_irredundant_triple(*triple.members) and not triple.covers():
            return triple
    return None


def find_irredundant_triple(g, lattice):
    for triple in _iter_triples(lattice):
        if is_irredundant_triple(*triple.members):
            return triple
    return None


def find_noncovering_distinct_triple(g, lattice):
    """
    The first triple of distinct nontrivial proper subgroups that does not
    cover g, or None.
    """
    for triple in _iter_triples(lattice):
        if not triple.covers():
            return triple
    return None
