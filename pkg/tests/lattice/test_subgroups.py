import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from gcover.exceptions import NotAPGroupError, ParentMismatchError
from gcover.groups import parse_group_spec
from gcover.lattice import (
    all_subgroups,
    all_subgroups_by_subset_scan,
    closure,
    frattini,
    index,
    intersect,
    is_cyclic,
    is_normal,
    is_subset,
    join,
    maximal_subgroups,
    min_generators_2group,
    normal_subgroups,
    proper_subgroups,
    subgroups_of_order,
)


def lattice_of(spec):
    g = parse_group_spec(spec)
    return g, all_subgroups(g)


class ClosureTests(unittest.TestCase):
    """
    Tests subgroup generation
    """

    def test_empty_generators(self):
        g = parse_group_spec("S4")
        h = closure(g, [])
        self.assertTrue(h.is_trivial())
        self.assertEqual(h.elements, (0, ))

    def test_dihedral_squares(self):
        g = parse_group_spec("D8")
        # Index 1 is the rotation x
        h = closure(g, [g.multiply(1, 1)])
        self.assertEqual(h.size, 2)
        self.assertEqual(h.elements, (0, 2))

    def test_quaternion_cyclic(self):
        g = parse_group_spec("Q8")
        h = closure(g, [1])
        self.assertEqual(h.size, 4)
        self.assertTrue(is_cyclic(h))

    def test_whole_group(self):
        g = parse_group_spec("S3")
        # A transposition and a 3-cycle
        self.assertTrue(closure(g, [1, 3]).is_whole())
        self.assertEqual(closure(g, [1]).size, 2)
        self.assertTrue(closure(g, range(g.order)).is_whole())

    def test_out_of_range(self):
        with self.assertRaises(IndexError):
            closure(parse_group_spec("C4"), [4])

    def test_join(self):
        g = parse_group_spec("C2 x C2")
        h = closure(g, [1])
        self.assertIs(join(h, 1), h)
        self.assertTrue(join(h, 2).is_whole())


class LatticeTests(unittest.TestCase):
    """
    Tests lattice enumeration against known subgroup counts
    """

    def test_counts(self):
        for spec, count in [
            ("C1", 1),
            ("C2 x C2", 5),
            ("Q8", 6),
            ("S3", 6),
            ("C6", 4),
            ("D8", 10),
            ("E(2,3)", 16),
            ("A4", 10),
            ("S4", 30),
        ]:
            self.assertEqual(len(lattice_of(spec)[1]), count, spec)

    def test_sorted(self):
        g, lattice = lattice_of("D12")
        keys = [h.sort_key for h in lattice]
        self.assertEqual(keys, sorted(keys))
        self.assertTrue(lattice.trivial.is_trivial())
        self.assertTrue(lattice.whole.is_whole())
        for position, h in enumerate(lattice):
            self.assertEqual(lattice.index_of(h), position)
            self.assertIs(lattice.find(h.members), h)
        self.assertIsNone(lattice.find(0b10))

    def test_maximal_klein(self):
        g, lattice = lattice_of("C2 x C2")
        maximal = maximal_subgroups(lattice)
        self.assertEqual(len(maximal), 3)
        self.assertTrue(all(h.size == 2 for h in maximal))

    def test_maximal_cyclic(self):
        g, lattice = lattice_of("C6")
        self.assertEqual(sorted(h.size for h in maximal_subgroups(lattice)), [2, 3])

    def test_trivial_group(self):
        g, lattice = lattice_of("C1")
        self.assertEqual(maximal_subgroups(lattice), [])
        self.assertEqual(proper_subgroups(lattice), [])

    def test_proper(self):
        g, lattice = lattice_of("Q8")
        self.assertEqual(len(proper_subgroups(lattice)), 5)
        self.assertEqual(len(lattice.nontrivial_proper), 4)

    def test_quaternion_order_four(self):
        for order, expected in [(8, 3), (16, 5), (32, 9)]:
            g, lattice = lattice_of("Q{}".format(order))
            found = subgroups_of_order(lattice, 4)
            self.assertEqual(len(found), expected)
            self.assertTrue(all(is_cyclic(h) for h in found))

    def test_alternating_has_no_order_six(self):
        g, lattice = lattice_of("A4")
        self.assertEqual(subgroups_of_order(lattice, 6), [])

    def test_cyclic_has_one_per_divisor(self):
        g, lattice = lattice_of("C12")
        self.assertEqual([h.size for h in lattice], [1, 2, 3, 4, 6, 12])

    @settings(max_examples=15, deadline=None)
    @given(st.sampled_from(["C1", "C4", "C2 x C2", "S3", "C8", "D8", "Q8", "E(3,2)", "D10", "C2 x C4"]))
    def test_matches_subset_scan(self, spec):
        g = parse_group_spec(spec)
        fast = [h.members for h in all_subgroups(g)]
        slow = [h.members for h in all_subgroups_by_subset_scan(g)]
        self.assertEqual(fast, slow)

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(["S3", "Q8", "D8", "A4", "C2 x C4"]), st.data())
    def test_relabel_keeps_lattice_shape(self, spec, data):
        g = parse_group_spec(spec)
        permutation = [0] + list(data.draw(st.permutations(range(1, g.order))))
        relabeled = g.relabel(permutation)
        before, after = all_subgroups(g), all_subgroups(relabeled)
        self.assertEqual([h.size for h in before], [h.size for h in after])
        self.assertEqual(len(before.maximal), len(after.maximal))
        self.assertEqual(len(before.normal), len(after.normal))


class NormalityTests(unittest.TestCase):

    def test_abelian(self):
        g, lattice = lattice_of("C2 x C4")
        self.assertTrue(all(is_normal(g, h) for h in lattice))

    def test_symmetric(self):
        g, lattice = lattice_of("S3")
        order_two = subgroups_of_order(lattice, 2)
        self.assertEqual(len(order_two), 3)
        self.assertFalse(any(is_normal(g, h) for h in order_two))
        self.assertEqual([h.size for h in normal_subgroups(lattice)], [1, 3, 6])

    def test_quaternion_is_hamiltonian(self):
        g, lattice = lattice_of("Q8")
        self.assertEqual(len(normal_subgroups(lattice)), 6)

    def test_dihedral(self):
        g, lattice = lattice_of("D8")
        self.assertEqual(len(normal_subgroups(lattice)), 6)


class SetOperationTests(unittest.TestCase):

    def test_intersect(self):
        g, lattice = lattice_of("Q8")
        a, b = lattice.maximal[0], lattice.maximal[1]
        self.assertEqual(intersect(a, a), a)
        center = intersect(a, b)
        self.assertEqual(center.size, 2)
        self.assertEqual(center.elements, g.center)
        self.assertTrue(is_subset(center, a))
        self.assertFalse(is_subset(a, b))
        self.assertEqual(index(g, center), 4)

    def test_parent_mismatch(self):
        a = closure(parse_group_spec("C4"), [2])
        b = closure(parse_group_spec("C2 x C2"), [2])
        with self.assertRaises(ParentMismatchError):
            intersect(a, b)
        with self.assertRaises(ParentMismatchError):
            is_subset(a, b)

    def test_same_table_counts_as_same_parent(self):
        a = closure(parse_group_spec("Q8"), [1])
        b = closure(parse_group_spec("Q8"), [4])
        self.assertEqual(intersect(a, b).size, 2)


class FrattiniTests(unittest.TestCase):

    def test_klein(self):
        g, lattice = lattice_of("C2 x C2")
        self.assertTrue(frattini(lattice).is_trivial())

    def test_quaternion(self):
        g, lattice = lattice_of("Q8")
        self.assertEqual(frattini(lattice).elements, (0, 2))
        self.assertEqual(min_generators_2group(g), 2)

    def test_cyclic(self):
        self.assertEqual(min_generators_2group(parse_group_spec("C8")), 1)
        self.assertEqual(frattini(all_subgroups(parse_group_spec("C8"))).size, 4)

    def test_elementary(self):
        self.assertEqual(min_generators_2group(parse_group_spec("E(2,4)")), 4)
        self.assertEqual(min_generators_2group(parse_group_spec("D16")), 2)
        self.assertEqual(min_generators_2group(parse_group_spec("C1")), 0)

    def test_not_a_two_group(self):
        with self.assertRaises(NotAPGroupError):
            min_generators_2group(parse_group_spec("C6"))
        with self.assertRaises(NotAPGroupError):
            min_generators_2group(parse_group_spec("C9"))
