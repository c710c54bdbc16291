import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from gcover.constants import C3Method
from gcover.covers import (
    CoverTriple,
    c3,
    cover_structure,
    enumerate_three_covers,
    is_cover,
    is_irredundant_triple,
)
from gcover.exceptions import ParentMismatchError
from gcover.groups import parse_group_spec
from gcover.lattice import all_subgroups, closure, subgroups_of_order


def lattice_of(spec):
    g = parse_group_spec(spec)
    return g, all_subgroups(g)


class IsCoverTests(unittest.TestCase):
    """
    Tests the union predicate
    """

    def test_klein(self):
        g, lattice = lattice_of("C2 x C2")
        self.assertTrue(is_cover(g, lattice.maximal))
        self.assertFalse(is_cover(g, lattice.maximal[:2]))

    def test_whole_group(self):
        g, lattice = lattice_of("S3")
        self.assertTrue(is_cover(g, [lattice.whole]))

    def test_quaternion_maximals_and_center(self):
        g, lattice = lattice_of("Q8")
        center = subgroups_of_order(lattice, 2)[0]
        self.assertFalse(is_cover(g, [lattice.maximal[0], lattice.maximal[1], center]))
        self.assertTrue(is_cover(g, lattice.maximal))

    def test_empty(self):
        g = parse_group_spec("C1")
        self.assertFalse(is_cover(g, []))

    def test_parent_mismatch(self):
        g = parse_group_spec("C4")
        other = closure(parse_group_spec("C2 x C2"), [1])
        with self.assertRaises(ParentMismatchError):
            is_cover(g, [other])
        with self.assertRaises(ParentMismatchError):
            is_cover(g, [closure(g, [2]), other])


class IrredundantTests(unittest.TestCase):

    def test_trivial_member(self):
        g, lattice = lattice_of("C2 x C2")
        a, b = lattice.maximal[:2]
        self.assertFalse(is_irredundant_triple(lattice.trivial, a, b))

    def test_quaternion(self):
        g, lattice = lattice_of("Q8")
        self.assertTrue(is_irredundant_triple(*lattice.maximal))
        center = subgroups_of_order(lattice, 2)[0]
        self.assertFalse(is_irredundant_triple(center, lattice.maximal[0], lattice.maximal[1]))

    def test_elementary(self):
        g, lattice = lattice_of("E(2,3)")
        order_two = subgroups_of_order(lattice, 2)
        self.assertTrue(is_irredundant_triple(*order_two[:3]))


class EnumerationTests(unittest.TestCase):
    """
    Tests three-cover enumeration and counting
    """

    def test_klein(self):
        g, lattice = lattice_of("C2 x C2")
        covers = enumerate_three_covers(g, lattice)
        self.assertEqual(len(covers), 1)
        self.assertEqual(list(covers[0].members), list(lattice.maximal))
        self.assertTrue(covers[0].covers())
        self.assertTrue(covers[0].kernel().is_trivial())

    def test_elementary_abelian(self):
        g, lattice = lattice_of("E(2,3)")
        covers = enumerate_three_covers(g, lattice)
        self.assertEqual(len(covers), 7)
        self.assertEqual(len({cover.positions for cover in covers}), 7)
        for cover in covers:
            self.assertEqual(list(cover.positions), sorted(cover.positions))

    def test_cyclic(self):
        g, lattice = lattice_of("C6")
        self.assertEqual(enumerate_three_covers(g, lattice), [])
        g, lattice = lattice_of("C1")
        self.assertEqual(enumerate_three_covers(g, lattice), [])

    def test_quaternion(self):
        g, lattice = lattice_of("Q8")
        covers = enumerate_three_covers(g, lattice)
        self.assertEqual(len(covers), 1)
        self.assertEqual(covers[0].kernel().elements, g.center)

    def test_c3_methods(self):
        g, lattice = lattice_of("E(2,4)")
        self.assertEqual(c3(g, lattice), 35)
        self.assertEqual(c3(g, lattice, method=C3Method.ENUMERATION), 35)
        self.assertEqual(c3(g, lattice, method=C3Method.QUOTIENT_COUNT), 35)
        with self.assertRaises(ValueError):
            c3(g, lattice, method="guess")

    def test_dihedral(self):
        for order, expected in [(6, 0), (10, 0), (14, 0), (8, 1), (12, 1), (16, 1), (24, 1)]:
            g, lattice = lattice_of("D{}".format(order))
            self.assertEqual(c3(g, lattice), expected, order)

    def test_to_dict(self):
        g, lattice = lattice_of("C2 x C2")
        data = enumerate_three_covers(g, lattice)[0].to_dict()
        self.assertEqual(data["positions"], [1, 2, 3])
        self.assertEqual([s["size"] for s in data["subgroups"]], [2, 2, 2])

    def test_from_positions(self):
        g, lattice = lattice_of("C2 x C2")
        triple = CoverTriple.from_positions(lattice, [3, 1, 2])
        self.assertEqual(triple.positions, (1, 2, 3))
        self.assertTrue(triple.covers())
        with self.assertRaises(ValueError):
            CoverTriple.from_positions(lattice, [1, 1, 2])
        with self.assertRaises(ValueError):
            CoverTriple.from_positions(lattice, [1, 2, 4])

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(["C2 x C2", "Q8", "D8", "D12", "E(2,3)", "C2 x C4", "Q8 x C3", "S4", "C2 x C2 x C3"]))
    def test_methods_agree(self, spec):
        g, lattice = lattice_of(spec)
        self.assertEqual(
            c3(g, lattice, method=C3Method.ENUMERATION),
            c3(g, lattice, method=C3Method.QUOTIENT_COUNT),
        )

    @settings(max_examples=15, deadline=None)
    @given(st.sampled_from(["C2 x C2", "Q8", "D8", "E(2,3)", "C2 x C4", "D24"]), st.data())
    def test_count_invariant_under_relabeling(self, spec, data):
        g = parse_group_spec(spec)
        permutation = [0] + list(data.draw(st.permutations(range(1, g.order))))
        relabeled = g.relabel(permutation)
        self.assertEqual(c3(g, all_subgroups(g)), c3(relabeled, all_subgroups(relabeled)))


class CoverStructureTests(unittest.TestCase):
    """
    Every three-cover has a normal kernel holding all squares, with a Klein
    four quotient
    """

    def test_structure(self):
        for spec in ("C2 x C2", "Q8", "D8", "E(2,3)", "C2 x C4", "Q8 x C3", "D24", "C2 x Q8"):
            g, lattice = lattice_of(spec)
            for cover in enumerate_three_covers(g, lattice):
                structure = cover_structure(g, cover)
                self.assertTrue(structure.normal, spec)
                self.assertTrue(structure.squares_in_kernel, spec)
                self.assertTrue(structure.klein_quotient, spec)
                self.assertTrue(structure.holds())
                self.assertEqual(structure.kernel.size * 4, g.order)
