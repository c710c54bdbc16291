import unittest

from gcover.exceptions import NotNormalError, ParentMismatchError
from gcover.groups import build_elementary_abelian, parse_group_spec
from gcover.lattice import all_subgroups, closure, subgroups_of_order
from gcover.quotients import (
    count_klein_quotients,
    elementary_abelian_2_kernels,
    has_quotient_isomorphic_to,
    is_elem_abelian_8,
    is_klein_four,
    klein_kernels,
    quotient,
)


def lattice_of(spec):
    g = parse_group_spec(spec)
    return g, all_subgroups(g)


class QuotientTests(unittest.TestCase):
    """
    Tests quotient construction
    """

    def test_whole_kernel(self):
        g, lattice = lattice_of("S4")
        q = quotient(g, lattice.whole)
        self.assertEqual(q.order, 1)
        self.assertEqual(set(q.coset_of), {0})

    def test_trivial_kernel(self):
        g, lattice = lattice_of("S3")
        q = quotient(g, lattice.trivial)
        self.assertEqual(q.order, 6)
        self.assertEqual(q.representatives, tuple(range(6)))

    def test_dihedral(self):
        g = parse_group_spec("D8")
        kernel = closure(g, [g.multiply(1, 1)])
        q = quotient(g, kernel)
        self.assertEqual(q.order, 4)
        self.assertTrue(is_klein_four(q.quotient))
        self.assertTrue(q.is_well_defined())
        self.assertEqual(q.coset_of[0], 0)
        self.assertEqual(q.representatives[0], 0)

    def test_quaternion_center(self):
        g, lattice = lattice_of("Q8")
        center = lattice.find(0b101)
        q = quotient(g, center)
        self.assertTrue(is_klein_four(q.quotient))
        self.assertTrue(q.is_well_defined())

    def test_cyclic(self):
        g, lattice = lattice_of("C12")
        q = quotient(g, subgroups_of_order(lattice, 3)[0])
        self.assertEqual(q.order, 4)
        self.assertFalse(is_klein_four(q.quotient))
        self.assertEqual(q.quotient.exponent, 4)

    def test_not_normal(self):
        g, lattice = lattice_of("S3")
        with self.assertRaises(NotNormalError):
            quotient(g, subgroups_of_order(lattice, 2)[0])

    def test_wrong_parent(self):
        g = parse_group_spec("C4")
        other = closure(parse_group_spec("C2 x C2"), [1])
        with self.assertRaises(ParentMismatchError):
            quotient(g, other)


class KleinTests(unittest.TestCase):
    """
    Tests Klein four quotient recognition and counting
    """

    def test_predicates(self):
        self.assertFalse(is_klein_four(parse_group_spec("C4")))
        self.assertTrue(is_klein_four(build_elementary_abelian(2, 2)))
        self.assertFalse(is_klein_four(parse_group_spec("C2")))
        g, lattice = lattice_of("E(2,3)")
        self.assertTrue(is_elem_abelian_8(quotient(g, lattice.trivial).quotient))
        self.assertFalse(is_elem_abelian_8(parse_group_spec("C2 x C4")))
        self.assertFalse(is_elem_abelian_8(parse_group_spec("Q8")))

    def test_counts(self):
        for spec, count in [
            ("C2 x C2", 1),
            ("E(2,3)", 7),
            ("E(2,4)", 35),
            ("S3", 0),
            ("Q8", 1),
            ("D12", 1),
            ("D10", 0),
            ("C8", 0),
            ("A4", 0),
        ]:
            g, lattice = lattice_of(spec)
            self.assertEqual(count_klein_quotients(g, lattice), count, spec)

    def test_kernels(self):
        g, lattice = lattice_of("D16")
        kernels = klein_kernels(g, lattice)
        self.assertEqual(len(kernels), 1)
        self.assertEqual(kernels[0], closure(g, [g.multiply(1, 1)]))

    def test_rank_three_kernels(self):
        g, lattice = lattice_of("E(2,3)")
        self.assertEqual(elementary_abelian_2_kernels(g, lattice, 3), [lattice.trivial])
        self.assertEqual(len(elementary_abelian_2_kernels(g, lattice, 2)), 7)
        g, lattice = lattice_of("Q8")
        self.assertEqual(elementary_abelian_2_kernels(g, lattice, 3), [])


class QuotientIsomorphismTests(unittest.TestCase):

    def test_alternating(self):
        g, lattice = lattice_of("A4")
        self.assertFalse(has_quotient_isomorphic_to(g, lattice, parse_group_spec("E(3,2)")))
        self.assertFalse(has_quotient_isomorphic_to(g, lattice, parse_group_spec("S3")))
        self.assertTrue(has_quotient_isomorphic_to(g, lattice, parse_group_spec("A4")))
        self.assertTrue(has_quotient_isomorphic_to(g, lattice, parse_group_spec("C3")))

    def test_symmetric(self):
        g, lattice = lattice_of("S4")
        self.assertTrue(has_quotient_isomorphic_to(g, lattice, parse_group_spec("S3")))
        self.assertFalse(has_quotient_isomorphic_to(g, lattice, parse_group_spec("C2 x C2")))

    def test_klein(self):
        g, lattice = lattice_of("C2 x C2")
        self.assertTrue(has_quotient_isomorphic_to(g, lattice, build_elementary_abelian(2, 2)))
        self.assertFalse(has_quotient_isomorphic_to(g, lattice, parse_group_spec("C3")))
