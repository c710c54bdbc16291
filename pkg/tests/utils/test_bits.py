import unittest

from hypothesis import given
from hypothesis import strategies as st

from gcover.utils import bits


class BitsTests(unittest.TestCase):
    """
    Tests the integer bitset helpers
    """

    def test_indices(self):
        self.assertEqual(bits.from_indices([0, 2, 5]), 0b100101)
        self.assertEqual(bits.to_indices(0b100101), [0, 2, 5])
        self.assertEqual(bits.to_indices(0), [])
        with self.assertRaises(ValueError):
            bits.from_indices([-1])

    def test_helpers(self):
        self.assertEqual(bits.full(4), 0b1111)
        self.assertEqual(bits.full(0), 0)
        self.assertEqual(bits.popcount(0b1011), 3)
        self.assertTrue(bits.is_subset(0b0101, 0b1101))
        self.assertFalse(bits.is_subset(0b0111, 0b1101))
        self.assertEqual(bits.to_hex(255), "0xff")

    @given(st.sets(st.integers(min_value=0, max_value=200)))
    def test_indices_match_sets(self, indices):
        packed = bits.from_indices(indices)
        self.assertEqual(bits.to_indices(packed), sorted(indices))
        self.assertEqual(bits.popcount(packed), len(indices))
