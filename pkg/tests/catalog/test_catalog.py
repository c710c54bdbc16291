import os
import tempfile
import unittest

from gcover.catalog import CatalogEntry, catalog_list, load_catalog
from gcover.constants import SigmaOutcome
from gcover.exceptions import BadConfigError, GroupSpecError


class BuiltinCatalogTests(unittest.TestCase):
    """
    Tests the checked-in group catalog
    """

    @classmethod
    def setUpClass(cls):
        cls.entries = {entry.normalized_spec: entry for entry in catalog_list()}

    def test_reference_entries(self):
        self.assertEqual(self.entries["SD(5,4,2)"].sigma, 6)
        self.assertEqual(self.entries["E(5,2)"].sigma, 6)
        self.assertEqual(self.entries["C1"].sigma, SigmaOutcome.NO_COVER)
        self.assertEqual(self.entries["C1"].c3, 0)
        self.assertEqual(self.entries["E(2,5)"].c3, 155)
        self.assertEqual(self.entries["Q8 x C3"].c3, 1)

    def test_power_specs_normalized(self):
        self.assertIn("C2 x C2 x C3", self.entries)
        self.assertIn("C2 x C2 x C2 x C5", self.entries)

    def test_expected_values_are_valid(self):
        for entry in self.entries.values():
            self.assertTrue(entry.sigma is None or entry.sigma == SigmaOutcome.NO_COVER or entry.sigma >= 3)
            self.assertTrue(entry.c3 is None or entry.c3 >= 0)
            self.assertTrue(entry.note)

    def test_max_order(self):
        small = catalog_list(max_order=8)
        self.assertEqual(len(small), 17)
        self.assertTrue(all(entry.order <= 8 for entry in small))
        self.assertEqual(small[0].normalized_spec, "C1")

    def test_to_dict(self):
        data = self.entries["Q8"].to_dict()
        self.assertEqual(data, {"spec": "Q8", "order": 8, "sigma": 3, "c3": 1, "note": data["note"]})

    def test_entry_group(self):
        entry = CatalogEntry("C2^2")
        self.assertEqual(entry.normalized_spec, "C2 x C2")
        self.assertEqual(entry.group.spec, "C2 x C2")
        self.assertEqual(entry.order, 4)


class CatalogFileTests(unittest.TestCase):
    """
    Tests catalog file validation
    """

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmpdir.name, "catalog.yaml")

    def tearDown(self):
        self.tmpdir.cleanup()

    def write(self, text):
        with open(self.path, "w") as fh:
            fh.write(text)

    def test_valid(self):
        self.write("groups:\n  - spec: C2 x C2\n    sigma: 3\n    c3: 1\n  - spec: C5\n")
        entries = load_catalog(self.path)
        self.assertEqual([entry.normalized_spec for entry in entries], ["C2 x C2", "C5"])
        self.assertIsNone(entries[1].sigma)
        self.assertEqual(entries[1].note, "")

    def test_invalid(self):
        for text in (
            "- spec: C2\n",
            "groups: C2\n",
            "groups:\n  - sigma: 3\n",
            "groups:\n  - spec: C2\n    colour: red\n",
            "groups:\n  - spec: C2 x C2\n    sigma: 2\n",
            "groups:\n  - spec: C2 x C2\n    sigma: infinite\n",
            "groups:\n  - spec: C2 x C2\n    c3: -1\n",
            "groups:\n  - spec: C2 x C2\n    c3: true\n",
            "groups:\n  - spec: C2\n  - spec: ' C2 '\n",
        ):
            self.write(text)
            with self.assertRaises(BadConfigError, msg=text):
                load_catalog(self.path)

    def test_bad_spec(self):
        self.write("groups:\n  - spec: Z5\n")
        with self.assertRaises(GroupSpecError):
            load_catalog(self.path)
