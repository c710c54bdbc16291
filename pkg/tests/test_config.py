import os
import tempfile
import unittest

from gcover.config import BUILTIN_CATALOG_PATH, Config
from gcover.exceptions import BadConfigError


class ConfigTests(unittest.TestCase):
    """
    Tests the layered, schema-checked configuration
    """

    def test_defaults(self):
        config = Config(environ={})
        self.assertEqual(config.get("limits", "table_cap"), 4096)
        self.assertEqual(config.get("limits", "sigma_cap"), 12)
        self.assertEqual(config.get("limits", "max_order"), 64)
        self.assertEqual(config.get("runner", "workers"), 4)
        self.assertEqual(config.get("catalog", "path"), BUILTIN_CATALOG_PATH)
        self.assertEqual(config["limits"]["isomorphism_cap"], 24)

    def test_file_overrides_defaults(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "config.yaml")
            with open(path, "w") as fh:
                fh.write("limits:\n  sigma_cap: 8\nrunner:\n  workers: 1\n")
            config = Config([path], environ={})
        self.assertEqual(config.get("limits", "sigma_cap"), 8)
        self.assertEqual(config.get("runner", "workers"), 1)
        # Untouched keys keep their defaults
        self.assertEqual(config.get("limits", "max_order"), 64)

    def test_empty_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "config.yaml")
            open(path, "w").close()
            config = Config([path], environ={})
        self.assertEqual(config.get("limits", "sigma_cap"), 12)

    def test_schema_errors(self):
        config = Config(environ={})
        with self.assertRaises(BadConfigError):
            config.add_config(["limits"], "test")
        with self.assertRaises(BadConfigError):
            config.add_config({"limits": 3}, "test")
        with self.assertRaises(BadConfigError):
            config.add_config({"plotting": {"dpi": 300}}, "test")
        with self.assertRaises(BadConfigError):
            config.add_config({"limits": {"depth": 3}}, "test")
        with self.assertRaises(BadConfigError):
            config.add_config({"limits": {"sigma_cap": "12"}}, "test")
        with self.assertRaises(BadConfigError):
            config.add_config({"limits": {"sigma_cap": True}}, "test")
        with self.assertRaises(BadConfigError):
            config.add_config({"runner": {"workers": 0}}, "test")

    def test_environment_override(self):
        config = Config(environ={"GCOVER_MAX_ORDER": "100"})
        self.assertEqual(config.get("limits", "table_cap"), 100)
        config = Config(environ={"GCOVER_MAX_ORDER": ""})
        self.assertEqual(config.get("limits", "table_cap"), 4096)
        with self.assertRaises(BadConfigError):
            Config(environ={"GCOVER_MAX_ORDER": "lots"})
