import os
import yaml

from .constants import (
    DEFAULT_MAX_ORDER,
    DEFAULT_SIGMA_CAP,
    DEFAULT_WORKERS,
    ISOMORPHISM_CAP,
    TABLE_CAP,
    TABLE_CAP_ENV,
)
from .exceptions import BadConfigError


DEFAULT_CONFIG_PATH = os.path.expanduser("~/.gcover/config.yaml")
BUILTIN_CATALOG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "catalog", "catalog.yaml")


class Config(object):
    """
    Main config manager. Dumb key-value store that loads config files from
    the given paths on top of the defaults and presents a combined view.

    A schema is used to check every section, key and value type. The
    GCOVER_MAX_ORDER environment variable overrides limits.table_cap after
    all files have been applied.
    """

    schema = {
        "limits": {
            "table_cap": int,
            "sigma_cap": int,
            "max_order": int,
            "isomorphism_cap": int,
        },
        "runner": {
            "workers": int,
        },
        "catalog": {
            "path": str,
        },
    }

    defaults = {
        "limits": {
            "table_cap": TABLE_CAP,
            "sigma_cap": DEFAULT_SIGMA_CAP,
            "max_order": DEFAULT_MAX_ORDER,
            "isomorphism_cap": ISOMORPHISM_CAP,
        },
        "runner": {
            "workers": DEFAULT_WORKERS,
        },
        "catalog": {
            "path": BUILTIN_CATALOG_PATH,
        },
    }

    def __init__(self, file_paths=(), environ=None):
        self.file_paths = file_paths
        self.environ = os.environ if environ is None else environ
        self.load()

    @classmethod
    def default_paths(cls):
        """
        Config files picked up without being named on the command line.
        """
        if os.path.isfile(DEFAULT_CONFIG_PATH):
            return (DEFAULT_CONFIG_PATH, )
        return ()

    def load(self):
        """
        Loads data from the files, then applies environment overrides.
        """
        self.data = {}
        self.add_config(self.defaults, "<defaults>")
        for file_path in self.file_paths:
            with open(file_path, "r") as fh:
                file_data = yaml.safe_load(fh.read())
            # An empty file is a valid (empty) config
            self.add_config(file_data or {}, file_path)
        self.apply_environment()

    def add_config(self, data, filename):
        """
        Adds the given config on top of the existing ones. Used during load
        and directly for CLI options.
        """
        if not isinstance(data, dict):
            raise BadConfigError("Config %s is not a dict at the top level." % filename)
        for section, items in data.items():
            if not isinstance(items, dict):
                raise BadConfigError("Section %s in %s is not a dict" % (section, filename))
            if section not in self.schema:
                raise BadConfigError("Section %s in %s not in schema" % (section, filename))
            for key, value in items.items():
                if key not in self.schema[section]:
                    raise BadConfigError("%s.%s in %s not in schema" % (section, key, filename))
                valid_type = self.schema[section][key]
                # bool is an int subclass, but never a valid limit
                if not isinstance(value, valid_type) or isinstance(value, bool):
                    raise BadConfigError("%s.%s in %s is not %s" % (section, key, filename, valid_type.__name__))
                if valid_type is int and value < 1:
                    raise BadConfigError("%s.%s in %s must be positive" % (section, key, filename))
                self.data.setdefault(section, {})[key] = value

    def apply_environment(self):
        raw = self.environ.get(TABLE_CAP_ENV)
        if raw is None or raw == "":
            return
        try:
            value = int(raw)
        except ValueError:
            raise BadConfigError("%s must be an integer, got %r" % (TABLE_CAP_ENV, raw))
        self.add_config({"limits": {"table_cap": value}}, "$" + TABLE_CAP_ENV)

    def __getitem__(self, key):
        return self.data[key]

    def get(self, section, key):
        return self.data[section][key]
