import logging
import attr
import yaml

from ..config import BUILTIN_CATALOG_PATH
from ..constants import SigmaOutcome
from ..exceptions import BadConfigError
from ..groups.grammar import normalize_spec, parse_group_spec
from ..utils.functional import cached_property


logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class CatalogEntry:
    """
    One catalog group: its spec text plus the sigma and c3 values known in
    advance (None when unchecked) and a provenance note.
    """
    spec = attr.ib()
    sigma = attr.ib(default=None)
    c3 = attr.ib(default=None)
    note = attr.ib(default="")

    @cached_property
    def normalized_spec(self):
        return normalize_spec(self.spec)

    @cached_property
    def group(self):
        return parse_group_spec(self.spec)

    @property
    def order(self):
        return self.group.order

    def to_dict(self):
        return {
            "spec": self.normalized_spec,
            "order": self.order,
            "sigma": self.sigma,
            "c3": self.c3,
            "note": self.note,
        }


def _check_entry(raw, path):
    allowed = {"spec", "sigma", "c3", "note"}
    if not isinstance(raw, dict) or "spec" not in raw:
        raise BadConfigError("Catalog entry {!r} in {} has no spec".format(raw, path))
    unknown = set(raw) - allowed
    if unknown:
        raise BadConfigError("Catalog entry {} in {} has unknown keys {}".format(raw["spec"], path, sorted(unknown)))
    sigma = raw.get("sigma")
    if sigma is not None and not (
        (isinstance(sigma, int) and not isinstance(sigma, bool) and sigma >= 3)
        or sigma == SigmaOutcome.NO_COVER
    ):
        raise BadConfigError("Catalog entry {} in {} has invalid sigma {!r}".format(raw["spec"], path, sigma))
    c3 = raw.get("c3")
    if c3 is not None and (not isinstance(c3, int) or isinstance(c3, bool) or c3 < 0):
        raise BadConfigError("Catalog entry {} in {} has invalid c3 {!r}".format(raw["spec"], path, c3))
    entry = CatalogEntry(str(raw["spec"]), sigma, c3, str(raw.get("note") or ""))
    # Fail on load, not halfway through a verification run
    entry.normalized_spec
    return entry


def load_catalog(path=BUILTIN_CATALOG_PATH):
    """
    Reads a catalog YAML file: a top-level "groups" list of entries.
    """
    with open(path, "r") as fh:
        data = yaml.safe_load(fh.read())
    if not isinstance(data, dict) or not isinstance(data.get("groups"), list):
        raise BadConfigError("Catalog {} must have a top-level 'groups' list".format(path))
    entries = [_check_entry(raw, path) for raw in data["groups"]]
    seen = set()
    for entry in entries:
        if entry.normalized_spec in seen:
            raise BadConfigError("Catalog {} lists {} twice".format(path, entry.normalized_spec))
        seen.add(entry.normalized_spec)
    logger.debug("Loaded %i catalog entries from %s", len(entries), path)
    return entries


def catalog_list(path=BUILTIN_CATALOG_PATH, max_order=None):
    """
    The catalog in file order, optionally restricted to groups of order at
    most `max_order`.
    """
    entries = load_catalog(path)
    if max_order is not None:
        entries = [entry for entry in entries if entry.order <= max_order]
    return entries
