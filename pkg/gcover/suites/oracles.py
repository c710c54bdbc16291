from ..constants import SUBSET_ORACLE_LIMIT
from ..covers.sigma import sigma_over
from ..lattice.subgroups import all_subgroups_by_subset_scan
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite


class OraclesPlugin(BasePlugin):
    """
    Brute-force cross-checks for the fast algorithms on small groups.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", OraclesSuite.name, OraclesSuite)


class OraclesSuite(BaseSuite):
    """
    On small groups the lattice matches an exhaustive subset scan and sigma
    over maximal subgroups matches sigma over all proper subgroups.
    """

    name = "oracles"
    description = "Brute-force oracles"
    order_limit = SUBSET_ORACLE_LIMIT

    def prepare(self, analysis):
        analysis.sigma

    def check_subset_scan(self):
        """subgroup lattice matches the exhaustive subset scan"""
        for analysis in self.analyses():
            fast = {h.members for h in analysis.lattice}
            slow = {h.members for h in all_subgroups_by_subset_scan(analysis.group)}
            if fast != slow:
                raise self.Failure(
                    "{}: lattices differ".format(analysis.spec),
                    witness={
                        "spec": analysis.spec,
                        "missing": sorted(hex(m) for m in slow - fast),
                        "extra": sorted(hex(m) for m in fast - slow),
                    },
                )

    def check_sigma_over_all_proper(self):
        """sigma over maximal subgroups matches sigma over all proper subgroups"""
        for analysis in self.analyses():
            slow = sigma_over(analysis.group, analysis.lattice.proper, cap=analysis.sigma_cap)
            if slow.value != analysis.sigma.value:
                raise self.Failure(
                    "{}: sigma {} over maximals, {} over all proper subgroups".format(
                        analysis.spec, analysis.sigma.value, slow.value,
                    ),
                    witness={"spec": analysis.spec, "maximal": analysis.sigma.serialize(), "all": slow.serialize()},
                )
