from ..constants import SigmaOutcome
from ..covers.triples import is_cover
from ..groups.grammar import parse_group_spec
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite, describe_subgroup


class TheoremAPlugin(BasePlugin):
    """
    Checks on the covering number sigma.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", TheoremASuite.name, TheoremASuite)


# Groups whose sigma is pinned down by their quotients
REGRESSION_TABLE = [
    ("C2 x C2", 3),
    ("D8", 3),
    ("Q8", 3),
    ("E(3,2)", 4),
    ("S3", 4),
    ("A4", 5),
    ("E(5,2)", 6),
    ("D10", 6),
    ("SD(5,4,2)", 6),
]


class TheoremASuite(BaseSuite):
    """
    sigma is never 1, 2 or 7; it is 3, 4, 5 or 6 exactly when the group has
    one of the corresponding small quotients.
    """

    name = "theorem-a"
    description = "Covering number sigma"

    def prepare(self, analysis):
        analysis.sigma
        analysis.klein_quotients

    def check_regression_table(self):
        """sigma of the small reference groups"""
        for spec, expected in REGRESSION_TABLE:
            analysis = self.app.analysis_for(parse_group_spec(spec))
            if analysis.sigma.value != expected:
                raise self.Failure(
                    "sigma({}) is {}, expected {}".format(spec, analysis.sigma.value, expected),
                    witness={"spec": analysis.spec, "sigma": analysis.sigma.serialize(), "expected": expected},
                )

    def check_catalog_values(self):
        """sigma matches the catalog values"""
        for entry, analysis in self.entry_analyses():
            if entry.sigma is None:
                continue
            expected = entry.sigma
            if isinstance(expected, int) and expected > analysis.sigma_cap:
                expected = SigmaOutcome.EXCEEDS_CAP
            if analysis.sigma.value != expected:
                raise self.Failure(
                    "sigma({}) is {}, catalog says {}".format(analysis.spec, analysis.sigma.value, expected),
                    witness={"spec": analysis.spec, "sigma": analysis.sigma.serialize(), "expected": expected},
                )

    def check_excluded_values(self):
        """sigma is never 1, 2 or 7"""
        for analysis in self.analyses():
            if analysis.sigma.value in (1, 2, 7):
                raise self.Failure(
                    "sigma({}) = {}".format(analysis.spec, analysis.sigma.value),
                    witness={
                        "spec": analysis.spec,
                        "sigma": analysis.sigma.value,
                        "cover": [describe_subgroup(analysis.lattice, h) for h in analysis.sigma.witness],
                    },
                )

    def check_three_iff_klein_quotient(self):
        """sigma is 3 exactly when there is a C2 x C2 quotient"""
        for analysis in self.analyses():
            if (analysis.sigma.value == 3) != (analysis.klein_quotients >= 1):
                raise self.Failure(
                    "{} has sigma {} and {} C2 x C2 quotients".format(
                        analysis.spec, analysis.sigma.value, analysis.klein_quotients,
                    ),
                    witness={"spec": analysis.spec, "sigma": analysis.sigma.serialize()},
                )

    def check_quotient_characterization(self):
        """sigma in 3..6 is predicted by the quotients"""
        for analysis in self.analyses():
            value = analysis.sigma.value
            predicted = analysis.sigma_prediction
            small = value in (3, 4, 5, 6)
            if (small or predicted is not None) and predicted != value:
                raise self.Failure(
                    "{} has sigma {} but its quotients predict {}".format(analysis.spec, value, predicted),
                    witness={"spec": analysis.spec, "sigma": analysis.sigma.serialize(), "predicted": predicted},
                )

    def check_witnesses(self):
        """witnesses are covers by the right number of maximal subgroups"""
        for analysis in self.analyses():
            result = analysis.sigma
            if not result.is_finite:
                if result.witness:
                    raise self.Failure("{} has a witness but no value".format(analysis.spec))
                continue
            maximal = set(analysis.lattice.maximal)
            if (
                len(result.witness) != result.value
                or not is_cover(analysis.group, result.witness)
                or any(h not in maximal for h in result.witness)
            ):
                raise self.Failure(
                    "sigma witness of {} is not a cover by {} maximal subgroups".format(analysis.spec, result.value),
                    witness={
                        "spec": analysis.spec,
                        "cover": [describe_subgroup(analysis.lattice, h) for h in result.witness],
                    },
                )
