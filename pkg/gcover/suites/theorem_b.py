from ..covers.triples import find_noncovering_irredundant_triple
from ..groups.grammar import parse_group_spec
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite, describe_subgroup
from ..quotients.isomorphism import is_isomorphic_small


class TheoremBPlugin(BasePlugin):
    """
    Checks on groups covered by any three irredundant proper subgroups.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", TheoremBSuite.name, TheoremBSuite)


def triple_witness(analysis, triple):
    return {
        "spec": analysis.spec,
        "triple": [describe_subgroup(analysis.lattice, h) for h in triple],
    }


class TheoremBSuite(BaseSuite):
    """
    Exactly C2 x C2 and Q8 are the union of any three irredundant proper
    subgroups.
    """

    name = "theorem-b"
    description = "Irredundant triples"

    def prepare(self, analysis):
        analysis.theorem_b

    def targets(self):
        return [parse_group_spec("C2 x C2"), parse_group_spec("Q8")]

    def check_census(self):
        """only C2 x C2 and Q8 have every irredundant triple covering"""
        targets = self.targets()
        for analysis in self.analyses():
            expected = any(is_isomorphic_small(analysis.group, target, cap=self.isomorphism_cap) for target in targets)
            if analysis.theorem_b == expected:
                continue
            witness = {"spec": analysis.spec, "predicate": analysis.theorem_b}
            triple = find_noncovering_irredundant_triple(analysis.group, analysis.lattice)
            if triple is not None:
                witness.update(triple_witness(analysis, triple))
            raise self.Failure(
                "{}: predicate is {}, expected {}".format(analysis.spec, analysis.theorem_b, expected),
                witness=witness,
            )

    def check_rank_three_counterexample(self):
        """C2 x C2 x C2 has an irredundant triple that misses elements"""
        analysis = self.app.analysis_for(parse_group_spec("E(2,3)"))
        triple = find_noncovering_irredundant_triple(analysis.group, analysis.lattice)
        if triple is None or analysis.theorem_b:
            raise self.Failure("C2 x C2 x C2 has no non-covering irredundant triple", witness={"spec": analysis.spec})
