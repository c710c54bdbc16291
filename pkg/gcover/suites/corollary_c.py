from ..covers.triples import find_noncovering_distinct_triple
from ..groups.grammar import parse_group_spec
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite
from ..quotients.isomorphism import is_isomorphic_small
from .theorem_b import triple_witness


class CorollaryCPlugin(BasePlugin):
    """
    Checks on groups covered by any three distinct proper subgroups.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", CorollaryCSuite.name, CorollaryCSuite)


class CorollaryCSuite(BaseSuite):
    """
    Only C2 x C2 is the union of any three distinct nontrivial proper
    subgroups.
    """

    name = "corollary-c"
    description = "Distinct triples"

    def prepare(self, analysis):
        analysis.corollary_c

    def check_census(self):
        """only C2 x C2 has every distinct triple covering"""
        klein = parse_group_spec("C2 x C2")
        for analysis in self.analyses():
            expected = is_isomorphic_small(analysis.group, klein, cap=self.isomorphism_cap)
            if analysis.corollary_c == expected:
                continue
            witness = {"spec": analysis.spec, "predicate": analysis.corollary_c}
            triple = find_noncovering_distinct_triple(analysis.group, analysis.lattice)
            if triple is not None:
                witness.update(triple_witness(analysis, triple))
            raise self.Failure(
                "{}: predicate is {}, expected {}".format(analysis.spec, analysis.corollary_c, expected),
                witness=witness,
            )

    def check_quaternion_counterexample(self):
        """Q8 fails through two maximal subgroups and their intersection"""
        analysis = self.app.analysis_for(parse_group_spec("Q8"))
        lattice = analysis.lattice
        triple = find_noncovering_distinct_triple(analysis.group, lattice)
        if triple is None:
            raise self.Failure("Every distinct triple of Q8 covers it", witness={"spec": analysis.spec})
        maximal = [h for h in triple if h in lattice.maximal]
        others = [h for h in triple if h not in lattice.maximal]
        if len(maximal) != 2 or len(others) != 1 or others[0].members != maximal[0].members & maximal[1].members:
            raise self.Failure(
                "The first non-covering triple of Q8 is not two maximals and their intersection",
                witness=triple_witness(analysis, triple),
            )