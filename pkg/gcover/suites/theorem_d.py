from ..covers.triples import cover_structure, is_irredundant_triple
from ..groups.grammar import parse_group_spec
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite
from .theorem_b import triple_witness


class TheoremDPlugin(BasePlugin):
    """
    Checks on groups with a unique three-subgroup cover.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", TheoremDSuite.name, TheoremDSuite)


EXAMPLES = [
    ("Q8", (True, True, True)),
    ("E(2,3)", (False, False, False)),
    ("D12", (True, True, True)),
]


class TheoremDSuite(BaseSuite):
    """
    A unique cover, a unique C2 x C2 quotient, and a C2 x C2 but no
    C2 x C2 x C2 quotient are equivalent; every cover is irredundant and its
    intersection is a normal subgroup holding all squares with quotient
    C2 x C2.
    """

    name = "theorem-d"
    description = "Unique three-subgroup covers"

    def prepare(self, analysis):
        analysis.theorem_d

    def check_equivalence(self):
        """the three conditions agree"""
        for analysis in self.analyses():
            conditions = analysis.theorem_d
            if not conditions.consistent:
                raise self.Failure(
                    "{}: conditions are {}".format(analysis.spec, conditions.serialize()),
                    witness={
                        "spec": analysis.spec,
                        "conditions": conditions.serialize(),
                        "c3": analysis.c3,
                        "klein_quotients": analysis.klein_quotients,
                    },
                )

    def check_examples(self):
        """reference groups"""
        for spec, expected in EXAMPLES:
            conditions = self.app.analysis_for(parse_group_spec(spec)).theorem_d
            if tuple(conditions) != expected:
                raise self.Failure(
                    "{}: conditions are {}, expected {}".format(spec, conditions.serialize(), list(expected)),
                )

    def check_cover_structure(self):
        """covers are irredundant with a normal kernel holding all squares, quotient C2 x C2"""
        for analysis in self.analyses():
            for triple in analysis.covers:
                if any(h.is_trivial() for h in triple):
                    raise self.Failure(
                        "{} has a cover through the trivial subgroup".format(analysis.spec),
                        witness=triple_witness(analysis, triple),
                    )
                if not is_irredundant_triple(*triple):
                    raise self.Failure(
                        "{} has a redundant cover".format(analysis.spec),
                        witness=triple_witness(analysis, triple),
                    )
                structure = cover_structure(analysis.group, triple)
                if not structure.holds():
                    witness = triple_witness(analysis, triple)
                    witness.update(
                        kernel=structure.kernel.hex(),
                        normal=structure.normal,
                        squares_in_kernel=structure.squares_in_kernel,
                        klein_quotient=structure.klein_quotient,
                    )
                    raise self.Failure("{}: cover kernel has the wrong shape".format(analysis.spec), witness=witness)
