from ..covers.theorems import corollary_e_check
from ..groups.grammar import parse_group_spec
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite


class CorollaryEPlugin(BasePlugin):
    """
    Checks on unique covers of nilpotent direct products.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", CorollaryESuite.name, CorollaryESuite)


# (parts, expected uniqueness)
PRODUCTS = [
    (["Q8", "C3"], True),
    (["Q8", "C9"], True),
    (["Q8", "C15"], True),
    (["C8", "C3"], False),
    (["E(2,3)", "C5"], False),
    (["E(2,2)", "C3"], True),
    (["E(3,2)"], False),
    (["D8", "C3"], True),
    (["Q16", "C5"], True),
]


class CorollaryESuite(BaseSuite):
    """
    A direct product of a 2-group and odd-order groups has a unique
    three-subgroup cover iff the 2-group needs exactly two generators.
    """

    name = "corollary-e"
    description = "Nilpotent products"

    def check_products(self):
        """prediction from the 2-part matches the computed cover count"""
        for specs, expected in PRODUCTS:
            result = corollary_e_check([parse_group_spec(spec) for spec in specs])
            if not result.agrees or result.actual != expected:
                raise self.Failure(
                    "{}: predicted {}, computed {}, expected {}".format(
                        " x ".join(specs), result.prediction, result.actual, expected,
                    ),
                    witness={"parts": specs, "product": result.product.spec, "check": result.serialize()},
                )
