from ..groups.constructors import build_generalized_quaternion
from ..lattice.subgroups import all_subgroups, is_cyclic, min_generators_2group, subgroups_of_order
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite


class QuaternionPlugin(BasePlugin):
    """
    Checks on the generalized quaternion groups.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", QuaternionSuite.name, QuaternionSuite)


EXPONENTS = [3, 4, 5, 6]


class QuaternionSuite(BaseSuite):
    """
    Q_(2^m) has a unique involution, needs two generators and has
    2^(m-2) + 1 subgroups of order 4, all cyclic.
    """

    name = "quaternion"
    description = "Generalized quaternion groups"

    def groups(self):
        return [(m, build_generalized_quaternion(2 ** m)) for m in EXPONENTS if 2 ** m <= self.max_order]

    def check_order_four_subgroups(self):
        """2^(m-2) + 1 subgroups of order 4, all cyclic"""
        for m, g in self.groups():
            found = subgroups_of_order(all_subgroups(g), 4)
            expected = 2 ** (m - 2) + 1
            if len(found) != expected or not all(is_cyclic(h) for h in found):
                raise self.Failure(
                    "{} has {} subgroups of order 4 ({} cyclic), expected {}".format(
                        g.spec, len(found), sum(1 for h in found if is_cyclic(h)), expected,
                    ),
                    witness={"spec": g.spec, "subgroups": [h.hex() for h in found]},
                )

    def check_unique_involution(self):
        """exactly one element of order 2"""
        for m, g in self.groups():
            involutions = g.element_orders.count(2)
            if involutions != 1:
                raise self.Failure(
                    "{} has {} involutions".format(g.spec, involutions),
                    witness={"spec": g.spec, "involutions": involutions},
                )

    def check_two_generators(self):
        """the Frattini quotient has order 4"""
        for m, g in self.groups():
            generators = min_generators_2group(g)
            if generators != 2:
                raise self.Failure(
                    "{} needs {} generators".format(g.spec, generators),
                    witness={"spec": g.spec, "generators": generators},
                )
