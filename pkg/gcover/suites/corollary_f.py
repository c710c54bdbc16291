from ..constants import C3Method
from ..covers.triples import c3
from ..groups.constructors import build_direct_product, build_generalized_quaternion
from ..groups.grammar import parse_group_spec
from ..lattice.subgroups import all_subgroups
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite


class CorollaryFPlugin(BasePlugin):
    """
    Checks on unique covers of hamiltonian groups.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", CorollaryFSuite.name, CorollaryFSuite)


def is_hamiltonian(g, lattice):
    """
    Nonabelian with every subgroup normal.
    """
    return not g.is_abelian and len(lattice.normal) == len(lattice)


def two_part_order(n):
    return n & -n


class CorollaryFSuite(BaseSuite):
    """
    A hamiltonian group has a unique three-subgroup cover iff it is Q8 x A
    with A abelian of odd order.
    """

    name = "corollary-f"
    description = "Hamiltonian groups"

    def check_catalog(self):
        """hamiltonian catalog groups have a unique cover iff their 2-part has order 8"""
        for analysis in self.analyses():
            if not is_hamiltonian(analysis.group, analysis.lattice):
                continue
            expected = two_part_order(analysis.group.order) == 8
            if (analysis.c3 == 1) != expected:
                raise self.Failure(
                    "hamiltonian {} has c3 = {}".format(analysis.spec, analysis.c3),
                    witness={"spec": analysis.spec, "c3": analysis.c3},
                )

    def check_quaternion_times_odd_abelian(self):
        """Q8 x A has exactly one cover for every odd-order abelian A in the catalog"""
        q8 = build_generalized_quaternion(8)
        for analysis in self.analyses():
            group = analysis.group
            if group.order % 2 == 0 or not group.is_abelian:
                continue
            product = build_direct_product(q8, group)
            lattice = all_subgroups(product)
            if not is_hamiltonian(product, lattice):
                raise self.Failure("{} is not hamiltonian".format(product.spec), witness={"spec": product.spec})
            count = c3(product, lattice, method=C3Method.ENUMERATION)
            if count != 1:
                raise self.Failure(
                    "{} has {} three-subgroup covers".format(product.spec, count),
                    witness={"spec": product.spec, "c3": count},
                )

    def check_extra_involution(self):
        """Q8 x C2 is hamiltonian with more than one cover"""
        analysis = self.app.analysis_for(parse_group_spec("Q8 x C2"))
        if not is_hamiltonian(analysis.group, analysis.lattice) or analysis.c3 <= 1:
            raise self.Failure(
                "Q8 x C2 has c3 = {}".format(analysis.c3),
                witness={"spec": analysis.spec, "c3": analysis.c3},
            )
