from ..constants import C3Method
from ..covers.triples import c3, enumerate_three_covers
from ..groups.constructors import build_dihedral, build_elementary_abelian
from ..lattice.subgroups import all_subgroups, closure
from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite, describe_subgroup


class C3FormulasPlugin(BasePlugin):
    """
    Checks on the closed forms for the number of three-subgroup covers.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", C3FormulasSuite.name, C3FormulasSuite)


def elementary_abelian_c3(n):
    """
    Number of three-subgroup covers of the elementary abelian group of
    order 2^n.
    """
    return (2 ** (2 * n - 1) - 3 * 2 ** (n - 1) + 1) // 3


# Rank -> counting method; rank 5 is only counted through quotients
ELEMENTARY_RANKS = [
    (2, C3Method.ENUMERATION),
    (3, C3Method.ENUMERATION),
    (4, C3Method.ENUMERATION),
    (5, C3Method.QUOTIENT_COUNT),
]
DIHEDRAL_ODD = [3, 5, 7, 9, 11, 15]
DIHEDRAL_EVEN = [2, 4, 6, 8, 10, 12, 16]


class C3FormulasSuite(BaseSuite):
    """
    c3 of elementary abelian 2-groups follows the closed form; dihedral
    groups of order 2n have no three-cover for odd n and exactly one, with
    kernel <x^2>, for even n.
    """

    name = "c3-formulas"
    description = "Closed forms for c3"

    def check_elementary_abelian(self):
        """c3 of C2^n is (2^(2n-1) - 3 * 2^(n-1) + 1) / 3"""
        for rank, method in ELEMENTARY_RANKS:
            g = build_elementary_abelian(2, rank)
            count = c3(g, all_subgroups(g), method=method)
            expected = elementary_abelian_c3(rank)
            if count != expected:
                raise self.Failure(
                    "c3({}) is {} by {}, expected {}".format(g.spec, count, method, expected),
                    witness={"spec": g.spec, "c3": count, "expected": expected, "method": method},
                )

    def check_dihedral_dichotomy(self):
        """dihedral groups: none for odd n, one with kernel <x^2> for even n"""
        for n in DIHEDRAL_ODD + DIHEDRAL_EVEN:
            g = build_dihedral(2 * n)
            lattice = all_subgroups(g)
            covers = enumerate_three_covers(g, lattice)
            expected = 0 if n % 2 else 1
            if len(covers) != expected:
                raise self.Failure(
                    "c3({}) is {}, expected {}".format(g.spec, len(covers), expected),
                    witness={"spec": g.spec, "c3": len(covers)},
                )
            if not covers:
                continue
            # Index 1 is the rotation x
            squares = closure(g, [g.multiply(1, 1)])
            kernel = covers[0].kernel()
            if kernel != squares:
                raise self.Failure(
                    "the cover of {} has kernel {}, not <x^2> = {}".format(g.spec, kernel.hex(), squares.hex()),
                    witness={
                        "spec": g.spec,
                        "triple": [describe_subgroup(lattice, h) for h in covers[0]],
                        "kernel": kernel.hex(),
                    },
                )

    def check_catalog_values(self):
        """c3 matches the catalog values"""
        for entry, analysis in self.entry_analyses():
            if entry.c3 is not None and analysis.c3 != entry.c3:
                raise self.Failure(
                    "c3({}) is {}, catalog says {}".format(analysis.spec, analysis.c3, entry.c3),
                    witness={"spec": analysis.spec, "c3": analysis.c3, "expected": entry.c3},
                )
