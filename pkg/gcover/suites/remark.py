from ..plugins.base import BasePlugin
from ..plugins.verify import BaseSuite


class RemarkPlugin(BasePlugin):
    """
    Cross-checks the two ways of counting three-subgroup covers.
    """

    requires = ["verify"]

    def load(self):
        self.add_catalog_item("verify-suite", RemarkSuite.name, RemarkSuite)


class RemarkSuite(BaseSuite):
    """
    Three-subgroup covers correspond one to one with C2 x C2 quotients.
    """

    name = "remark"
    description = "Covers versus C2 x C2 quotients"
    order_limit = 48

    def prepare(self, analysis):
        analysis.c3
        analysis.c3_by_quotients

    def check_bijection(self):
        """c3 by enumeration equals the number of C2 x C2 quotients"""
        for analysis in self.analyses():
            if analysis.c3 != analysis.c3_by_quotients:
                raise self.Failure(
                    "{}: {} covers but {} C2 x C2 quotients".format(
                        analysis.spec, analysis.c3, analysis.c3_by_quotients,
                    ),
                    witness={"spec": analysis.spec, "c3": analysis.c3, "klein_quotients": analysis.c3_by_quotients},
                )

    def check_kernels_distinct(self):
        """distinct covers have distinct kernels"""
        for analysis in self.analyses():
            kernels = [triple.intersection for triple in analysis.covers]
            if len(set(kernels)) != len(kernels):
                raise self.Failure(
                    "{}: two covers share a kernel".format(analysis.spec),
                    witness={"spec": analysis.spec},
                )
