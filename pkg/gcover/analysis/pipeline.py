import logging
import time
import attr

from .report import AnalysisReport
from ..constants import C3Method, DEFAULT_SIGMA_CAP, ISOMORPHISM_CAP
from ..covers.sigma import sigma, sigma_prediction
from ..covers.theorems import (
    any_three_distinct_cover,
    any_three_irredundant_cover,
    unique_three_cover_equivalence,
)
from ..covers.triples import c3, enumerate_three_covers
from ..groups.grammar import parse_group_spec
from ..lattice.subgroups import all_subgroups
from ..quotients.quotient import count_klein_quotients
from ..utils.functional import cached_property


logger = logging.getLogger(__name__)


@attr.s(eq=False)
class GroupAnalysis:
    """
    Lazily computed invariants of one group, each computed at most once so
    that reports and verification suites can share the work.
    """
    group = attr.ib()
    sigma_cap = attr.ib(default=DEFAULT_SIGMA_CAP)
    isomorphism_cap = attr.ib(default=ISOMORPHISM_CAP)

    @classmethod
    def from_spec(cls, spec, sigma_cap=DEFAULT_SIGMA_CAP, isomorphism_cap=ISOMORPHISM_CAP):
        return cls(parse_group_spec(spec), sigma_cap=sigma_cap, isomorphism_cap=isomorphism_cap)

    @property
    def spec(self):
        return self.group.spec

    @cached_property
    def lattice(self):
        return all_subgroups(self.group)

    @cached_property
    def covers(self):
        return enumerate_three_covers(self.group, self.lattice)

    @cached_property
    def c3(self):
        return len(self.covers)

    @cached_property
    def c3_by_quotients(self):
        return c3(self.group, self.lattice, method=C3Method.QUOTIENT_COUNT)

    @cached_property
    def klein_quotients(self):
        return count_klein_quotients(self.group, self.lattice)

    @cached_property
    def sigma(self):
        return sigma(self.group, self.lattice, cap=self.sigma_cap)

    @cached_property
    def sigma_prediction(self):
        return sigma_prediction(
            self.group,
            self.lattice,
            klein_count=self.klein_quotients,
            cap=self.isomorphism_cap,
        )

    @cached_property
    def theorem_b(self):
        return any_three_irredundant_cover(self.group, self.lattice)

    @cached_property
    def corollary_c(self):
        return any_three_distinct_cover(self.group, self.lattice)

    @cached_property
    def theorem_d(self):
        return unique_three_cover_equivalence(
            self.group,
            self.lattice,
            c3_value=self.c3,
            klein_count=self.klein_quotients,
        )

    def report(self, elapsed_ms=None):
        if self.c3 != self.klein_quotients:
            logger.error(
                "%s: %i three-covers enumerated but %i C2 x C2 quotients counted",
                self.spec, self.c3, self.klein_quotients,
            )
        return AnalysisReport(
            spec=self.spec,
            order=self.group.order,
            abelian=self.group.is_abelian,
            exponent=self.group.exponent,
            subgroup_count=len(self.lattice),
            maximal_count=len(self.lattice.maximal),
            sigma=self.sigma.serialize(),
            c3=self.c3,
            klein_quotients=self.klein_quotients,
            theorem_b=self.theorem_b,
            corollary_c=self.corollary_c,
            theorem_d=self.theorem_d.serialize(),
            elapsed_ms=elapsed_ms,
        )


def analyze(spec, sigma_cap=DEFAULT_SIGMA_CAP, timings=False):
    """
    Parses `spec` and computes its full report. Parse problems raise
    GroupSpecError and oversized groups TableCapExceeded.
    """
    start = time.monotonic()
    analysis = GroupAnalysis.from_spec(spec, sigma_cap=sigma_cap)
    report = analysis.report()
    if timings:
        report = attr.evolve(report, elapsed_ms=round((time.monotonic() - start) * 1000, 3))
    logger.info("Analyzed %s: sigma=%s c3=%i", report.spec, report.sigma, report.c3)
    return report
