import unittest

from gcover.analysis import GroupAnalysis, analyze
from gcover.constants import SigmaOutcome
from gcover.exceptions import GroupSpecError, TableCapExceeded
from gcover.groups import configure_table_cap


class AnalyzeTests(unittest.TestCase):
    """
    Tests the single-group analysis pipeline
    """

    def test_klein(self):
        report = analyze("C2 x C2")
        self.assertEqual(report.spec, "C2 x C2")
        self.assertEqual(report.order, 4)
        self.assertTrue(report.abelian)
        self.assertEqual(report.exponent, 2)
        self.assertEqual(report.subgroup_count, 5)
        self.assertEqual(report.maximal_count, 3)
        self.assertEqual(report.sigma, 3)
        self.assertEqual(report.c3, 1)
        self.assertEqual(report.klein_quotients, 1)
        self.assertTrue(report.theorem_b)
        self.assertTrue(report.corollary_c)
        self.assertEqual(report.theorem_d, (True, True, True))
        self.assertIsNone(report.elapsed_ms)

    def test_quaternion_product(self):
        report = analyze("Q8 x C3")
        self.assertEqual(report.order, 24)
        self.assertFalse(report.abelian)
        self.assertEqual(report.c3, 1)
        self.assertEqual(report.sigma, 3)
        self.assertEqual(report.theorem_d, (True, True, True))
        self.assertFalse(report.theorem_b)

    def test_prime_cyclic(self):
        report = analyze("C7")
        self.assertEqual(report.sigma, SigmaOutcome.NO_COVER)
        self.assertEqual(report.c3, 0)
        self.assertEqual(report.maximal_count, 1)
        self.assertEqual(report.theorem_d, (False, False, False))

    def test_sigma_cap(self):
        self.assertEqual(analyze("D10", sigma_cap=5).sigma, SigmaOutcome.EXCEEDS_CAP)
        self.assertEqual(analyze("D10").sigma, 6)

    def test_normalized_spec(self):
        self.assertEqual(analyze("C2^2 x C3").spec, "C2 x C2 x C3")

    def test_timings(self):
        report = analyze("S3", timings=True)
        self.assertIsNotNone(report.elapsed_ms)
        self.assertGreaterEqual(report.elapsed_ms, 0)
        self.assertIn("elapsed_ms", report.to_dict())

    def test_deterministic(self):
        self.assertEqual(analyze("S4").to_json(), analyze("S4").to_json())

    def test_errors(self):
        with self.assertRaises(GroupSpecError):
            analyze("C2 x")
        with self.assertRaises(GroupSpecError):
            analyze("D9")
        configure_table_cap(16)
        try:
            with self.assertRaises(TableCapExceeded):
                analyze("C17")
        finally:
            configure_table_cap(None)


class GroupAnalysisTests(unittest.TestCase):
    """
    Tests that the lazily computed invariants are shared
    """

    def test_cached(self):
        analysis = GroupAnalysis.from_spec("D8")
        self.assertIs(analysis.lattice, analysis.lattice)
        self.assertIs(analysis.covers, analysis.covers)
        self.assertEqual(analysis.c3, 1)
        self.assertEqual(analysis.c3_by_quotients, 1)
        self.assertEqual(analysis.sigma_prediction, 3)
        self.assertEqual(analysis.spec, "D8")

    def test_report(self):
        analysis = GroupAnalysis.from_spec("A4")
        report = analysis.report()
        self.assertEqual(report.sigma, 5)
        self.assertEqual(report.subgroup_count, 10)
        self.assertEqual(report.klein_quotients, 0)
        self.assertEqual(analysis.report(elapsed_ms=1.5).elapsed_ms, 1.5)

    def test_isomorphism_cap(self):
        self.assertEqual(GroupAnalysis.from_spec("S3").sigma_prediction, 4)
        # The S3 prediction needs an isomorphism search on an order-6 quotient
        with self.assertRaises(TableCapExceeded):
            GroupAnalysis.from_spec("S3", isomorphism_cap=4).sigma_prediction

    def test_report_checks_cover_count(self):
        analysis = GroupAnalysis.from_spec("C2 x C2")
        with self.assertNoLogs("gcover.analysis.pipeline", level="ERROR"):
            analysis.report()
        analysis.__dict__["klein_quotients"] = 2
        with self.assertLogs("gcover.analysis.pipeline", level="ERROR") as logs:
            report = analysis.report()
        self.assertEqual(report.c3, 1)
        self.assertIn("1 three-covers enumerated but 2 C2 x C2 quotients counted", logs.output[0])
