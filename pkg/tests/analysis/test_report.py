import json
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from gcover.analysis import AnalysisReport, analyze, csv_header, write_csv, write_json


class Collector(object):
    """
    Stands in for click.echo
    """

    def __init__(self):
        self.chunks = []

    def __call__(self, message, nl=True):
        self.chunks.append(message + ("\n" if nl else ""))

    @property
    def text(self):
        return "".join(self.chunks)


class ReportTests(unittest.TestCase):
    """
    Tests report serialization
    """

    def test_to_dict(self):
        data = analyze("Q8").to_dict()
        self.assertEqual(list(data), list(AnalysisReport.fields))
        self.assertEqual(data["theorem_d"], [True, True, True])
        self.assertNotIn("elapsed_ms", data)

    def test_json(self):
        line = analyze("C2 x C2").to_json()
        data = json.loads(line)
        self.assertEqual(data["spec"], "C2 x C2")
        self.assertEqual(data["sigma"], 3)
        self.assertEqual(data["c3"], 1)
        self.assertIs(data["theorem_b"], True)

    @settings(max_examples=10, deadline=None)
    @given(st.sampled_from(["C1", "C2 x C2", "S3", "Q8", "D10", "A4", "C7"]), st.booleans())
    def test_json_round_trip(self, spec, timings):
        report = analyze(spec, timings=timings)
        line = report.to_json()
        again = AnalysisReport.from_dict(json.loads(line))
        self.assertEqual(again, report)
        self.assertEqual(again.to_json(), line)

    def test_csv(self):
        echo = Collector()
        write_csv([analyze("C2 x C2"), analyze("C7")], echo)
        lines = echo.text.splitlines()
        self.assertEqual(lines[0], ",".join(csv_header()))
        self.assertEqual(lines[1], "C2 x C2,4,true,2,5,3,3,1,1,true,true,true/true/true")
        self.assertEqual(lines[2], "C7,7,true,7,2,1,no-cover,0,0,false,false,false/false/false")

    def test_csv_timings(self):
        echo = Collector()
        write_csv([analyze("S3", timings=True)], echo, timings=True)
        header, row = echo.text.splitlines()
        self.assertTrue(header.endswith(",elapsed_ms"))
        self.assertEqual(len(row.split(",")), len(csv_header(timings=True)))

    def test_json_lines(self):
        echo = Collector()
        write_json([analyze("S3"), analyze("Q8")], echo)
        lines = echo.text.splitlines()
        self.assertEqual([json.loads(line)["spec"] for line in lines], ["S3", "Q8"])
