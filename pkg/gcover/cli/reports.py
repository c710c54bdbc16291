from .colors import CYAN, GREEN, RED
from .table import Table
from ..analysis.report import AnalysisReport
from ..utils.humanize import duration, flag


def yesno(value):
    return GREEN(flag(value)) if value else RED(flag(value))


def write_human(reports, timings=False):
    """
    Prints reports as a table, one row per group.
    """
    columns = [
        ("SPEC", 20),
        ("ORDER", 5),
        ("ABELIAN", 7),
        ("EXP", 4),
        ("SUBGROUPS", 9),
        ("MAXIMAL", 7),
        ("SIGMA", 11),
        ("C3", 4),
        ("KLEIN", 5),
        ("THM-B", 5),
        ("COR-C", 5),
        ("THM-D", 17),
    ]
    if timings:
        columns.append(("TIME", 8))
    table = Table(columns)
    table.print_header()
    for report in reports:
        row = [
            report.spec,
            report.order,
            flag(report.abelian),
            report.exponent,
            report.subgroup_count,
            report.maximal_count,
            report.sigma,
            report.c3,
            report.klein_quotients,
            flag(report.theorem_b),
            flag(report.corollary_c),
            "/".join(flag(x) for x in report.theorem_d),
        ]
        if timings:
            row.append(duration(report.elapsed_ms))
        table.print_row(row)


def describe(report):
    """
    Key/value lines for a single report.
    """
    lines = []
    for name in AnalysisReport.fields:
        value = getattr(report, name)
        if isinstance(value, bool):
            value = yesno(value)
        elif name == "theorem_d":
            value = " / ".join(yesno(x) for x in value)
        lines.append("{}: {}".format(CYAN(name.replace("_", " ")), value))
    if report.elapsed_ms is not None:
        lines.append("{}: {}".format(CYAN("elapsed"), duration(report.elapsed_ms)))
    return lines
