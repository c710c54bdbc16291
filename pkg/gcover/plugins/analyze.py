import time
import attr
import click

from .base import BasePlugin
from ..analysis.pipeline import GroupAnalysis
from ..analysis.report import write_csv, write_json
from ..cli.argument_types import GroupSpecType
from ..cli.reports import describe


class AnalyzePlugin(BasePlugin):
    """
    Single-group analysis reports.
    """

    provides = ["analyze"]

    def load(self):
        self.add_command(analyze)


def output_options(func):
    func = click.option("--csv", "as_csv", is_flag=True, default=False, help="CSV with a header row.")(func)
    func = click.option("--json", "as_json", is_flag=True, default=False, help="One JSON object per group.")(func)
    func = click.option("--timings", is_flag=True, default=False, help="Add elapsed_ms to reports.")(func)
    return func


@click.command()
@click.argument("group", metavar="SPEC", type=GroupSpecType())
@click.option("--sigma-cap", type=click.IntRange(min=1), default=None, help="Largest cover size searched.")
@output_options
@click.pass_obj
def analyze(app, group, sigma_cap, timings, as_json, as_csv):
    """
    Reports sigma, c3 and the theorem predicates for one group.
    """
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are mutually exclusive")
    start = time.monotonic()
    if sigma_cap is None:
        analysis = app.analysis_for(group)
    else:
        isomorphism_cap = app.config.get("limits", "isomorphism_cap")
        analysis = GroupAnalysis(group, sigma_cap=sigma_cap, isomorphism_cap=isomorphism_cap)
    report = analysis.report()
    if timings:
        report = attr.evolve(report, elapsed_ms=round((time.monotonic() - start) * 1000, 3))
    if as_json:
        write_json([report], click.echo)
    elif as_csv:
        write_csv([report], click.echo, timings=timings)
    else:
        for line in describe(report):
            click.echo(line)
