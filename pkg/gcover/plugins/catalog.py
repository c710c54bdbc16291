import json
import time
import attr
import click

from .analyze import output_options
from .base import BasePlugin
from ..analysis.report import write_csv, write_json
from ..cli.reports import write_human
from ..cli.table import Table
from ..utils.threading import ordered_parallel_map


class CatalogPlugin(BasePlugin):
    """
    Lists the built-in group catalog or analyzes all of it.
    """

    provides = ["catalog"]

    def load(self):
        self.add_command(catalog)


def list_entries(entries, as_json):
    if as_json:
        for entry in entries:
            click.echo(json.dumps(entry.to_dict()))
        return
    table = Table([("SPEC", 20), ("ORDER", 5), ("SIGMA", 9), ("C3", 4), ("NOTE", 40)])
    table.print_all(
        (entry.normalized_spec, entry.order, _blank(entry.sigma), _blank(entry.c3), entry.note)
        for entry in entries
    )


def _blank(value):
    return "-" if value is None else value


@click.command()
@click.option("--list", "list_only", is_flag=True, default=False, help="Only list the catalog entries.")
@click.option("--max-order", type=click.IntRange(min=1), default=None, help="Skip larger groups.")
@output_options
@click.pass_obj
def catalog(app, list_only, max_order, timings, as_json, as_csv):
    """
    Analyzes every catalog group (or lists them with --list).
    """
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are mutually exclusive")
    if max_order is None:
        max_order = app.config.get("limits", "max_order")
    entries = app.group_catalog(max_order=max_order)
    if list_only:
        list_entries(entries, as_json)
        return

    def report(entry):
        start = time.monotonic()
        result = app.analysis_for(entry.group).report()
        if timings:
            result = attr.evolve(result, elapsed_ms=round((time.monotonic() - start) * 1000, 3))
        return result

    reports = ordered_parallel_map(report, entries, workers=app.config.get("runner", "workers"))
    if as_json:
        write_json(reports, click.echo)
    elif as_csv:
        write_csv(reports, click.echo, timings=timings)
    else:
        write_human(reports, timings=timings)
