import json
import click

from .base import BasePlugin
from .verify import describe_subgroup
from ..cli.argument_types import GroupSpecType
from ..cli.colors import BOLD, CYAN, FADED
from ..cli.table import Table


class CoversPlugin(BasePlugin):
    """
    Lists the coverings of a group by three proper subgroups.
    """

    provides = ["covers"]

    def load(self):
        self.add_command(covers)


@click.command()
@click.argument("group", metavar="SPEC", type=GroupSpecType())
@click.option("--limit", type=click.IntRange(min=0), default=None, help="Show at most this many covers.")
@click.option("--json", "as_json", is_flag=True, default=False)
@click.pass_obj
def covers(app, group, limit, as_json):
    """
    Enumerates the three-subgroup covers of a group.
    """
    analysis = app.analysis_for(group)
    lattice = analysis.lattice
    triples = analysis.covers
    shown = triples if limit is None else triples[:limit]
    if as_json:
        click.echo(json.dumps({
            "spec": group.spec,
            "c3": len(triples),
            "covers": [
                {
                    "positions": list(triple.positions),
                    "subgroups": [describe_subgroup(lattice, h) for h in triple],
                    "kernel": triple.kernel().hex(),
                }
                for triple in shown
            ],
        }))
        return
    click.echo("{} {}".format(CYAN("c3({})".format(group.spec)), BOLD(str(len(triples)))))
    if shown:
        Table([("POSITIONS", 16), ("SIZES", 12), ("KERNEL", 20)]).print_all(
            (
                ",".join(str(p) for p in triple.positions),
                ",".join(str(h.size) for h in triple),
                triple.kernel().hex(),
            )
            for triple in shown
        )
    if len(shown) < len(triples):
        click.echo(FADED("... {} more".format(len(triples) - len(shown))))
