import json
import click

from .base import BasePlugin
from .verify import describe_subgroup
from ..cli.argument_types import GroupSpecType
from ..cli.colors import BOLD, CYAN
from ..cli.table import Table
from ..covers.sigma import sigma as compute_sigma


class SigmaPlugin(BasePlugin):
    """
    The minimal covering number of a group, with a witness.
    """

    provides = ["sigma"]

    def load(self):
        self.add_command(sigma)


@click.command()
@click.argument("group", metavar="SPEC", type=GroupSpecType())
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Largest cover size searched.")
@click.option("--json", "as_json", is_flag=True, default=False)
@click.pass_obj
def sigma(app, group, cap, as_json):
    """
    Computes sigma (fewest proper subgroups covering the group).
    """
    if cap is None:
        cap = app.config.get("limits", "sigma_cap")
    lattice = app.analysis_for(group).lattice
    result = compute_sigma(group, lattice, cap=cap)
    witness = [describe_subgroup(lattice, h) for h in result.witness]
    if as_json:
        click.echo(json.dumps({"spec": group.spec, "sigma": result.serialize(), "witness": witness}))
        return
    click.echo("{} {}".format(CYAN("sigma({})".format(group.spec)), BOLD(str(result))))
    if witness:
        Table([("POSITION", 8), ("SIZE", 6), ("MEMBERS", 20)]).print_all(
            (w["position"], w["size"], w["members"]) for w in witness
        )
