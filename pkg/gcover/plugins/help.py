import click
import sys

from .base import BasePlugin
from ..cli.colors import RED
from ..constants import ExitCode


class HelpPlugin(BasePlugin):
    """
    Makes "gcover help [COMMAND]" show the help
    """

    provides = ["help"]

    def load(self):
        self.add_command(help)


@click.command()
@click.argument("command_name", default=None, required=False)
@click.pass_context
def help(ctx, command_name):
    """
    Shows the command list, or one command's help.
    """
    from ..cli.main import cli
    if command_name:
        subcommand = cli.commands.get(command_name)
        if subcommand is None:
            click.echo(RED('There is no command {}'.format(command_name)), err=True)
            sys.exit(ExitCode.PARSE_ERROR)
        # Override info name so help prints correctly
        ctx.info_name = subcommand.name
        click.echo(subcommand.get_help(ctx))
    else:
        ctx.info_name = 'gcover'
        ctx.parent = None
        click.echo(cli.get_help(ctx))
