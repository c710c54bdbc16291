import click

from .colors import CYAN, PURPLE
from .spell import spell_correct
from ..exceptions import GroupSpecError
from ..groups.grammar import parse_group_spec


class GroupSpecType(click.ParamType):
    """
    A group specification such as "Q8 x C3", converted to its GroupTable.
    Malformed specs are usage errors (exit status 2); groups over the table
    cap raise TableCapExceeded for the app group to turn into status 3.
    """
    name = "group-spec"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_group_spec(value)
        except GroupSpecError as e:
            self.fail("{}: {}".format(PURPLE(value), e), param, ctx)


class SpellCorrectChoice(click.ParamType):
    """
    Choice whose options are only known once the app has loaded its plugins,
    with a spelling suggestion on a miss.
    """

    def get_choices(self, ctx):
        raise NotImplementedError()

    def convert(self, value, param, ctx):
        choices = self.get_choices(ctx)
        if value in choices:
            return value
        message = "invalid choice: {}. (choose from {})".format(PURPLE(value), ", ".join(choices))
        suggestion = spell_correct(value, choices)
        if suggestion:
            message += "\nare you looking for: {}?".format(CYAN(suggestion))
        self.fail(message, param, ctx)


class SuiteType(SpellCorrectChoice):
    """
    The name of a registered verification suite, or "all".
    """
    name = "suite"

    def get_choices(self, ctx):
        # Handle no object in the context during error states
        app = getattr(ctx, "obj", None) if ctx is not None else None
        if app is None:
            from .main import cli
            app = cli.app
        return list(app.get_catalog_items("verify-suite").keys()) + ["all"]
