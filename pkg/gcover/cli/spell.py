import click
import difflib

try:
    import pylev
except ImportError:
    pylev = None

from .colors import CYAN


def spell_correct(word, choices, threshold=None):
    """
    Closest of `choices` to a mistyped command or suite name, or None.

    With pylev the squared edit distance over the word length has to stay
    under `threshold` (default 1.0); otherwise difflib's ratio has to reach
    it (default 0.6).
    """
    choices = sorted(choices)
    if not choices:
        return None
    if pylev:
        threshold = 1.0 if threshold is None else threshold
        distance, suggestion = min((pylev.levenshtein(c, word), c) for c in choices)
        if distance ** 2 / max(len(suggestion), len(word)) <= threshold:
            return suggestion
        return None
    threshold = 0.6 if threshold is None else threshold
    return next(iter(difflib.get_close_matches(word, choices, 1, cutoff=threshold)), None)


class SpellcheckableGroup(click.Group):
    """
    Group subclass that answers an unknown command with a "did you mean"
    suggestion.
    """

    def get_command(self, ctx, cmd_name):
        cmd = super(SpellcheckableGroup, self).get_command(ctx, cmd_name)
        if cmd:
            return cmd
        suggestion = spell_correct(cmd_name, self.list_commands(ctx))
        if suggestion:
            ctx.fail('No such command "{cmd_name}", did you mean: {suggestion}?'.format(
                cmd_name=cmd_name,
                suggestion=CYAN(suggestion),
            ))
