import logging
import click

from .colors import LEVEL_STYLES


class ClickEchoHandler(logging.Handler):
    """
    Logging handler that echoes records to stderr through click, colored by
    level.
    """

    def emit(self, record):
        try:
            message = self.format(record)
        except Exception:
            self.handleError(record)
            return
        style = LEVEL_STYLES.get(record.levelname, str)
        click.echo(style(message), err=True)


def verbosity_level(verbose):
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def install_handler(verbose=0, logger_name="gcover"):
    """
    Routes the package's log records to a fresh ClickEchoHandler, replacing
    any installed by an earlier invocation.
    """
    logger = logging.getLogger(logger_name)
    for handler in list(logger.handlers):
        if isinstance(handler, ClickEchoHandler):
            logger.removeHandler(handler)
    handler = ClickEchoHandler()
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(verbosity_level(verbose))
    logger.propagate = False
    return handler
