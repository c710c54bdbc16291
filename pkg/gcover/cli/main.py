import click
import collections
import sys
import threading
import traceback
import attr

from importlib import metadata

from .spell import SpellcheckableGroup
from .colors import PURPLE, RED, YELLOW
from .log import install_handler
from .tasks import RootTask
from ..analysis.pipeline import GroupAnalysis
from ..catalog import catalog_list
from ..config import Config
from ..constants import ExitCode
from ..exceptions import BadConfigError, GroupSpecError, TableCapExceeded
from ..groups.table import configure_table_cap
from ..utils.sorting import dependency_sort
from ..version import __version__


ENTRYPOINT_GROUP = "gcover.plugins"


@attr.s
class App(object):
    """
    Main app object that's passed around.

    Contains a "catalog" system, which allows registration of "catalog types"
    and "catalog items" by plugins (verification suites register themselves
    as "verify-suite" items), loaded in plugin dependency order.

    Also holds the configuration and a per-run cache of group analyses, so
    that several suites checking the same group share its lattice and covers.
    """
    cli = attr.ib()
    plugins = attr.ib(default=attr.Factory(dict), init=False)

    def load_config(self, config_paths=(), quiet=False):
        self.config = Config(tuple(Config.default_paths()) + tuple(config_paths))
        configure_table_cap(self.config.get("limits", "table_cap"))
        self.root_task = RootTask(quiet=quiet)
        self.analyses = {}
        self.analyses_lock = threading.Lock()

    def load_plugins(self):
        """
        Loads the built-in plugins plus any registered under the
        gcover.plugins entry point group.
        """
        from ..plugins.builtin import BUILTIN_PLUGINS
        self.catalog = {}
        plugins = list(BUILTIN_PLUGINS)
        for entrypoint in _entry_points():
            try:
                plugin = entrypoint.load()
            except ImportError:
                click.echo(PURPLE("Failed to import plugin: {name}".format(name=entrypoint.name)), err=True)
                click.echo(PURPLE(traceback.format_exc()), err=True)
                sys.exit(1)
            if plugin not in plugins:
                plugins.append(plugin)
        # Build plugin provides
        provided = {}
        for plugin in plugins:
            for p in plugin.provides:
                # Make sure another plugin does not provide this
                if p in provided:
                    click.echo(PURPLE("Multiple plugins provide {}, please unload one.".format(p)), err=True)
                    sys.exit(1)
                provided[p] = plugin
        # Check plugin requires
        for plugin in plugins:
            for r in plugin.requires:
                if r not in provided:
                    click.echo(PURPLE("Plugin {} requires {}, but nothing provides it.".format(plugin, r)), err=True)
                    sys.exit(1)
        # Dependency order, then listing order inside that
        listed = {plugin: i for i, plugin in enumerate(plugins)}
        plugins = dependency_sort(
            plugins,
            lambda x: [provided[r] for r in x.requires],
            key=lambda x: listed[x],
        )
        for plugin in plugins:
            # We store plugins so you can look their instances up by class
            self.plugins[plugin] = instance = plugin(self)
            instance.load()

    def add_catalog_type(self, name):
        """
        Adds a type of "catalog" for things to register.
        """
        if name in self.catalog:
            raise ValueError("Catalog type {} already registered".format(name))
        self.catalog[name] = collections.OrderedDict()

    def add_catalog_item(self, type_name, name, value):
        """
        Adds a catalog item by name and type
        """
        if type_name not in self.catalog:
            raise ValueError("Catalog type {} does not exist".format(type_name))
        if name in self.catalog[type_name]:
            raise ValueError("Catalog item {}/{} already registered".format(type_name, name))
        self.catalog[type_name][name] = value

    def get_catalog_items(self, type_name):
        if type_name not in self.catalog:
            raise ValueError("Catalog type {} does not exist".format(type_name))
        return self.catalog[type_name]

    def group_catalog(self, max_order=None):
        return catalog_list(self.config.get("catalog", "path"), max_order=max_order)

    def analysis_for(self, group):
        """
        The shared GroupAnalysis for a group, keyed by its spec.
        """
        key = group.spec
        with self.analyses_lock:
            if key not in self.analyses:
                self.analyses[key] = GroupAnalysis(
                    group,
                    sigma_cap=self.config.get("limits", "sigma_cap"),
                    isomorphism_cap=self.config.get("limits", "isomorphism_cap"),
                )
            return self.analyses[key]


def _entry_points():
    try:
        return metadata.entry_points(group=ENTRYPOINT_GROUP)
    except TypeError:
        return metadata.entry_points().get(ENTRYPOINT_GROUP, [])


class AppGroup(SpellcheckableGroup):
    """
    Group subclass that instantiates an App instance when called, loads
    plugins, and passes the app as the context obj. Library errors are
    turned into one-line messages and the matching exit status.
    """

    def __init__(self, app_class, **kwargs):
        super(AppGroup, self).__init__(**kwargs)
        self.app = app_class(self)
        self.app.load_plugins()

    def invoke(self, ctx):
        ctx.obj = self.app
        return super(AppGroup, self).invoke(ctx)

    def main(self, *args, **kwargs):
        try:
            return super(AppGroup, self).main(*args, **kwargs)
        except GroupSpecError as e:
            click.echo(RED("Invalid group spec: {}".format(e)), err=True)
            sys.exit(ExitCode.PARSE_ERROR)
        except BadConfigError as e:
            click.echo(RED("Bad configuration: {}".format(e)), err=True)
            sys.exit(ExitCode.PARSE_ERROR)
        except TableCapExceeded as e:
            click.echo(YELLOW(str(e)), err=True)
            sys.exit(ExitCode.CAP_EXCEEDED)


@click.command(cls=AppGroup, app_class=App)
@click.version_option(version=__version__, prog_name="gcover")
@click.option("--config", "config_paths", multiple=True, type=click.Path(exists=True, dir_okay=False),
              help="Extra YAML config file (repeatable).")
@click.option("--verbose", "-v", count=True, help="Log more (-v info, -vv debug).")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker threads for catalog runs.")
@click.pass_obj
def cli(app, config_paths, verbose, workers):
    """
    gcover, a toolkit for covering finite groups by proper subgroups.
    """
    # Load config based on CLI parameters
    app.load_config(config_paths)
    if workers is not None:
        app.config.add_config({"runner": {"workers": workers}}, "--workers")
    install_handler(verbose)


# Run CLI if called directly
if __name__ == '__main__':
    cli()
