import json
import logging
import sys
import attr
import click

from .base import BasePlugin
from ..cli.argument_types import SuiteType
from ..cli.tasks import Task
from ..constants import ExitCode
from ..exceptions import VerificationFailure
from ..utils.threading import ordered_parallel_map


logger = logging.getLogger(__name__)


@attr.s
class VerifyPlugin(BasePlugin):
    """
    Runs the verification suites other plugins register over the group
    catalog.
    """

    provides = ["verify"]

    def load(self):
        self.add_command(verify)
        self.add_catalog_type("verify-suite")


def describe_subgroup(lattice, h):
    return {"position": lattice.index_of(h), "size": h.size, "members": h.hex()}


@attr.s
class BaseSuite:
    """
    Base class for verification suites.

    Write one or more methods that start with check_ and each one will be run
    as a separate check, with its docstring as the name of the check. Checks
    look at `self.analyses()` (the catalog groups in range, analyses shared
    between suites) or build their own groups.

    A check raising Failure (with a witness) fails the suite; one raising
    Warning is reported but does not. Returning normally is success.
    """

    # Class-level attributes naming the suite
    name = None
    description = None
    # Suites that are only practical on small groups lower this
    order_limit = None

    app = attr.ib()
    max_order = attr.ib()

    Failure = VerificationFailure

    class Warning(Exception):
        """
        Raised by checks on non-failure, but worrying info.
        """

    @property
    def effective_max_order(self):
        if self.order_limit is None:
            return self.max_order
        return min(self.max_order, self.order_limit)

    @property
    def isomorphism_cap(self):
        return self.app.config.get("limits", "isomorphism_cap")

    def entries(self):
        return self.app.group_catalog(max_order=self.effective_max_order)

    def prepare(self, analysis):
        """
        Work done for every group up front, on the worker threads.
        """
        analysis.lattice

    def analyses(self):
        if not hasattr(self, "_analyses"):
            groups = [entry.group for entry in self.entries()]

            def warm(group):
                analysis = self.app.analysis_for(group)
                self.prepare(analysis)
                return analysis

            workers = self.app.config.get("runner", "workers")
            self._analyses = list(ordered_parallel_map(warm, groups, workers=workers))
        return self._analyses

    def entry_analyses(self):
        """
        (catalog entry, analysis) pairs, for checks against expected values.
        """
        return list(zip(self.entries(), self.analyses()))

    def checks(self):
        return [getattr(self, name) for name in sorted(dir(self)) if name.startswith("check_")]

    def run(self, parent_task):
        """
        Runs every check, returning (passed, results) where results holds one
        JSON-ready dict per check in alphabetical order.
        """
        assert self.description is not None, "You must override description on a suite subclass"
        task = Task(self.description, parent=parent_task)
        results = []
        passed = True
        methods = self.checks()
        if not methods:
            task.finish(status="Empty", status_flavor=Task.FLAVOR_WARNING)
            return passed, results
        for method in methods:
            method_description = (method.__doc__ or "").strip() or method.__name__
            subtask = Task(method_description, parent=task)
            result = {"suite": self.name, "check": method.__name__[len("check_"):], "status": "ok"}
            try:
                method()
            except self.Warning as e:
                subtask.set_extra_info(str(e).split("\n"))
                subtask.finish(status="Warning", status_flavor=Task.FLAVOR_WARNING)
                result.update(status="warning", message=str(e))
            except self.Failure as e:
                subtask.set_extra_info(e.message.split("\n") + [
                    "{}: {}".format(key, json.dumps(value)) for key, value in e.witness.items()
                ])
                subtask.finish(status="Failed", status_flavor=Task.FLAVOR_BAD)
                result.update(status="failed", message=e.message, witness=e.witness)
                passed = False
                logger.info("%s/%s failed: %s", self.name, result["check"], e.message)
            else:
                subtask.finish(status="OK", status_flavor=Task.FLAVOR_GOOD)
            results.append(result)
        if passed:
            task.finish(status="OK", status_flavor=Task.FLAVOR_GOOD)
        else:
            task.finish(status="Failed", status_flavor=Task.FLAVOR_BAD)
        return passed, results


def run_suites(app, suite_name, max_order):
    """
    Runs one suite (or all of them, in registration order).
    """
    suites = app.get_catalog_items("verify-suite")
    if suite_name == "all":
        selected = list(suites.values())
    else:
        selected = [suites[suite_name]]
    passed = True
    results = []
    for suite_class in selected:
        suite_passed, suite_results = suite_class(app, max_order).run(app.root_task)
        passed = passed and suite_passed
        results.extend(suite_results)
    return passed, results


@click.command()
@click.argument("suite", type=SuiteType())
@click.option("--max-order", type=click.IntRange(min=1), default=None,
              help="Only check catalog groups up to this order.")
@click.option("--json", "as_json", is_flag=True, default=False, help="One JSON object per check.")
@click.pass_obj
def verify(app, suite, max_order, as_json):
    """
    Verifies a theorem suite over the catalog.
    """
    if max_order is None:
        max_order = app.config.get("limits", "max_order")
    if as_json:
        app.root_task.quiet = True
    passed, results = run_suites(app, suite, max_order)
    if as_json:
        for result in results:
            click.echo(json.dumps(result))
    if not passed:
        sys.exit(ExitCode.ASSERTION_FAILURE)
