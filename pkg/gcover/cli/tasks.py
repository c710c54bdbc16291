import shutil
import sys
import threading

from .colors import CYAN, GREEN, RED, YELLOW


UP_ONE = "\033[A\033[1000D"
CLEAR_LINE = "\033[2K"

console_lock = threading.RLock()


class Task:
    """
    Something that can be started (by being created), have its status updated,
    and then finished. It can also have a number of sub-tasks, and arbitary
    lines of extra information (failure witnesses, mostly) shown underneath.

    Only the topmost task prints; every change below it redraws the tree in
    place.
    """
    INDENT_AMOUNT = 2
    FLAVOR_NEUTRAL = "neutral"
    FLAVOR_GOOD = "good"
    FLAVOR_BAD = "bad"
    FLAVOR_WARNING = "warning"

    def __init__(self, name, parent=None):
        self.name = name
        self.parent = parent
        with console_lock:
            if self.parent is not None:
                self.parent.subtasks.append(self)
        self.subtasks = []
        self.status = None
        self.status_flavor = self.FLAVOR_NEUTRAL
        self.extra_info = []
        self.finished = False
        # Number of lines we had previously printed
        self.cleared_lines = 0
        self.update()

    def update(self, status=None, status_flavor=None, force=False):
        """
        Update the status message and its flavor.
        If this is the topmost task, this will trigger a reprint on the console.
        """
        if self.finished and not force:
            raise ValueError("You cannot update() a finished task!")
        with console_lock:
            if status is not None:
                self.status = status
            if status_flavor is not None:
                self.status_flavor = status_flavor
        if self.parent is not None:
            self.parent.update(force=True)
        else:
            self.clear_and_output()

    def set_extra_info(self, messages):
        with console_lock:
            self.extra_info = list(messages)
        if self.parent is not None:
            self.parent.update(force=True)

    def finish(self, **kwargs):
        """
        Marks the task as finished, meaning it can no longer be mutated.
        """
        self.finished = True
        self.update(force=True, **kwargs)

    def output(self, terminal_width, indent=0):
        """
        Returns the lines to output for this task to the screen (as a generator)
        """
        status_string = self.status or ""
        if self.status_flavor == self.FLAVOR_BAD:
            status_string = RED(status_string)
        elif self.status_flavor == self.FLAVOR_GOOD:
            status_string = GREEN(status_string)
        elif self.status_flavor == self.FLAVOR_WARNING:
            status_string = YELLOW(status_string)
        indent_string = " " * (self.INDENT_AMOUNT * indent)
        yield "{}{}: {}".format(indent_string, CYAN(self.name), status_string)
        info_indent = " " * (self.INDENT_AMOUNT * (indent + 1))
        for info in self.extra_info:
            yield (info_indent + info.strip())[:max(terminal_width, len(info_indent) + 1)]
        for subtask in self.subtasks:
            yield from subtask.output(terminal_width, indent=indent + 1)

    def clear_and_output(self):
        """
        Moves back over what was printed last time and prints the tree again.
        """
        with console_lock:
            terminal_width = shutil.get_terminal_size((120, 20)).columns
            output = list(self.output(terminal_width))
            print((UP_ONE + CLEAR_LINE) * self.cleared_lines, flush=True, end="")
            for line in output:
                print(line)
            self.cleared_lines = len(output)


class RootTask(Task):
    """
    The task every command hangs its tasks off. It prints nothing of its
    own; a quiet root prints nothing at all (used for JSON output).

    When stdout is not a terminal the tree is not redrawn; each top-level
    task is printed once, when it finishes.
    """

    def __init__(self, quiet=False, interactive=None):
        self.quiet = quiet
        self.interactive = sys.stdout.isatty() if interactive is None else interactive
        self.printed = 0
        super(RootTask, self).__init__("__root__")

    def output(self, terminal_width, indent=0):
        for subtask in self.subtasks:
            yield from subtask.output(terminal_width, indent=0)

    def clear_and_output(self):
        if self.quiet:
            return
        if self.interactive:
            super(RootTask, self).clear_and_output()
            return
        with console_lock:
            terminal_width = shutil.get_terminal_size((120, 20)).columns
            while self.printed < len(self.subtasks) and self.subtasks[self.printed].finished:
                for line in self.subtasks[self.printed].output(terminal_width):
                    print(line)
                self.printed += 1
