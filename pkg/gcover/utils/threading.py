import queue
import sys
import threading


class ExceptionalThread(threading.Thread):
    """
    Thread subclass that allows exceptions to be easily re-raised in the parent.
    """

    def __init__(self, target=None, args=None, kwargs=None, daemon=False):
        threading.Thread.__init__(self, daemon=daemon)
        self.target = target
        self.args = args or tuple()
        self.kwargs = kwargs or {}
        self.__exception = None

    def run_with_exception(self):
        """
        This method should be overriden if you want to subclass this.
        """
        if self.target:
            self.target(*self.args, **self.kwargs)
        else:
            raise NotImplementedError("You must override run_with_exception")

    def run(self):
        """This method should NOT be overriden."""
        try:
            self.run_with_exception()
        except BaseException:
            self.__exception = sys.exc_info()

    def maybe_raise(self):
        if self.__exception is not None:
            raise self.__exception[1]


def ordered_parallel_map(func, items, workers=1):
    """
    Calls func on every item using up to `workers` background threads and
    yields the results in the order of `items`, whatever order they finish in.

    The first exception raised by any call is re-raised here once its item's
    turn comes; remaining work is abandoned.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield func(item)
        return
    pending = queue.Queue()
    for position, item in enumerate(items):
        pending.put((position, item))
    results = {}
    failures = {}
    finished = threading.Condition()
    stop = threading.Event()

    def worker():
        while not stop.is_set():
            try:
                position, item = pending.get_nowait()
            except queue.Empty:
                return
            try:
                value = func(item)
            except BaseException:
                with finished:
                    failures[position] = sys.exc_info()[1]
                    finished.notify_all()
                return
            with finished:
                results[position] = value
                finished.notify_all()

    threads = [ExceptionalThread(target=worker, daemon=True) for _ in range(min(workers, len(items)))]
    for thread in threads:
        thread.start()
    try:
        for position in range(len(items)):
            with finished:
                while position not in results and position not in failures:
                    finished.wait()
                if position in failures:
                    raise failures.pop(position)
                value = results.pop(position)
            yield value
    finally:
        stop.set()
        for thread in threads:
            thread.join()
            thread.maybe_raise()
