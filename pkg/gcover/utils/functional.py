import functools
import math
import sympy


class cached_property(object):  # noqa
    """
    Decorator that converts a method with a single self argument into a
    property cached on the instance.

    The value is written straight into the instance __dict__, so it also works
    on frozen attrs classes (which only block __setattr__).
    """

    def __init__(self, func, name=None):
        self.func = func
        self.__doc__ = getattr(func, '__doc__')
        self.name = name or func.__name__

    def __get__(self, instance, cls=None):
        if instance is None:
            return self
        res = instance.__dict__[self.name] = self.func(instance)
        return res


def lcm(*values):
    """
    Least common multiple of the given positive integers (1 for none).
    """
    return functools.reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def prime_power(n):
    """
    Returns (p, k) with n == p ** k and p prime, or None if n is not a prime
    power. 1 is reported as None.
    """
    if n < 2:
        return None
    factors = sympy.factorint(n)
    if len(factors) != 1:
        return None
    [(p, k)] = factors.items()
    return int(p), int(k)
