"""
Constructors for the families of small groups the toolkit works with.

Every constructor returns a validated GroupTable with the identity at index 0
and a normalized spec string naming the group in the spec grammar.
"""
import itertools
import math
import numpy as np
import sympy

from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from .table import GroupTable, check_cap, table_cap
from ..exceptions import ConstructorError, TableCapExceeded
from ..utils.functional import prime_power


SYMMETRIC_DEGREES = range(2, 6)
ALTERNATING_DEGREES = range(3, 6)


def build_cyclic(n):
    """
    Z/nZ with element i written as a^i.
    """
    if not isinstance(n, int) or n < 1:
        raise ConstructorError("Cyclic group order must be a positive integer, got {}".format(n), atom="C{}".format(n))
    check_cap(n)
    indices = np.arange(n)
    product = (indices[:, None] + indices[None, :]) % n
    return GroupTable.from_table(product, [_word("a", i) for i in range(n)], spec="C{}".format(n))


def build_dihedral(order):
    """
    The dihedral group of the given ORDER 2n, <x, y | x^n = y^2 = 1, yxy = x^-1>,
    with x^i y^j stored at index i + n*j.
    """
    atom = "D{}".format(order)
    if not isinstance(order, int) or order < 4 or order % 2:
        raise ConstructorError("Dihedral group order must be even and at least 4, got {}".format(order), atom=atom)
    check_cap(order)
    n = order // 2

    def multiply(left, right):
        (i1, j1), (i2, j2) = left, right
        # y x^i = x^-i y
        return ((i1 + (-i2 if j1 else i2)) % n, (j1 + j2) % 2)

    elements = [(i, j) for j in range(2) for i in range(n)]
    return GroupTable.from_elements(
        elements,
        multiply,
        label=lambda e: _word("x", e[0], "y", e[1]),
        spec=atom,
    )


def build_generalized_quaternion(order):
    """
    The generalized quaternion group of order 2^m (m >= 3), built as the
    dicyclic group <a, b | a^(2^(m-1)) = 1, b^2 = a^(2^(m-2)), b a b^-1 = a^-1>.
    Element a^i b^j is stored at index i + 2^(m-1) * j.
    """
    atom = "Q{}".format(order)
    message = "Generalized quaternion order must be a power of 2 and at least 8, got {}".format(order)
    if not isinstance(order, int) or order < 8:
        raise ConstructorError(message, atom=atom)
    check_cap(order)
    pp = prime_power(order)
    if pp is None or pp[0] != 2:
        raise ConstructorError(message, atom=atom)
    n = order // 2
    half = n // 2

    def multiply(left, right):
        (i1, j1), (i2, j2) = left, right
        i = i1 + (-i2 if j1 else i2)
        if j1 and j2:
            # b^2 = a^half
            i += half
        return (i % n, (j1 + j2) % 2)

    elements = [(i, j) for j in range(2) for i in range(n)]
    return GroupTable.from_elements(
        elements,
        multiply,
        label=lambda e: _word("a", e[0], "b", e[1]),
        spec=atom,
    )


def build_elementary_abelian(p, k):
    """
    The direct power C_p^k, elements stored as base-p digit vectors (first
    coordinate varying fastest).
    """
    atom = "E({},{})".format(p, k)
    if not isinstance(p, int) or p < 2:
        raise ConstructorError("Elementary abelian base must be prime, got {}".format(p), atom=atom)
    if not isinstance(k, int) or k < 1:
        raise ConstructorError("Elementary abelian rank must be at least 1, got {}".format(k), atom=atom)
    cap = table_cap()
    # Either bound alone already puts p^k over the cap
    if p > cap or k >= cap.bit_length():
        raise TableCapExceeded("{}^{}".format(p, k), cap)
    order = p ** k
    check_cap(order)
    if not sympy.isprime(p):
        raise ConstructorError("Elementary abelian base must be prime, got {}".format(p), atom=atom)
    digits = np.array([[(i // p ** d) % p for d in range(k)] for i in range(order)])
    weights = p ** np.arange(k)
    summed = (digits[:, None, :] + digits[None, :, :]) % p
    product = summed @ weights
    labels = ["(" + ",".join(str(int(x)) for x in row) + ")" for row in digits]
    return GroupTable.from_table(product, labels, spec=atom)


def build_direct_product(a, b):
    """
    A x B on index pairs, (i, j) stored at i * |B| + j so that (0, 0) is
    index 0 and pairs are ordered lexicographically.
    """
    check_cap(a.order * b.order, what="direct product")
    m = b.order
    pa = a.product.astype(np.int64)
    pb = b.product.astype(np.int64)
    # product[(i1, j1), (i2, j2)] = pa[i1, i2] * m + pb[j1, j2]
    product = (pa[:, None, :, None] * m + pb[None, :, None, :]).reshape(a.order * m, a.order * m)
    labels = ["({},{})".format(la, lb) for la, lb in itertools.product(a.labels, b.labels)]
    return GroupTable.from_table(product, labels, spec=product_spec(a.spec, b.spec))


def build_power(g, k):
    """
    The direct power g x g x ... x g (k factors), left-associated.
    """
    if k < 1:
        raise ConstructorError(
            "Direct power exponent must be at least 1, got {}".format(k),
            atom="{}^{}".format(g.spec, k),
        )
    result = g
    for _ in range(k - 1):
        result = build_direct_product(result, g)
    return result


def build_semidirect_cyclic(n, m, k):
    """
    C_n x| C_m with b a b^-1 = a^k, elements a^i b^j stored at i + n*j
    (i varying fastest), multiplied as
    (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2 k^j1) b^(j1 + j2).
    """
    atom = "SD({},{},{})".format(n, m, k)
    if not all(isinstance(v, int) for v in (n, m, k)) or n < 1 or m < 1:
        raise ConstructorError("Semidirect parameters must be positive integers", atom=atom)
    check_cap(n * m)
    if math.gcd(k, n) != 1:
        raise ConstructorError("Action exponent {} is not a unit modulo {}".format(k, n), atom=atom)
    if pow(k, m, n) != 1 % n:
        raise ConstructorError("Action exponent {} does not satisfy k^{} = 1 mod {}".format(k, m, n), atom=atom)
    twist = [pow(k, j, n) for j in range(m)]

    def multiply(left, right):
        (i1, j1), (i2, j2) = left, right
        return ((i1 + i2 * twist[j1]) % n, (j1 + j2) % m)

    elements = [(i, j) for j in range(m) for i in range(n)]
    return GroupTable.from_elements(
        elements,
        multiply,
        label=lambda e: _word("a", e[0], "b", e[1]),
        spec=atom,
    )


def build_symmetric(n):
    """
    S_n as a permutation composition table, (p*q)(x) = p(q(x)), with the
    identity permutation at index 0.
    """
    atom = "S{}".format(n)
    if n not in SYMMETRIC_DEGREES:
        raise ConstructorError("Symmetric group degree must be in 2..5, got {}".format(n), atom=atom)
    return _permutation_group(SymmetricGroup(n), atom)


def build_alternating(n):
    """
    A_n, the even permutations, composed as in build_symmetric.
    """
    atom = "A{}".format(n)
    if n not in ALTERNATING_DEGREES:
        raise ConstructorError("Alternating group degree must be in 3..5, got {}".format(n), atom=atom)
    return _permutation_group(AlternatingGroup(n), atom)


def _permutation_group(group, spec):
    # Sorting by array form lists the identity first
    elements = sorted(group.elements, key=lambda p: p.array_form)

    def compose(p, q):
        # sympy multiplies left to right: (q * p)(x) = p(q(x))
        return q * p

    return GroupTable.from_elements(elements, compose, label=_cycle_notation, spec=spec)


def _cycle_notation(permutation):
    cycles = permutation.cyclic_form
    return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles) or "()"


def _word(*parts):
    """
    Renders generator powers like ("x", 2, "y", 1) as "x^2y"; all-zero is "1".
    """
    text = ""
    for name, exponent in zip(parts[::2], parts[1::2]):
        if exponent == 1:
            text += name
        elif exponent:
            text += "{}^{}".format(name, exponent)
    return text or "1"


def product_spec(left, right):
    return "{} x {}".format(_wrap(left), _wrap(right, right_operand=True))


def _wrap(spec, right_operand=False):
    # Products are left-associative, so only a product on the right needs parentheses
    if right_operand and " x " in spec and not _is_parenthesized(spec):
        return "(" + spec + ")"
    return spec


def _is_parenthesized(spec):
    if not (spec.startswith("(") and spec.endswith(")")):
        return False
    depth = 0
    for i, char in enumerate(spec):
        depth += {"(": 1, ")": -1}.get(char, 0)
        if depth == 0 and i < len(spec) - 1:
            return False
    return True
