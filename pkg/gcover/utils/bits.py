"""
Helpers for subsets of a group stored as Python integers, bit i set meaning
element index i is a member.
"""


def from_indices(indices):
    """
    Packs an iterable of element indices into a bitset.
    """
    bits = 0
    for i in indices:
        if i < 0:
            raise ValueError("element indices must be non-negative, got {}".format(i))
        bits |= 1 << i
    return bits


def to_indices(bits):
    """
    Returns the set bit positions in ascending order.
    """
    indices = []
    while bits:
        low = bits & -bits
        indices.append(low.bit_length() - 1)
        bits ^= low
    return indices


def popcount(bits):
    return bits.bit_count()


def full(n):
    """
    The bitset of all n elements.
    """
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def to_hex(bits):
    return "0x{:x}".format(bits)
