"""Bitset helpers.

Subsets of a finite ground set ``{0, ..., n-1}`` are plain Python ints: bit
``i`` is set iff ``i`` is a member.  Intersection, union and inclusion are
``&``, ``|`` and ``a & ~b == 0``.
"""


def from_indices(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_indices(mask):
    return list(iter_bits(mask))


def popcount(mask):
    return mask.bit_count()


def full(n):
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def lowest(mask):
    """Index of the least member; -1 for the empty set."""
    return (mask & -mask).bit_length() - 1
