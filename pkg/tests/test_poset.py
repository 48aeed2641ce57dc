import itertools
import random

import pytest
from hypothesis import given, strategies as st

from racklab.errors import MalformedInputError
from racklab.isomorphism import is_isomorphism, is_order_preserving, poset_isomorphism
from racklab.poset import (Poset, add_bounds, boolean_proper_part, direct_product, dual,
                           fixed_point_subposet, interval, ordinal_sum, proper_part)


def random_poset(seed, n, density=0.3):
    rng = random.Random(seed)
    covers = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Poset.from_covers(list(range(n)), covers)


def relabel(P, perm):
    """Copy of ``P`` with node i renamed perm[i]."""
    n = len(P)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    up = []
    for new in range(n):
        old = inv[new]
        up.append(sum(1 << perm[j] for j in range(n) if P.up[old] >> j & 1))
    return Poset([P.payloads[inv[k]] for k in range(n)], up)


def test_basic_queries():
    B3 = Poset.boolean(3)
    assert len(B3) == 8 and B3.is_lattice()
    assert B3.bottom() == 0 and B3.top() == 7
    assert len(B3.atoms()) == 3 and len(B3.coatoms()) == 3
    a, b = B3.atoms()[:2]
    assert B3.payloads[B3.join(a, b)] == B3.payloads[a] | B3.payloads[b]
    assert B3.meet(a, b) == 0
    assert B3.length() == 3


def test_not_a_poset():
    with pytest.raises(MalformedInputError):
        Poset.from_covers([0, 1], [(0, 1), (1, 0)])


def test_combinators():
    B3 = Poset.boolean(3)
    assert len(proper_part(B3)) == 6
    assert poset_isomorphism(dual(B3), B3) is not None
    hat = add_bounds(Poset.antichain(2))
    assert len(hat) == 4 and hat.is_lattice()
    s = ordinal_sum(Poset.antichain(2), Poset.antichain(2))
    assert len(s) == 4 and sum(len(s.upper_covers(i)) for i in range(4)) == 4
    assert poset_isomorphism(direct_product(Poset.chain(2), Poset.chain(2)), Poset.boolean(2))
    assert len(interval(B3, 0, 7, open_=True)) == 6


def test_fixed_points():
    B2 = Poset.boolean(2)  # payloads 0, 1, 2, 3
    swap = [0, 2, 1, 3]
    assert fixed_point_subposet(B2, [swap]).payloads == [0, 3]
    with pytest.raises(MalformedInputError):
        fixed_point_subposet(B2, [[1, 0, 2, 3]])


def test_isomorphism_examples():
    assert poset_isomorphism(boolean_proper_part(2), Poset.antichain(2)) is not None
    assert poset_isomorphism(Poset.chain(3), Poset.antichain(3)) is None
    assert poset_isomorphism(Poset.chain(3), Poset.chain(4)) is None


@given(st.integers(0, 10**6), st.integers(1, 14), st.randoms(use_true_random=False))
def test_isomorphism_finds_relabelings(seed, n, rnd):
    P = random_poset(seed, n)
    perm = list(range(n))
    rnd.shuffle(perm)
    Q = relabel(P, perm)
    f = poset_isomorphism(P, Q)
    assert f is not None and is_isomorphism(P, Q, f)


@given(st.integers(0, 10**6), st.integers(2, 7))
def test_isomorphism_agrees_with_exhaustive_search(seed, n):
    P = random_poset(seed, n, 0.4)
    Q = random_poset(seed + 1, n, 0.4)
    brute = any(is_isomorphism(P, Q, list(p)) for p in itertools.permutations(range(n)))
    assert (poset_isomorphism(P, Q) is not None) == brute


def test_order_preserving():
    C = Poset.chain(3)
    assert is_order_preserving(C, C, [0, 0, 2])
    assert not is_order_preserving(C, C, [2, 1, 0])
