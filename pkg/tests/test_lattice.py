import random

import pytest
from hypothesis import given, strategies as st

from racklab.bits import popcount
from racklab.constructions import alternating, dihedral, symmetric
from racklab.errors import CapExceededError, MalformedInputError
from racklab.groups import find_class
from racklab.lattice import (brute_force_closed_sets, closed_sets, coatoms_above,
                             enumerate_subrack_lattice, epsilon_closure, epsilon_subrack,
                             inf_poset, is_atomic, is_coatomic, is_maximal_subrack,
                             maximal_subracks, next_closure, purity_and_rank)
from racklab.poset import Poset, proper_part
from racklab.racks import class_rack, p_power_rack, subrack_closure, trivial_rack
from racklab.suite import random_conjugation_rack


@pytest.fixture(scope="module")
def T():
    S4 = symmetric(4)
    return class_rack(S4, find_class(S4, "transpositions"))


def test_next_closure_on_powerset():
    # the identity closure has every subset closed
    assert sorted(next_closure(lambda X: X, 0b111)) == list(range(8))


def test_next_closure_lectic_order():
    sets = list(next_closure(lambda X: X, 0b111))
    # lectic order on {0,1,2} with 0 as the most significant position
    assert sets == [0, 4, 2, 6, 1, 5, 3, 7]


@given(st.integers(0, 10**6))
def test_random_racks_match_brute_force(seed):
    _, R = random_conjugation_rack(random.Random(seed), 12)
    assert sorted(closed_sets(R)) == brute_force_closed_sets(R)


def test_lattice_sizes(T):
    assert len(enumerate_subrack_lattice(T)) == 15
    assert len(enumerate_subrack_lattice(trivial_rack(1))) == 2
    G3 = p_power_rack(alternating(4), 3)
    L = enumerate_subrack_lattice(G3)
    assert len(L) == len(brute_force_closed_sets(G3))
    assert L.is_lattice()


def test_meets_and_joins(T):
    L = enumerate_subrack_lattice(T)
    m = L.payloads
    for i in range(len(L)):
        for j in range(len(L)):
            assert m[L.meet(i, j)] == m[i] & m[j]
            assert m[L.join(i, j)] == subrack_closure(T, m[i] | m[j])


def test_cap():
    R = p_power_rack(alternating(5), 2)
    with pytest.raises(CapExceededError) as exc:
        enumerate_subrack_lattice(R, cap=20)
    assert len(exc.value.partial) == 20


def test_within_and_lower(T):
    L = enumerate_subrack_lattice(T)
    M = maximal_subracks(T)[0]
    inside = closed_sets(T, within=M)
    assert sorted(inside) == sorted(S for S in L.payloads if S & ~M == 0)
    above = closed_sets(T, lower=M)
    assert sorted(above) == sorted([M, T.full_mask])


def test_inf_examples(T):
    L = enumerate_subrack_lattice(T)
    assert len(inf_poset(L)) == 13 == len(proper_part(L))
    assert len(inf_poset(Poset.boolean(3))) == 6
    G3 = enumerate_subrack_lattice(p_power_rack(alternating(4), 3))
    assert sorted(inf_poset(G3).payloads) == sorted(proper_part(G3).payloads)
    with pytest.raises(MalformedInputError):
        inf_poset(L, [L.top()])


def test_epsilon(T):
    L = enumerate_subrack_lattice(T)
    for c in L.coatoms():
        assert epsilon_closure(L, c) == c
    for i in range(len(L)):
        if i != L.top():
            assert epsilon_closure(L, i) == i
            assert L.payloads[i] == epsilon_subrack(T, L.payloads[i])


def test_epsilon_not_identity_on_d30():
    R = p_power_rack(dihedral(30), 2)
    L = enumerate_subrack_lattice(R)
    inf = set(inf_poset(L).parent_ids)
    for i in range(len(L)):
        if i == L.top():
            continue
        e = epsilon_closure(L, i)
        assert L.leq(i, e) and epsilon_closure(L, e) == e
        if i != L.bottom():
            assert (e == i) == (i in inf)
        assert L.payloads[e] == epsilon_subrack(R, L.payloads[i])


def test_atomic_coatomic(T):
    L = enumerate_subrack_lattice(T)
    assert is_atomic(L) and is_coatomic(L)
    C3 = Poset.chain(3)
    assert not is_atomic(C3) and not is_coatomic(C3)


def test_purity(T):
    assert purity_and_rank(enumerate_subrack_lattice(T)).is_pure
    G3 = enumerate_subrack_lattice(p_power_rack(alternating(4), 3))
    assert purity_and_rank(G3).is_pure
    # a 2-chain and a 3-chain sharing bottom and top
    P = Poset.from_covers(list(range(5)), [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)])
    rep = purity_and_rank(P)
    assert not rep.is_pure and rep.length == 3
    short, long_ = rep.witnesses
    assert len(short) == 3 and len(long_) == 4


def test_maximal_subracks(T):
    L = enumerate_subrack_lattice(T)
    want = sorted(L.payloads[c] for c in L.coatoms())
    assert sorted(maximal_subracks(T)) == want
    assert all(is_maximal_subrack(T, M) for M in want)
    assert not is_maximal_subrack(T, T.full_mask)
    one = L.atoms()[0]
    assert sorted(coatoms_above(T, L.payloads[one])) == sorted(
        M for M in want if L.payloads[one] & ~M == 0)
    assert sorted(popcount(M) for M in want) == [2, 2, 2, 3, 3, 3, 3]
