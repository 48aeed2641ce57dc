import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from racklab.constructions import alternating, dihedral
from racklab.errors import CapExceededError, MalformedInputError
from racklab.lattice import enumerate_subrack_lattice
from racklab.poset import Poset, boolean_proper_part, proper_part
from racklab.racks import p_power_rack
from racklab.topology import (SimplicialComplex, barycentric_subdivision, betti_numbers,
                              check_crosscut, crosscut_complex, disjoint_union_complex,
                              face_poset, find_shelling, join_complex, order_complex,
                              reduced_euler, simplex, smith_invariants, spanning_tree_edge_order,
                              sphere, verify_shelling)

# a 6-vertex triangulation of the real projective plane
RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4), (2, 3, 5), (1, 3, 4),
       (2, 4, 5), (1, 3, 5)]


def float_betti(K):
    """Rational Betti numbers from floating-point ranks (fine for small complexes)."""
    faces = {d: K.faces_of_dim(d) for d in range(-1, K.dim + 1)}
    rank = {}
    for d in range(0, K.dim + 1):
        index = {f: i for i, f in enumerate(faces[d - 1])}
        M = np.zeros((len(faces[d - 1]), len(faces[d])))
        for j, f in enumerate(faces[d]):
            for k in range(len(f)):
                M[index[f[:k] + f[k + 1:]], j] = (-1) ** k
        rank[d] = np.linalg.matrix_rank(M) if M.size else 0
    return {d: len(faces[d]) - rank.get(d, 0) - rank.get(d + 1, 0) for d in faces}


def random_complex(seed, vertices=7, facets=6):
    rng = random.Random(seed)
    out = [tuple(rng.sample(range(vertices), rng.randint(1, 4)))
           for _ in range(rng.randint(1, facets))]
    return SimplicialComplex.from_facets(out)


def test_order_complex_examples():
    K = order_complex(Poset.chain(3))
    assert len(K) == 8 and K.dim == 2
    A = order_complex(Poset.antichain(4))
    assert A.f_vector() == [1, 4]
    hexagon = order_complex(boolean_proper_part(3))
    assert hexagon.f_vector() == [1, 6, 6]


def test_subdivision():
    edge = simplex(1)
    sd = barycentric_subdivision(edge)
    assert sd.f_vector() == [1, 3, 2]
    assert barycentric_subdivision(sphere(1)).f_vector() == [1, 6, 6]
    assert len(face_poset(sphere(1))) == 6


def test_join_and_spheres():
    A = random_complex(3)
    assert join_complex(A, sphere(-1)).f_vector() == A.f_vector()
    circle = join_complex(sphere(0), sphere(0))
    assert circle.f_vector() == [1, 4, 4]
    assert betti_numbers(circle).concentrated_in(1, 1)
    assert join_complex(SimplicialComplex.void(), A).is_void


def test_reduced_euler():
    assert reduced_euler(simplex(0)) == 0
    for d in range(-1, 5):
        assert reduced_euler(sphere(d)) == (-1) ** d


def test_betti_examples():
    assert betti_numbers(sphere(2)).concentrated_in(2, 1)
    assert betti_numbers(simplex(3)).nonzero() == {}
    rp2 = betti_numbers(SimplicialComplex.from_facets(RP2))
    assert rp2.nonzero() == {} and rp2.torsion == {1: [2]}


def test_smith_invariants():
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_invariants([[0, 0], [0, 0]]) == []


@given(st.integers(0, 10**6))
def test_betti_matches_float_ranks(seed):
    K = random_complex(seed)
    got = betti_numbers(K).reduced_betti
    want = float_betti(K)
    assert {d: b for d, b in got.items() if b} == {d: b for d, b in want.items() if b}


@given(st.integers(0, 10**6))
def test_modular_path_matches_integer_path(seed):
    K = random_complex(seed, 8, 8)
    a = betti_numbers(K)
    b = betti_numbers(K, snf_threshold=0)
    assert a.nonzero() == b.nonzero() and b.method == "two-prime"


@given(st.integers(0, 10**6))
def test_subdivision_preserves_homology(seed):
    K = random_complex(seed, 6, 4)
    assert betti_numbers(K).signature() == betti_numbers(barycentric_subdivision(K)).signature()


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_join_euler_identity(s1, s2):
    A, B = random_complex(s1, 5, 3), random_complex(s2, 5, 3)
    assert reduced_euler(join_complex(A, B)) == -reduced_euler(A) * reduced_euler(B)


def test_crosscut_on_boolean_lattice():
    P = boolean_proper_part(3)
    atoms = P.minimal()
    assert check_crosscut(P, atoms).is_crosscut
    K = crosscut_complex(P, atoms)
    # proper subsets of the three atoms: the boundary of a triangle
    assert betti_numbers(K).concentrated_in(1, 1)
    C = Poset.chain(3)
    assert betti_numbers(crosscut_complex(C, [2])).nonzero() == {}


def test_crosscut_rejections():
    P = boolean_proper_part(3)
    singles, pairs = P.minimal(), P.maximal()
    assert check_crosscut(P, [singles[0], pairs[0]]).violated in ("antichain", "chain")
    with pytest.raises(MalformedInputError):
        crosscut_complex(P, [singles[0]])


def test_maximal_subracks_form_crosscut():
    L = enumerate_subrack_lattice(p_power_rack(alternating(4), 3))
    P = proper_part(L)
    maxes = P.maximal()
    assert check_crosscut(P, maxes).is_crosscut
    assert betti_numbers(crosscut_complex(P, maxes)).signature() == \
        betti_numbers(order_complex(P)).signature()


def test_face_cap():
    with pytest.raises(CapExceededError):
        order_complex(Poset.boolean(6), cap=100)


def test_shelling():
    K = sphere(2)
    rep = verify_shelling(K, K.facets()[::-1])
    assert rep.is_shelling and rep.sphere_counts == {2: 1}
    two_edges = disjoint_union_complex(simplex(1), simplex(1))
    assert not verify_shelling(two_edges, two_edges.facets()).is_shelling
    assert not find_shelling(two_edges).is_shelling
    assert find_shelling(SimplicialComplex.from_facets(RP2)).is_shelling is False
    found = find_shelling(barycentric_subdivision(sphere(1)))
    assert found.is_shelling and found.sphere_counts == {1: 1}


def test_tree_first_edge_orders():
    R = p_power_rack(dihedral(30), 2)
    from racklab.theorems import RackStudy, spherical_and_parabolic

    st_ = RackStudy(R)
    sp = spherical_and_parabolic(R, study=st_)
    K = order_complex(st_.lattice.subposet(sp.parabolic))
    order = spanning_tree_edge_order(K)
    rng = random.Random(0)
    for _ in range(20):
        tail = order[22:]
        rng.shuffle(tail)
        rep = verify_shelling(K, order[:22] + tail)
        assert rep.is_shelling and rep.sphere_counts == {1: 8}
