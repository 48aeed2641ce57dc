import pytest

from racklab.bits import popcount
from racklab.constructions import (alternating, cyclic, dihedral, named_group, quaternion,
                                   symmetric)
from racklab.errors import HypothesisError
from racklab.groups import center, conjugacy_classes, find_class, p_core, p_power_elements
from racklab.lattice import enumerate_subrack_lattice
from racklab.poset import Poset
from racklab.racks import class_rack, group_rack, is_connected, p_power_rack
from racklab.suite import six_point_chains
from racklab.theorems import (RackStudy, check_decomposition, check_euler,
                              check_nilpotent_class, check_pi_ipi, check_product,
                              check_sphere_theorems, generated_subgroup_class_count,
                              inf_purity_probe, maximal_chain_check, p_core_oracle,
                              spherical_and_parabolic)


@pytest.fixture(scope="module")
def T():
    S4 = symmetric(4)
    return class_rack(S4, find_class(S4, "transpositions"))


def test_group_rack_has_no_parabolics():
    for G in (symmetric(3), quaternion(), alternating(4)):
        sp = spherical_and_parabolic(group_rack(G))
        assert sp.parabolic == [] and sp.c == len(conjugacy_classes(G))


def test_connected_rack_everything_parabolic(T):
    st = RackStudy(T)
    sp = spherical_and_parabolic(T, study=st)
    assert sp.spherical == [] and sorted(sp.parabolic) == sorted(st.inf_ids)


def test_a4_parabolics_are_sylows():
    R = p_power_rack(alternating(4), 3)
    st = RackStudy(R)
    sp = spherical_and_parabolic(R, study=st)
    P = st.lattice.subposet(sp.parabolic)
    assert len(P) == 4 and sp.k == 4 and sp.c == 3
    assert all(popcount(S) == 3 for S in P.payloads)
    assert all(not P.upper_covers(i) for i in range(4))
    assert generated_subgroup_class_count(R) == 3


def test_sphere_theorems(T):
    v = check_sphere_theorems(group_rack(symmetric(3)))
    assert v.passed and v.data["orbits"] == 3 and v.data["homology"]["betti"] == {1: 1}
    v = check_sphere_theorems(group_rack(quaternion()))
    assert v.passed and v.data["orbits"] == 5 and v.data["homology"]["betti"] == {3: 1}
    v = check_sphere_theorems(T)
    assert not v.hypotheses_hold


@pytest.mark.parametrize("G,p,betti,k", [
    (alternating(4), 3, {2: 3}, 4),
    (dihedral(30), 2, {2: 8}, 15),
    (alternating(5), 2, {2: 40}, 5),
])
def test_decomposition(G, p, betti, k):
    v = check_decomposition(p_power_rack(G, p))
    assert v.passed
    assert v.data["proper"]["betti"] == betti
    assert v.data["ordinal_sum"] == v.data["sphere_join"] == v.data["proper"]
    assert v.data["c"] == v.data["c_from_group"]
    assert v.data["spherical_is_boolean"]


def test_sylow_corollary_on_a4():
    v = check_decomposition(p_power_rack(alternating(4), 3))
    assert v.data["parabolics_are_sylows"] and v.data["corollary_expected"] == {"dim": 2, "rank": 3}


@pytest.mark.parametrize("G,p,chi", [(alternating(4), 3, 3), (alternating(5), 2, 40),
                                     (dihedral(30), 2, None), (cyclic(4), 2, None),
                                     (symmetric(3), 3, None)])
def test_euler(G, p, chi):
    v = check_euler(G, p)
    assert v.passed
    if chi is not None:
        assert v.data["chi_tilde"] == chi and v.data["divisible"]
    assert v.data["p_core_matches_oracle"]


def test_euler_hypothesis_matters():
    # in S4 some 2-subgroup lies in no unique smallest parabolic, and 8 does not divide χ̃
    v = check_euler(symmetric(4), 2)
    assert not v.hypotheses_hold and v.data["hypothesis_failures"]
    assert v.data["chi_tilde"] == -2 and not v.data["divisible"]


def test_euler_normal_sylow():
    v = check_euler(cyclic(4), 2)
    assert v.data["p_core_is_G_p"] and not v.data["divisible"]
    assert abs(v.data["chi_tilde"]) == 1


def test_euler_rejects_non_divisor():
    with pytest.raises(HypothesisError):
        check_euler(alternating(4), 5)


def test_p_core_agrees_with_oracle():
    for G, p in [(symmetric(4), 2), (alternating(4), 2), (dihedral(12), 2), (quaternion(), 2)]:
        assert p_core(G, p) == p_core_oracle(G, p)


def test_pi_ipi_transpositions(T):
    v = check_pi_ipi(T)
    assert v.passed
    assert v.data["pi_image_isomorphic"] and v.data["iota_pi_order_preserving"]
    assert v.data["omega_pi_order_preserving"] and v.data["ipi_criterion_consistent"]


def test_pi_ipi_strict_eta_containment():
    G = named_group("order48")
    k = next(i for i, c in enumerate(conjugacy_classes(G)) if popcount(c) == 16)
    R = class_rack(G, k)
    assert is_connected(R)
    L = enumerate_subrack_lattice(R)
    # exactly one proper subrack properly contains a given element
    above = [S for S in L.payloads if S & 1 and S not in (1, R.full_mask)]
    assert [popcount(S) for S in above] == [4]
    v = check_pi_ipi(R)
    assert v.passed and v.data["inf_strictly_inside_eta"]


def test_pi_ipi_needs_connected():
    with pytest.raises(HypothesisError):
        check_pi_ipi(group_rack(symmetric(3)))


def test_product():
    G = named_group("Z2xS3")
    X = p_power_elements(G, 2)
    v = check_product(G, X)
    assert v.passed and v.data["z_size"] == 2
    S3 = symmetric(3)
    transpositions = conjugacy_classes(S3)[find_class(S3, "transpositions")]
    assert not check_product(S3, transpositions).hypotheses_hold  # Z = ∅
    Z4 = cyclic(4)
    X = p_power_elements(Z4, 2)
    assert X == center(Z4) and not check_product(Z4, X).hypotheses_hold


def test_nilpotent_boolean_layer():
    v = check_nilpotent_class(Poset.boolean(3), 3, 1)
    assert v.passed and v.data["layers"][0]["components"] == 1


def test_nilpotent_non_pure():
    P = Poset.from_covers(list(range(5)), [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)])
    v = check_nilpotent_class(P, 2)
    assert not v.conclusion_holds and len(v.data["witness_chains"]) == 2


def test_nilpotent_order_243():
    G = named_group("order243")
    k = next(i for i, c in enumerate(conjugacy_classes(G)) if popcount(c) == 27)
    L = enumerate_subrack_lattice(class_rack(G, k))
    v = check_nilpotent_class(L, 3)
    assert v.data["pure"] and v.data["length"] == 7 and v.data["fitting_t"] == [3]
    assert check_nilpotent_class(L, 3, 3).passed
    assert not check_nilpotent_class(L, 3, 5).conclusion_holds


@pytest.fixture(scope="module")
def a6():
    return six_point_chains()


def test_six_point_subgroups(a6):
    assert a6["rack"].size == 40 and a6["H_order"] == 12 and a6["K_order"] == 60


def test_six_point_full_chains(a6):
    for chain in a6["full_chains"]:
        v = maximal_chain_check(a6["rack"], chain, "full")
        assert v.passed and v.data["length"] == 3


def test_six_point_inf_chains(a6):
    lengths = []
    for chain in a6["inf_chains"]:
        v = maximal_chain_check(a6["rack"], chain, "inf")
        assert v.passed
        lengths.append(v.data["length"])
    assert lengths == [1, 2]


def test_chain_with_skippable_step(a6):
    a, ab, abc, abcd = a6["full_chains"][0]
    v = maximal_chain_check(a6["rack"], [a, abcd], "full")
    assert not v.conclusion_holds and v.data["saturation_failures"]


def test_inf_purity_probe_six_point(a6):
    st = RackStudy(a6["rack"])
    v = inf_purity_probe(a6["rack"], st)
    assert not v.data["inf_pure"] and v.data["inf_length"] == 2
    short, long_ = v.data["chain_witnesses"]
    assert len(short) < len(long_)
    # Inf and the full proper part must agree, computed separately
    assert st.homology_of(st.proper).signature() == st.inf_homology.signature()
    assert not v.data["top_dimension_only"] and not v.data["candidate"]


def test_inf_purity_probe_pure_case(T):
    v = inf_purity_probe(T)
    assert v.conclusion_holds and v.data["inf_pure"] and not v.data["candidate"]


@pytest.mark.parametrize("R", [
    group_rack(symmetric(3)),
    class_rack(alternating(4), find_class(alternating(4), 2)),
    p_power_rack(dihedral(8), 2),
])
def test_convention_flag_matches_coatom_intersection(R):
    L = enumerate_subrack_lattice(R)
    masks = [L.payloads[c] for c in L.coatoms()]
    meet = R.full_mask
    for m in masks:
        meet &= m
    # a meet of coatoms is the closure-free intersection, so compare raw bitmasks
    assert RackStudy(R).coatom_meet_is_bottom == (bool(masks) and meet == L.payloads[L.bottom()])
