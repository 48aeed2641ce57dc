"""Worked instances and the end-to-end check suite run by ``racklab check all``.

Every check returns a :class:`~racklab.theorems.Verdict` whose ``data`` holds
the computed numbers next to the expected ones.
"""

import itertools
import random
import time

from .bits import iter_bits, popcount
from .constructions import alternating, dihedral, named_group, quaternion, symmetric
from .groups import Permutation, conjugacy_classes, find_class, sylow_p_subgroups
from .isomorphism import poset_isomorphism
from .lattice import (brute_force_closed_sets, closed_sets, enumerate_subrack_lattice,
                      epsilon_closure, is_atomic, is_coatomic)
from .partitions import partition_lattices
from .poset import add_bounds
from .racks import (class_rack, conjugation_rack, eta_closure, group_rack, is_connected,
                    p_power_rack, rack_mask, subrack_closure)
from .theorems import (RackStudy, Verdict, check_decomposition, check_euler, check_pi_ipi,
                       maximal_chain_check, spherical_and_parabolic)
from .topology import (SimplicialComplex, betti_numbers, crosscut_complex, join_complex,
                       order_complex, reduced_euler, spanning_tree_edge_order, verify_shelling)


# -- instances ---------------------------------------------------------------------


def transposition_rack(n=4):
    G = symmetric(n)
    return class_rack(G, find_class(G, "transpositions"))


def instance(name):
    """Racks used throughout the suite, by short name."""
    if name == "T":
        return transposition_rack(4)
    if name == "S3":
        return group_rack(symmetric(3))
    if name == "Q8":
        return group_rack(quaternion())
    if name == "A4G3":
        return p_power_rack(alternating(4), 3)
    if name == "D30G2":
        return p_power_rack(dihedral(30), 2)
    if name == "A5G2":
        return p_power_rack(alternating(5), 2)
    raise KeyError(name)


INSTANCES = ("T", "S3", "Q8", "A4G3", "D30G2", "A5G2")


def six_point_chains():
    """The (3,3)-cycle class of A6 with the named elements and subgroups of its chains.

    Points are written 1..6 as usual and shifted to 0..5 here.
    """
    G = alternating(6)

    def perm(*cycles):
        return G.index(Permutation.from_cycles(6, *[tuple(x - 1 for x in c) for c in cycles]))

    g = {
        "a": perm((1, 2, 3), (4, 5, 6)), "b": perm((1, 2, 3), (4, 6, 5)),
        "c": perm((1, 3, 2), (4, 5, 6)), "d": perm((1, 3, 2), (4, 6, 5)),
        "e": perm((1, 2, 6), (3, 4, 5)), "f": perm((1, 2, 4), (3, 6, 5)),
    }
    classes = conjugacy_classes(G)
    R = class_rack(G, next(k for k, c in enumerate(classes) if c >> g["a"] & 1))
    pos = {x: k for k, x in enumerate(R.provenance["elements"])}

    def m(*names):
        return sum(1 << pos[g[x]] for x in names)

    H = G.generated(1 << g["a"] | 1 << g["e"])
    K = G.generated(1 << g["a"] | 1 << g["f"])
    C1 = 0
    for h in iter_bits(H):
        C1 |= 1 << pos[G.conj(h, g["a"])]
    return {
        "rack": R, "H_order": popcount(H), "K_order": popcount(K),
        "full_chains": [[m("a"), m("a", "b"), m("a", "b", "c"), m("a", "b", "c", "d")],
                        [m("a"), C1, rack_mask(R, H), rack_mask(R, K)]],
        "inf_chains": [[m("a", "d"), m("a", "b", "c", "d")],
                       [m("a", "d"), rack_mask(R, H), rack_mask(R, K)]],
    }


def random_conjugation_rack(rng, max_size=14):
    """A conjugation-closed subset of a small group, with at most ``max_size`` elements."""
    pool = [("S3", None), ("S4", None), ("A4", None), ("Q8", None), ("Z2xS3", None),
            ("dihedral", 8), ("dihedral", 10), ("dihedral", 12), ("dihedral", 14),
            ("dihedral", 16), ("cyclic", 6)]
    while True:
        name, order = rng.choice(pool)
        G = named_group(name, order)
        classes = conjugacy_classes(G)
        picked = [c for c in classes if rng.random() < 0.7]
        X = 0
        for c in picked:
            if popcount(X | c) <= max_size:
                X |= c
        if X:
            label = name if order is None else f"{name}{order}"
            return label, conjugation_rack(G, X)


# -- individual suite checks ------------------------------------------------------------


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        v = fn(*args, **kwargs)
        v.data["seconds"] = round(time.perf_counter() - t0, 3)
        return v
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def partition_lattice_isomorphism():
    R = transposition_rack(4)
    L = enumerate_subrack_lattice(R)
    Pi = partition_lattices(4, "full")
    iso = poset_isomorphism(L, Pi)
    data = {"lattice_size": len(L), "partition_lattice_size": len(Pi), "isomorphic": iso is not None}
    return Verdict("partition_lattice", True, len(L) == 15 and iso is not None, data)


@_timed
def group_rack_spheres():
    data = {}
    ok = True
    for name, G in (("S3", symmetric(3)), ("Q8", quaternion())):
        c = len(conjugacy_classes(G))
        hom, method = RackStudy(group_rack(G)).proper_homology
        good = hom.concentrated_in(c - 2, 1)
        data[name] = {"classes": c, "betti": hom.to_dict()["betti"], "method": method,
                      "expected": {str(c - 2): 1}, "ok": good}
        ok = ok and good
    return Verdict("group_rack_spheres", True, ok, data)


@_timed
def a4_three():
    G = alternating(4)
    R = p_power_rack(G, 3)
    st = RackStudy(R)
    sp = spherical_and_parabolic(R, study=st)
    P = st.lattice.subposet(sp.parabolic)
    hom, method = st.proper_homology
    chi = st.proper_euler
    isolated = all(not P.upper_covers(i) and not P.lower_covers(i) for i in range(len(P)))
    data = {"G_p_size": R.size, "sylow_count": len(sylow_p_subgroups(G, 3)),
            "parabolic_count": len(P), "parabolic_isolated": isolated,
            "betti": hom.to_dict()["betti"], "method": method, "chi_tilde": chi}
    ok = (R.size == 9 and data["sylow_count"] == 4 and len(P) == 4 and isolated
          and hom.concentrated_in(2, 3) and chi == 3 and chi % 3 == 0)
    return Verdict("a4_p3", True, ok, data)


def _parabolic_complex(R, st):
    sp = spherical_and_parabolic(R, study=st)
    return order_complex(st.lattice.subposet(sp.parabolic), st.face_cap)


@_timed
def d30_two():
    R = p_power_rack(dihedral(30), 2)
    st = RackStudy(R)
    K = _parabolic_complex(R, st)
    hP = betti_numbers(K)
    hR, method = st.proper_homology
    order = spanning_tree_edge_order(K)
    sh = verify_shelling(K, order)
    data = {"parabolic_betti": hP.to_dict()["betti"], "proper_betti": hR.to_dict()["betti"],
            "method": method, "facets": len(K.facets()), "tree_edges": len(order) - 8,
            "is_shelling": sh.is_shelling, "fully_covered": sh.sphere_counts,
            "covered_positions": sh.covered}
    ok = (hP.concentrated_in(1, 8) and hR.concentrated_in(2, 8) and len(K.facets()) == 30
          and sh.is_shelling and sh.sphere_counts == {1: 8}
          and sh.covered == list(range(22, 30)))
    return Verdict("d30_p2", True, ok, data)


@_timed
def a5_two():
    G = alternating(5)
    R = p_power_rack(G, 2)
    st = RackStudy(R)
    K = _parabolic_complex(R, st)
    hP = betti_numbers(K)
    hInf = st.inf_homology
    chi = reduced_euler(order_complex(st.inf))
    data = {"parabolic_betti": hP.to_dict()["betti"], "inf_betti": hInf.to_dict()["betti"],
            "inf_size": len(st.inf), "chi_tilde": chi, "p_part": 4}
    ok = hP.concentrated_in(1, 40) and hInf.concentrated_in(2, 40) and chi == 40 and chi % 4 == 0
    return Verdict("a5_p2", True, ok, data)


@_timed
def decomposition_instances():
    data = {}
    ok = True
    for name in ("A4G3", "D30G2", "A5G2"):
        v = check_decomposition(instance(name))
        data[name] = {k: v.data[k] for k in ("proper", "ordinal_sum", "sphere_join", "c")}
        ok = ok and v.conclusion_holds
    return Verdict("decomposition_identity", True, ok, data)


@_timed
def oracle_equivalence(seed=0, count=25, max_size=14):
    rng = random.Random(seed)
    runs = []
    ok = True
    for _ in range(count):
        label, R = random_conjugation_rack(rng, max_size)
        fast = sorted(closed_sets(R))
        slow = brute_force_closed_sets(R)
        L = enumerate_subrack_lattice(R)
        masks = L.payloads
        lattice_ok = True
        for i, j in itertools.combinations(range(len(L)), 2):
            if masks[L.meet(i, j)] != masks[i] & masks[j] or \
                    masks[L.join(i, j)] != subrack_closure(R, masks[i] | masks[j]):
                lattice_ok = False
                break
        same = fast == sorted(slow)
        runs.append({"group": label, "size": R.size, "closed_sets": len(fast),
                     "brute_force": len(slow), "equal": same, "meet_join_ok": lattice_ok})
        ok = ok and same and lattice_ok
    return Verdict("oracle_equivalence", True, ok, {"seed": seed, "runs": runs})


def random_complex(rng, vertices=6, facets=4):
    out = []
    for _ in range(rng.randint(1, facets)):
        k = rng.randint(1, min(4, vertices))
        out.append(tuple(sorted(rng.sample(range(vertices), k))))
    return SimplicialComplex.from_facets(out)


def _closure_laws(name, R, L, rng, samples=30):
    """Extensive, monotone and idempotent, on random subsets."""
    failures = []
    n = R.size
    full = R.full_mask
    connected = is_connected(R)
    for _ in range(samples):
        A = rng.getrandbits(n) & rng.getrandbits(n)
        B = A | rng.getrandbits(n) & rng.getrandbits(n)
        cA, cB = subrack_closure(R, A), subrack_closure(R, B)
        if A & ~cA or cA & ~cB or subrack_closure(R, cA) != cA:
            failures.append([name, "closure", A, B])
        # η acts on nonempty proper subracks of connected racks
        if connected and 0 < cA and cB < full:
            eA, eB = eta_closure(R, cA), eta_closure(R, cB)
            if cA & ~eA or eA & ~eB or (eA < full and eta_closure(R, eA) != eA):
                failures.append([name, "eta", cA, cB])
    top = L.top()
    for i in range(len(L)):
        if i == top:
            continue
        e = epsilon_closure(L, i)
        if not L.leq(i, e) or epsilon_closure(L, e) != e:
            failures.append([name, "epsilon", L.payloads[i]])
        for j in L.upper_covers(i):
            if j != top and not L.leq(e, epsilon_closure(L, j)):
                failures.append([name, "epsilon-monotone", L.payloads[i], L.payloads[j]])
    return failures


@_timed
def property_suites(seed=0, random_racks=6):
    rng = random.Random(seed)
    racks = [(name, instance(name)) for name in INSTANCES]
    for _ in range(random_racks):
        racks.append(random_conjugation_rack(rng, 10))
    per_rack = []
    failures = []
    for name, R in racks:
        st = RackStudy(R)
        L = st.lattice
        failures += _closure_laws(name, R, L, rng)
        h_proper, method = st.proper_homology
        h_inf = st.inf_homology
        atoms = st.proper.minimal()
        h_cross = betti_numbers(crosscut_complex(st.proper, atoms))
        inf_hat = add_bounds(st.inf)
        row = {"rack": name, "size": R.size, "lattice": len(L), "inf": len(st.inf),
               "proper_betti": h_proper.to_dict()["betti"],
               "inf_equal": h_proper.signature() == h_inf.signature(),
               "crosscut_equal": h_proper.signature() == h_cross.signature(),
               "lattice_atomic": is_atomic(L),
               "inf_atomic": is_atomic(inf_hat), "inf_coatomic": is_coatomic(inf_hat)}
        per_rack.append(row)
    joins = []
    for _ in range(20):
        A, B = random_complex(rng), random_complex(rng)
        a, b, j = reduced_euler(A), reduced_euler(B), reduced_euler(join_complex(A, B))
        joins.append({"A": a, "B": b, "join": j, "ok": j == -a * b})
    ok = (not failures and all(r["inf_equal"] and r["crosscut_equal"] and r["lattice_atomic"]
                               and r["inf_atomic"] and r["inf_coatomic"] for r in per_rack)
          and all(x["ok"] for x in joins))
    return Verdict("property_suites", True, ok,
                   {"seed": seed, "racks": per_rack, "closure_failures": failures[:10],
                    "join_euler": joins})


@_timed
def transposition_pi_ipi():
    v = check_pi_ipi(transposition_rack(4))
    return Verdict("pi_ipi_T", v.hypotheses_hold, v.conclusion_holds, v.data)


@_timed
def six_point_chain_checks():
    inst = six_point_chains()
    R = inst["rack"]
    results = []
    ok = inst["H_order"] == 12 and inst["K_order"] == 60 and R.size == 40
    for chain, want in zip(inst["full_chains"], (3, 3)):
        v = maximal_chain_check(R, chain, "full")
        results.append({"within": "full", "length": v.data["length"], "expected": want,
                        "passed": v.passed})
        ok = ok and v.passed and v.data["length"] == want
    for chain, want in zip(inst["inf_chains"], (1, 2)):
        v = maximal_chain_check(R, chain, "inf")
        results.append({"within": "inf", "length": v.data["length"], "expected": want,
                        "passed": v.passed})
        ok = ok and v.passed and v.data["length"] == want
    return Verdict("a6_chains", True, ok, {"H_order": inst["H_order"],
                                          "K_order": inst["K_order"], "chains": results})


@_timed
def euler_instances():
    data = {}
    ok = True
    for name, G, p in (("A4", alternating(4), 3), ("D30", dihedral(30), 2),
                       ("A5", alternating(5), 2)):
        v = check_euler(G, p)
        data[name] = v.data
        ok = ok and v.conclusion_holds
    return Verdict("euler_divisibility", True, ok, data)


SUITE = (
    ("1_partition_lattice", partition_lattice_isomorphism),
    ("2_group_rack_spheres", group_rack_spheres),
    ("3_a4_p3", a4_three),
    ("4_d30_p2", d30_two),
    ("5_a5_p2", a5_two),
    ("6_decomposition", decomposition_instances),
    ("7_oracle_equivalence", oracle_equivalence),
    ("8_property_suites", property_suites),
    ("9_pi_ipi", transposition_pi_ipi),
    ("10_a6_chains", six_point_chain_checks),
    ("euler", euler_instances),
)


def run_suite(seed=0, only=None):
    """Run every suite check (or those named in ``only``); returns ``[(name, verdict)]``."""
    out = []
    for name, fn in SUITE:
        if only and name not in only:
            continue
        kwargs = {"seed": seed} if fn in (oracle_equivalence, property_suites) else {}
        out.append((name, fn(**kwargs)))
    return out


__all__ = ["instance", "INSTANCES", "six_point_chains", "random_conjugation_rack", "SUITE",
           "run_suite"]
