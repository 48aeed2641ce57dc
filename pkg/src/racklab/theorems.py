"""Checkers that combine the lower layers into verdicts about racks and groups.

Each checker returns a :class:`Verdict`; every number that decides the
verdict is kept in ``data`` so the outcome can be re-derived from the JSON.
"""

from dataclasses import dataclass, field

from .bits import iter_bits, popcount, to_indices
from .config import DEFAULT_PRIMES
from .errors import CapExceededError, HypothesisError, MalformedInputError, NotClosedError
from .groups import (all_p_subgroups, center, conjugacy_classes, is_normal, p_core, p_part,
                     p_power_elements, sylow_p_subgroups)
from .isomorphism import is_order_preserving, poset_isomorphism
from .lattice import (DEFAULT_NODE_CAP, coatoms_above, enumerate_subrack_lattice, epsilon_subrack,
                      inf_closure_ids, is_maximal_subrack, purity_and_rank)
from .partitions import iota_map, node_action, orb_poset, orbits_of_action, pi_map
from .poset import boolean_proper_part, direct_product, ordinal_sum, proper_part
from .racks import (conjugation_rack, eta_closure, inner_orbits, is_connected, orbit_structure,
                    p_power_rack, rack_mask, subrack_closure, trivial_rack)
from .topology import (DEFAULT_FACE_CAP, DEFAULT_SNF_THRESHOLD, betti_numbers, join_complex,
                       order_complex, reduced_euler, sphere)


@dataclass
class Verdict:
    claim_id: str
    hypotheses_hold: bool
    conclusion_holds: bool
    data: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.hypotheses_hold and self.conclusion_holds

    def to_dict(self):
        return {"claim_id": self.claim_id, "hypotheses_hold": self.hypotheses_hold,
                "conclusion_holds": self.conclusion_holds, "data": jsonable(self.data)}


def jsonable(x):
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if hasattr(x, "to_dict"):
        return jsonable(x.to_dict())
    return str(x)


def betti_dict(report):
    """Nonzero reduced Betti numbers keyed by dimension (torsion listed separately)."""
    out = {"betti": {d: b for d, b in sorted(report.nonzero().items())}}
    if any(report.torsion.values()):
        out["torsion"] = {d: t for d, t in report.torsion.items() if t}
    return out


# -- shared per-rack computations -------------------------------------------------------


class RackStudy:
    """Lazily computed lattice data for one rack, shared between checkers."""

    def __init__(self, R, node_cap=DEFAULT_NODE_CAP, face_cap=DEFAULT_FACE_CAP,
                 snf_threshold=DEFAULT_SNF_THRESHOLD, primes=DEFAULT_PRIMES):
        self.R = R
        self.node_cap = node_cap
        self.face_cap = face_cap
        self.snf_threshold = snf_threshold
        self.primes = primes
        self._cache = {}

    def _get(self, key, make):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    @property
    def lattice(self):
        return self._get("lattice", lambda: enumerate_subrack_lattice(self.R, self.node_cap))

    @property
    def proper(self):
        return self._get("proper", lambda: proper_part(self.lattice))

    @property
    def inf_ids(self):
        L = self.lattice
        b, t = L.bottom(), L.top()
        return self._get("inf_ids", lambda: [i for i in inf_closure_ids(L, L.coatoms())
                                              if i not in (b, t)])

    @property
    def inf(self):
        return self._get("inf", lambda: self.lattice.subposet(self.inf_ids))

    @property
    def orbits(self):
        return self._get("orbits", lambda: list(inner_orbits(self.R).blocks))

    def homology_of(self, P):
        return betti_numbers(order_complex(P, self.face_cap), self.snf_threshold, self.primes)

    @property
    def proper_homology(self):
        """Homology of Δ(R̄): direct when within the face cap, otherwise via Inf."""
        def make():
            try:
                return self.homology_of(self.proper), "direct"
            except CapExceededError:
                return self.homology_of(self.inf), "inf-reduction"
        return self._get("proper_homology", make)

    @property
    def inf_homology(self):
        return self._get("inf_homology", lambda: self.homology_of(self.inf))

    @property
    def coatom_meet_is_bottom(self):
        """Whether some meet of coatoms is 0̂, i.e. whether keeping 0̂ in Inf would matter."""
        def make():
            L = self.lattice
            co = L.coatoms()
            return bool(co) and L.meet_all(co) == L.bottom()
        return self._get("coatom_meet_is_bottom", make)

    @property
    def proper_euler(self):
        def make():
            try:
                return reduced_euler(order_complex(self.proper, self.face_cap))
            except CapExceededError:
                return reduced_euler(order_complex(self.inf, self.face_cap))
        return self._get("proper_euler", make)


def _study(R, study=None):
    return study if study is not None else RackStudy(R)


# -- spherical and parabolic subracks -------------------------------------------------


@dataclass
class SphericalParabolic:
    spherical: list
    parabolic: list
    c: int
    k: int
    spherical_via_coatoms: list = None

    def to_dict(self):
        return {"spherical": self.spherical, "parabolic": self.parabolic, "c": self.c,
                "k": self.k, "spherical_via_coatoms": self.spherical_via_coatoms}


def is_union_of_blocks(mask, blocks):
    return all(mask & b in (0, b) for b in blocks)


def spherical_and_parabolic(R, L=None, study=None):
    """Spherical and parabolic Inf elements, as node ids of the subrack lattice.

    Spherical elements are taken straight from the definition (Inf elements that
    are unions of Inn-orbits).  ``spherical_via_coatoms`` holds the meets of the
    coatoms that are unions of all but one orbit, for comparison.
    """
    st = _study(R, study)
    if L is not None:
        st._cache["lattice"] = L
    L = st.lattice
    orbits = st.orbits
    full = R.full_mask
    inf_ids = st.inf_ids
    spherical = [i for i in inf_ids if is_union_of_blocks(L.payloads[i], orbits)]
    parabolic = [i for i in inf_ids
                 if all(L.payloads[i] & L.payloads[s] for s in spherical)]
    if set(spherical) & set(parabolic):
        from .errors import InvariantViolation
        raise InvariantViolation("a subrack is both spherical and parabolic")
    big = [c for c in L.coatoms()
           if any(L.payloads[c] == full & ~b for b in orbits)]
    via = [i for i in inf_closure_ids(L, big) if i not in (L.bottom(), L.top())] if big else []
    P = L.subposet(parabolic)
    return SphericalParabolic(spherical, parabolic, len(orbits), len(P.minimal()), via)


def generated_subgroup_class_count(R):
    """Number of orbits on X of ⟨X⟩ acting by conjugation, computed inside the group."""
    G = R.provenance["group"]
    elements = R.provenance["elements"]
    X = sum(1 << g for g in elements)
    H = to_indices(G.generated(X))
    seen = 0
    count = 0
    for g in elements:
        if seen >> g & 1:
            continue
        count += 1
        for h in H:
            seen |= 1 << G.conj(h, g)
    return count


# -- sphere theorems -------------------------------------------------------------------------


def check_sphere_theorems(R, study=None):
    st = _study(R, study)
    L = st.lattice
    coatoms = [L.payloads[c] for c in L.coatoms()]
    nonempty = len(st.proper) > 0
    stable = all(R.image(a, M) == M for M in coatoms for a in range(R.size))
    m = len(st.orbits)
    hom, method = st.proper_homology
    data = {"orbits": m, "maximal_subracks": len(coatoms), "every_maximal_stable": stable,
            "proper_part_nonempty": nonempty, "homology": betti_dict(hom), "method": method,
            "expected_sphere_dim": m - 2}
    if R.provenance.get("kind") == "group":
        data["class_count"] = len(conjugacy_classes(R.provenance["group"]))
    hyp = nonempty and stable
    return Verdict("sphere", hyp, hom.concentrated_in(m - 2, 1), data)


# -- decomposition (ordinal sum, Theorem on p-power racks, Sylow corollary) -------------------


def check_decomposition(R, study=None):
    st = _study(R, study)
    L = st.lattice
    sp = spherical_and_parabolic(R, study=st)
    S = L.subposet(sp.spherical)
    P = L.subposet(sp.parabolic)
    h_proper, method = st.proper_homology
    h_sum = betti_numbers(order_complex(ordinal_sum(S, P), st.face_cap))
    h_join = betti_numbers(join_complex(sphere(sp.c - 2), order_complex(P, st.face_cap)))
    h_parabolic = betti_numbers(order_complex(P, st.face_cap))
    sig = h_proper.signature()
    data = {
        "c": sp.c, "k_minimal_parabolic": sp.k,
        "spherical_count": len(sp.spherical), "parabolic_count": len(sp.parabolic),
        "spherical_via_coatoms_count": len(sp.spherical_via_coatoms),
        "spherical_definitions_agree": sorted(sp.spherical) == sorted(sp.spherical_via_coatoms),
        "spherical_is_boolean": poset_isomorphism(S, boolean_proper_part(sp.c)) is not None,
        "proper": betti_dict(h_proper), "proper_method": method,
        "ordinal_sum": betti_dict(h_sum), "sphere_join": betti_dict(h_join),
        "parabolic": betti_dict(h_parabolic),
        "inf_convention_sensitive": st.coatom_meet_is_bottom,
    }
    ok = sig == h_sum.signature() == h_join.signature()
    prov = R.provenance
    if prov.get("kind") == "ppower":
        G, p = prov["group"], prov["p"]
        data["c_from_group"] = generated_subgroup_class_count(R)
        ok = ok and data["c_from_group"] == sp.c
        sylows = [rack_mask(R, s) for s in sylow_p_subgroups(G, p)]
        k = len(sylows)
        data["sylow_count"] = k
        only_sylows = sorted(L.payloads[i] for i in sp.parabolic) == sorted(sylows)
        data["parabolics_are_sylows"] = only_sylows
        if only_sylows and k > 1:
            data["corollary_expected"] = {"dim": sp.c - 1, "rank": k - 1}
            ok = ok and h_proper.concentrated_in(sp.c - 1, k - 1)
    return Verdict("decomposition", True, ok, data)


# -- Euler characteristic modulo |G|_p ----------------------------------------------------------


def p_core_oracle(G, p):
    """Largest normal p-subgroup by scanning every p-subgroup."""
    normal = [H for H in all_p_subgroups(G, p) if is_normal(G, H)]
    return max(normal, key=popcount)


def _unique_minimum(masks):
    masks = list(masks)
    for m in masks:
        if all(m & ~o == 0 for o in masks):
            return m
    return None


def check_euler(G, p, study=None):
    if G.order % p:
        raise HypothesisError(f"{p} does not divide |G| = {G.order}")
    R = p_power_rack(G, p)
    st = study if study is not None else RackStudy(R)
    L = st.lattice
    sp = spherical_and_parabolic(R, study=st)
    parabolic = [L.payloads[i] for i in sp.parabolic]
    chi = st.proper_euler
    order_p = p_part(G.order, p)
    core = p_core(G, p)
    oracle = p_core_oracle(G, p)
    gp = p_power_elements(G, p)
    core_is_gp = core == gp

    def hypothesis_for(J):
        return _unique_minimum(S for S in parabolic if rack_mask(R, J) & ~S == 0) is not None

    failures = []
    if parabolic:
        for J in all_p_subgroups(G, p, nontrivial_only=True):
            if not hypothesis_for(J):
                failures.append(to_indices(J))
                if len(failures) >= 5:
                    break
    trivial_ok = hypothesis_for(1) if parabolic else None
    hyp = not failures
    divisible = chi % order_p == 0
    data = {"chi_tilde": chi, "p_part": order_p, "divisible": divisible,
            "p_core_order": popcount(core), "p_core_matches_oracle": core == oracle,
            "p_core_is_G_p": core_is_gp, "parabolic_count": len(parabolic),
            "hypothesis_failures": failures, "hypothesis_vacuous": not parabolic,
            "hypothesis_with_trivial_J": trivial_ok}
    return Verdict("euler", hyp, divisible == (not core_is_gp) and core == oracle, data)


# -- orbit structures, π and ι ---------------------------------------------------------------


def pi_partition_meets(partitions):
    """All meets (common refinements) of nonempty subsets of ``partitions``."""
    found = set(partitions)
    frontier = list(found)
    while frontier:
        x = frontier.pop()
        for y in list(found):
            m = x.meet(y)
            if m not in found:
                found.add(m)
                frontier.append(m)
    return found


def check_pi_ipi(R, study=None):
    if not is_connected(R):
        raise HypothesisError("π and ι are compared only for connected racks")
    st = _study(R, study)
    L = st.lattice
    I = st.inf
    masks = I.payloads
    data = {"inf_size": len(I)}
    if len(I) == 0:
        return Verdict("pi_ipi", True, True, dict(data, trivial=True))
    # (a) Inf lies inside the η-closed subracks
    eta_fixed = [i for i in range(len(L)) if 0 < L.payloads[i] < R.full_mask
                 and eta_closure(R, L.payloads[i]) == L.payloads[i]]
    inf_eta = all(eta_closure(R, S) == S for S in masks)
    data["inf_is_eta_closed"] = inf_eta
    data["eta_closed_count"] = len(eta_fixed)
    data["inf_strictly_inside_eta"] = inf_eta and len(eta_fixed) > len(I)
    # (b) π restricted to Inf is an isomorphism onto its image
    image, f = pi_map(R, I)
    data["pi_injective"] = len(set(f)) == len(f)
    iso = poset_isomorphism(I, image)
    data["pi_image_isomorphic"] = iso is not None and len(set(f)) == len(f) and \
        is_order_preserving(I, image, f)
    # (c) S -> meet of orbit structures of the maximal subracks above S
    coatoms = [L.payloads[c] for c in L.coatoms()]
    mpart = {M: orbit_structure(R, M) for M in coatoms}
    target = pi_partition_meets(mpart.values())
    g = []
    for S in masks:
        part = None
        for M in coatoms:
            if S & ~M == 0:
                part = mpart[M] if part is None else part.meet(mpart[M])
        g.append(part)
    g_injective = len(set(g)) == len(g)
    g_monotone = all(g[i].refines(g[j]) for i in range(len(I)) for j in iter_bits(I.up[i]))
    data["meet_map_injective"] = g_injective
    data["meet_map_order_preserving"] = g_monotone
    data["meet_map_lands_in_target"] = all(x in target for x in g)
    # (d) ι∘π and ω∘π, transitivity per block-size class
    iota_int, fi = iota_map(image, "integer")
    iota_img, _ = iota_map(image, "image")
    fi_pi = [fi[f[i]] for i in range(len(I))]
    data["iota_pi_order_preserving"] = is_order_preserving(I, iota_int, fi_pi)
    maps = node_action(image, [list(row) for row in R.table])
    orb, omega = orb_poset(image, maps)
    data["omega_pi_order_preserving"] = is_order_preserving(I, orb, [omega[f[i]] for i in range(len(I))])
    orbits = orbits_of_action(len(image), maps)
    classes = {}
    for node in range(len(image)):
        classes.setdefault(fi[node], set()).add(node)
    transitive = all(any(set(o) == cls for o in orbits) for cls in classes.values())
    iso_int = poset_isomorphism(orb, iota_int) is not None
    iso_img = poset_isomorphism(orb, iota_img) is not None
    data.update({"transitive_on_every_class": transitive, "orb_size": len(orb),
                 "iota_image_size": len(iota_int), "orb_isomorphic_to_iota_image": iso_int,
                 "orb_isomorphic_to_generated_iota_order": iso_img,
                 "ipi_criterion_consistent": transitive == iso_int})
    ok = (inf_eta and data["pi_image_isomorphic"] and g_injective and g_monotone
          and data["meet_map_lands_in_target"] and data["iota_pi_order_preserving"]
          and data["omega_pi_order_preserving"] and data["ipi_criterion_consistent"])
    return Verdict("pi_ipi", True, ok, data)


# -- central elements: direct product decomposition ---------------------------------------------


def check_product(G, X, node_cap=DEFAULT_NODE_CAP):
    """Direct product decomposition of R(X) along the central part Z = X ∩ Z(G)."""
    Z = X & center(G)
    rest = X & ~Z
    data = {"z_size": popcount(Z), "rest_size": popcount(rest)}
    if not Z or not rest:
        return Verdict("product", False, False, data)
    RX = conjugation_rack(G, X)
    RR = conjugation_rack(G, rest)
    RZ = trivial_rack(popcount(Z))
    LX = enumerate_subrack_lattice(RX, node_cap)
    LR = enumerate_subrack_lattice(RR, node_cap)
    LZ = enumerate_subrack_lattice(RZ, node_cap)
    prod = direct_product(LR, LZ)
    iso = poset_isomorphism(LX, prod) is not None
    chi_x = reduced_euler(order_complex(proper_part(LX)))
    chi_r = reduced_euler(order_complex(proper_part(LR)))
    z = popcount(Z)
    sign_ok = chi_x == (-1) ** z * chi_r
    hx = betti_numbers(order_complex(proper_part(LX)))
    inf_r = RackStudy(RR)
    inf_r._cache["lattice"] = LR
    hj = betti_numbers(join_complex(order_complex(inf_r.inf), sphere(z - 1)))
    data.update({"isomorphic_to_product": iso, "chi_X": chi_x, "chi_rest": chi_r,
                 "sign_identity": sign_ok, "proper": betti_dict(hx), "join": betti_dict(hj),
                 "join_matches": hx.signature() == hj.signature()})
    return Verdict("product", True, iso and sign_ok and data["join_matches"], data)


# -- nilpotent class lattices ------------------------------------------------------------------


def _components(P):
    n = len(P)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in iter_bits(P.up[x] | P.down[x]):
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def layer_report(L, rank, p, t):
    """Check every rank layer against p^(t-k) disjoint copies of the proper part of B_p."""
    Bp = boolean_proper_part(p)
    layers = []
    ok = True
    for k in range(1, t + 1):
        lo, hi = (p - 1) * (k - 1) + 1, (p - 1) * k
        layer = L.subposet([i for i in range(len(L)) if lo <= rank[i] <= hi])
        comps = _components(layer)
        copies = all(poset_isomorphism(layer.subposet(c), Bp) is not None for c in comps)
        good = copies and len(comps) == p ** (t - k)
        ok = ok and good
        layers.append({"k": k, "ranks": [lo, hi], "size": len(layer), "components": len(comps),
                       "expected_components": p ** (t - k), "components_are_Bp": copies})
    return ok, layers


def check_nilpotent_class(L, p, t=None):
    """Purity, length (p-1)t+1 and the layer structure of a class lattice.

    ``t`` may be None, in which case the fitting values are searched and
    reported; the verdict then records whether any t fits.
    """
    pr = purity_and_rank(L)
    data = {"pure": pr.is_pure, "length": pr.length}
    if not pr.is_pure:
        data["witness_chains"] = [[L.describe(i) for i in chain] for chain in pr.witnesses]
        return Verdict("nilpotent_class", True, False, data)
    fitting = []
    for cand in range(1, pr.length + 1):
        if (p - 1) * cand + 1 == pr.length and layer_report(L, pr.rank, p, cand)[0]:
            fitting.append(cand)
    data["fitting_t"] = fitting
    if t is None:
        return Verdict("nilpotent_class", True, bool(fitting), data)
    ok, layers = layer_report(L, pr.rank, p, t)
    data.update({"t": t, "expected_length": (p - 1) * t + 1, "layers": layers})
    return Verdict("nilpotent_class", True, ok and pr.length == (p - 1) * t + 1, data)


# -- explicit maximal chains --------------------------------------------------------------------


def _inf_between(coatoms, lower, upper):
    """Meets of sets of ``coatoms`` containing ``lower`` that lie strictly between."""
    above = [M for M in coatoms if lower & ~M == 0]
    meets = set(above)
    frontier = list(meets)
    while frontier:
        x = frontier.pop()
        for y in list(meets):
            m = x & y
            if m not in meets:
                meets.add(m)
                frontier.append(m)
    return sorted(m for m in meets if lower & ~m == 0 and m & ~upper == 0 and m not in (lower, upper))


def maximal_chain_check(R, chain, within="full", coatoms=None, node_cap=DEFAULT_NODE_CAP):
    """Verify that ``chain`` (subrack masks) is a maximal chain of R̄ or of Inf.

    For ``within="inf"`` the coatoms (maximal subracks) containing the chain's
    bottom may be supplied; otherwise they are found by enumerating the
    interval above the bottom, up to ``node_cap`` subracks.
    """
    if within not in ("full", "inf"):
        raise MalformedInputError("within must be 'full' or 'inf'")
    chain = list(chain)
    if not chain:
        raise MalformedInputError("chain is empty")
    for S in chain:
        if subrack_closure(R, S) != S:
            raise NotClosedError("chain element is not a subrack", element=to_indices(S))
    full = R.full_mask
    data = {"within": within, "length": len(chain) - 1,
            "elements": [[R.labels[i] for i in iter_bits(S)] for S in chain]}
    increasing = all(a != b and a & ~b == 0 for a, b in zip(chain, chain[1:]))
    proper = all(0 < S < full or (0 < S and S != full) for S in chain)
    data["strictly_increasing"] = increasing
    data["proper"] = proper
    failures = []
    if within == "full":
        for k, (a, b) in enumerate(zip(chain, chain[1:])):
            for x in iter_bits(b & ~a):
                mid = subrack_closure(R, a | 1 << x)
                if mid != b:
                    failures.append({"step": k, "intermediate": to_indices(mid)})
                    break
        bottom_min = all(subrack_closure(R, 1 << x) == chain[0] for x in iter_bits(chain[0]))
        top_max = is_maximal_subrack(R, chain[-1])
    else:
        cs = coatoms if coatoms is not None else coatoms_above(R, chain[0], node_cap)
        cs = sorted(set(cs))
        bad = [to_indices(M) for M in cs if not is_maximal_subrack(R, M)]
        data["supplied_coatoms"] = len(cs)
        data["non_maximal_coatoms"] = bad
        in_inf = []
        for S in chain:
            above = [M for M in cs if S & ~M == 0]
            meet = full
            for M in above:
                meet &= M
            in_inf.append(bool(above) and meet == S)
        data["elements_in_inf"] = in_inf
        for k, (a, b) in enumerate(zip(chain, chain[1:])):
            between = _inf_between(cs, a, b)
            if between:
                failures.append({"step": k, "intermediate": to_indices(between[0])})
        bottom_min = True
        for x in iter_bits(chain[0]):
            above_x = coatoms_above(R, 1 << x, node_cap) if coatoms is None else \
                [M for M in cs if M >> x & 1]
            if epsilon_subrack(R, 1 << x, above_x) != chain[0]:
                bottom_min = False
                break
        top_max = chain[-1] in cs
        if bad or not all(in_inf):
            data.update({"saturation_failures": failures, "bottom_minimal": bottom_min,
                         "top_maximal": top_max})
            return Verdict("maximal_chain", False, False, data)
    data.update({"saturation_failures": failures, "bottom_minimal": bottom_min,
                 "top_maximal": top_max})
    ok = increasing and proper and not failures and bottom_min and top_max
    return Verdict("maximal_chain", True, ok, data)


def inf_purity_probe(R, study=None):
    """Look for a non-pure Inf whose homology sits only in the top dimension of Δ(Inf).

    This is a search aid rather than a theorem: the verdict always holds, and
    ``data["candidate"]`` flags racks worth a closer look.
    """
    st = _study(R, study)
    pr = purity_and_rank(st.inf)
    h = st.inf_homology
    top = pr.length
    concentrated = bool(h.nonzero()) and h.concentrated_in(top)
    data = {"inf_size": len(st.inf), "inf_pure": pr.is_pure, "inf_length": top,
            "inf_homology": betti_dict(h), "top_dimension_only": concentrated,
            "candidate": (not pr.is_pure) and concentrated,
            "inf_convention_sensitive": st.coatom_meet_is_bottom}
    if pr.witnesses:
        inf = st.inf
        data["chain_witnesses"] = [[inf.describe(i) for i in c] for c in pr.witnesses]
    return Verdict("inf_purity", True, True, data)


__all__ = [
    "Verdict", "RackStudy", "SphericalParabolic", "spherical_and_parabolic",
    "check_sphere_theorems", "check_decomposition", "check_euler", "check_pi_ipi",
    "check_product", "check_nilpotent_class", "maximal_chain_check", "jsonable",
    "p_core_oracle", "inf_purity_probe", "generated_subgroup_class_count", "layer_report",
]
