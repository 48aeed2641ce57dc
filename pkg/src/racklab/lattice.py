"""Subrack lattices and general lattice machinery.

Closed sets are enumerated with Ganter's Next-Closure in lectic order over
the canonical element order; the all-subsets scan is kept only as an oracle.
"""

from dataclasses import dataclass

from .bits import iter_bits, popcount, to_indices
from .errors import CapExceededError, MalformedInputError, NotALatticeError
from .poset import Poset
from .racks import subrack_closure

DEFAULT_NODE_CAP = 200000
MAX_RACK_SIZE = 128


def next_closure(closure, ground, cap=None):
    """Yield every closed set of ``closure`` inside ``ground``, in lectic order.

    ``closure`` must map subsets of ``ground`` to subsets of ``ground``.
    """
    positions = sorted(iter_bits(ground), reverse=True)
    A = closure(0)
    count = 1
    yield A
    while A != ground:
        for i in positions:
            bit = 1 << i
            if A & bit:
                continue
            low = bit - 1
            B = closure((A & low) | bit)
            if (B & ~A) & low == 0:
                A = B
                break
        else:  # pragma: no cover - the full ground set is always reachable
            return
        count += 1
        if cap is not None and count > cap:
            raise CapExceededError(f"closed-set enumeration exceeded the node cap of {cap}", cap=cap)
        yield A


def closed_sets(R, lower=0, within=None, cap=DEFAULT_NODE_CAP):
    """Subracks ``S`` with ``lower ⊆ S ⊆ within`` (``within`` must itself be a subrack)."""
    within = R.full_mask if within is None else within
    lower = subrack_closure(R, lower)
    if lower & ~within:
        return []
    out = []
    try:
        for A in next_closure(lambda X: subrack_closure(R, X | lower), within & ~lower | lower, cap):
            out.append(A)
    except CapExceededError as exc:
        exc.partial = out
        raise
    return out


def brute_force_closed_sets(R):
    """Oracle: test every subset for closure (feasible for |X| up to about 20)."""
    from .racks import is_closed

    return [S for S in range(1 << R.size) if is_closed(R, S)]


def subset_poset(masks, n, formatter=None):
    """Inclusion order on distinct bitmasks over an n-element ground set."""
    masks = list(masks)
    everything = (1 << len(masks)) - 1
    containing = [0] * n
    for k, m in enumerate(masks):
        for x in iter_bits(m):
            containing[x] |= 1 << k
    up = []
    for m in masks:
        u = everything
        for x in iter_bits(m):
            u &= containing[x]
        up.append(u)
    return Poset(masks, up, formatter=formatter, validate=len(masks) <= 512)


def lattice_order_key(mask):
    return (popcount(mask), mask)


def subset_formatter(R):
    labels = R.labels
    return lambda mask: [labels[i] for i in iter_bits(mask)]


def enumerate_subrack_lattice(R, cap=DEFAULT_NODE_CAP):
    """The full lattice of subracks, bottom ∅ and top X.

    Node ids follow (size, bit pattern), which is a linear extension.
    """
    if R.size > MAX_RACK_SIZE:
        raise MalformedInputError(f"rack has {R.size} elements; the limit is {MAX_RACK_SIZE}")
    masks = sorted(closed_sets(R, cap=cap), key=lattice_order_key)
    L = subset_poset(masks, R.size, formatter=subset_formatter(R))
    L.rack = R
    return L


def lattice_meet(S, T):
    return S & T


def lattice_join(R, S, T):
    return subrack_closure(R, S | T)


# -- Inf posets and ε ---------------------------------------------------------


def _require_bounded(L):
    b, t = L.bottom(), L.top()
    if b is None or t is None:
        raise NotALatticeError("expected a bounded lattice")
    return b, t


def inf_closure_ids(L, generators):
    """Ids of all meets of nonempty subsets of ``generators`` (as a sorted list)."""
    found = set(generators)
    frontier = list(found)
    while frontier:
        x = frontier.pop()
        for y in list(found):
            m = L.meet(x, y)
            if m not in found:
                found.add(m)
                frontier.append(m)
    return sorted(found)


def inf_poset(L, generators=None):
    """Elements of the proper part that are meets of nonempty subsets of ``generators``.

    ``generators`` defaults to the coatoms.  Meets equal to the bottom or top are
    dropped.
    """
    b, t = _require_bounded(L)
    gens = L.coatoms() if generators is None else list(generators)
    if any(g in (b, t) for g in gens):
        raise MalformedInputError("generators must lie in the proper part")
    ids = [i for i in inf_closure_ids(L, gens) if i not in (b, t)]
    return L.subposet(ids)


def epsilon_closure(L, x):
    """Meet of the coatoms above ``x``."""
    _, t = _require_bounded(L)
    above = [c for c in L.coatoms() if L.leq(x, c)]
    if not above or x == t:
        raise MalformedInputError("no coatom lies above the top element")
    return L.meet_all(above)


def is_atomic(L):
    b, _ = _require_bounded(L)
    atoms = L.atoms()
    for x in range(len(L)):
        if x == b:
            continue
        below = [a for a in atoms if L.leq(a, x)]
        if not below:
            return False
        j = below[0]
        for a in below[1:]:
            j = L.join(j, a)
        if j != x:
            return False
    return True


def is_coatomic(L):
    _, t = _require_bounded(L)
    coatoms = L.coatoms()
    for x in range(len(L)):
        if x == t:
            continue
        above = [c for c in coatoms if L.leq(x, c)]
        if not above or L.meet_all(above) != x:
            return False
    return True


# -- purity ------------------------------------------------------------------------


@dataclass
class PurityReport:
    is_pure: bool
    length: int
    rank: list = None
    witnesses: tuple = None


def maximal_chain_lengths(P):
    """(shortest, longest) maximal-chain length through each node's up-paths."""
    n = len(P)
    lo = [0] * n
    hi = [0] * n
    for i in reversed(P.topological_order()):
        ups = P.upper_covers(i)
        if ups:
            lo[i] = 1 + min(lo[j] for j in ups)
            hi[i] = 1 + max(hi[j] for j in ups)
    return lo, hi


def _walk(P, start, table, pick):
    chain = [start]
    x = start
    while P.upper_covers(x):
        x = pick(P.upper_covers(x), key=lambda j: table[j])
        chain.append(x)
    return chain


def purity_and_rank(P):
    """Whether all maximal chains have one length; the rank function if so."""
    if len(P) == 0:
        return PurityReport(True, -1, [])
    lo, hi = maximal_chain_lengths(P)
    mins = P.minimal()
    lengths = {lo[m] for m in mins} | {hi[m] for m in mins}
    if len(lengths) == 1:
        return PurityReport(True, lengths.pop(), P.heights())
    short_start = min(mins, key=lambda m: (lo[m], m))
    long_start = max(mins, key=lambda m: (hi[m], -m))
    short = _walk(P, short_start, lo, min)
    long_ = _walk(P, long_start, hi, max)
    return PurityReport(False, max(hi[m] for m in mins), None, (short, long_))


# -- maximal subracks ------------------------------------------------------------------


def is_maximal_subrack(R, S):
    """``S`` is a proper subrack and adding any outside element generates everything."""
    full = R.full_mask
    if S == full or subrack_closure(R, S) != S:
        return False
    return all(subrack_closure(R, S | 1 << x) == full for x in iter_bits(full & ~S))


def coatoms_above(R, S, cap=DEFAULT_NODE_CAP):
    """All maximal subracks containing ``S``, by enumerating the interval above it."""
    full = R.full_mask
    return sorted(
        (T for T in closed_sets(R, lower=S, cap=cap) if T != full and is_maximal_subrack(R, T)),
        key=lattice_order_key,
    )


def maximal_subracks(R, cap=DEFAULT_NODE_CAP):
    return coatoms_above(R, 0, cap)


def epsilon_subrack(R, S, coatoms=None, cap=DEFAULT_NODE_CAP):
    """ε on subracks directly: the intersection of the maximal subracks above ``S``."""
    coatoms = coatoms_above(R, S, cap) if coatoms is None else [
        M for M in coatoms if S & ~M == 0]
    if not coatoms:
        return R.full_mask
    out = R.full_mask
    for M in coatoms:
        out &= M
    return out


__all__ = [
    "next_closure", "closed_sets", "brute_force_closed_sets", "subset_poset",
    "enumerate_subrack_lattice", "inf_poset", "epsilon_closure", "purity_and_rank",
    "is_atomic", "is_coatomic", "coatoms_above", "maximal_subracks", "is_maximal_subrack",
    "epsilon_subrack", "to_indices",
]
