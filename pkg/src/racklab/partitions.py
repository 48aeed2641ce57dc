"""Partition lattices, integer-partition lattices, and the maps π, ι, ω."""

from .bits import iter_bits
from .errors import HypothesisError, MalformedInputError
from .poset import Poset
from .racks import is_connected, orbit_structure
from .setpartition import IntPartition, SetPartition

MAX_FULL_N = 10


def set_partitions(n):
    """All partitions of {0..n-1} via restricted growth strings, in a fixed order."""
    if n == 0:
        yield SetPartition(0, ())
        return
    labels = [0] * n

    def rec(i, k):
        if i == n:
            yield SetPartition.from_labels(labels)
            return
        for b in range(k + 1):
            labels[i] = b
            yield from rec(i + 1, max(k, b + 1))

    yield from rec(1, 1)


def integer_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def _rank_key(P):
    return (-len(P.blocks), P.blocks)


def refinement_poset(partitions):
    """Partitions (of one n) ordered by refinement: finer is lower."""
    parts = sorted(set(partitions), key=_rank_key)
    where = [p.block_of() for p in parts]
    up = []
    for a, p in enumerate(parts):
        u = 0
        for b, q in enumerate(parts):
            if len(q.blocks) <= len(p.blocks) and all(
                    len({where[b][i] for i in iter_bits(blk)}) == 1 for blk in p.blocks):
                u |= 1 << b
        up.append(u)
    return Poset(parts, up, formatter=str, validate=len(parts) <= 512)


def _full_partition_lattice(n):
    parts = sorted(set_partitions(n), key=_rank_key)
    index = {p: k for k, p in enumerate(parts)}
    covers = []
    for k, p in enumerate(parts):
        bl = p.blocks
        for i in range(len(bl)):
            for j in range(i + 1, len(bl)):
                merged = [b for t, b in enumerate(bl) if t not in (i, j)] + [bl[i] | bl[j]]
                covers.append((k, index[SetPartition.from_blocks(n, merged)]))
    return Poset.from_covers(parts, covers, formatter=str, validate=len(parts) <= 512)


def is_k_equal(P, k):
    return all(len(b) == 1 or len(b) >= k for b in P.as_lists())


def is_k_equal_m(P, k, m):
    if not is_k_equal(P, k):
        return False
    if all(len(b) == 1 for b in P.as_lists()):
        return True
    return sum(len(b) for b in P.as_lists() if len(b) > 1) >= m * k


def integer_partition_lattice(n):
    """I_n: multisets summing to n, ``i <= j`` when j arises by merging parts of i."""
    parts = sorted((IntPartition(p) for p in integer_partitions(n)),
                   key=lambda q: (-len(q.parts), q.parts))
    index = {q: k for k, q in enumerate(parts)}
    covers = set()
    for k, q in enumerate(parts):
        ps = q.parts
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                rest = ps[:i] + ps[i + 1:j] + ps[j + 1:] + (ps[i] + ps[j],)
                covers.add((k, index[IntPartition.from_parts(rest)]))
    return Poset.from_covers(parts, sorted(covers), formatter=str)


def partition_lattices(n, variant="full", k=None, m=None):
    """Π_n, Π_{n,k}, Π^m_{n,k} (all-singletons always included) or I_n."""
    if n < 0:
        raise MalformedInputError("n must be nonnegative")
    if variant == "integer":
        return integer_partition_lattice(n)
    if n > MAX_FULL_N:
        raise MalformedInputError(f"set-partition lattices are limited to n <= {MAX_FULL_N}")
    if variant == "full":
        return _full_partition_lattice(n)
    if k is None or k < 2:
        raise MalformedInputError("k-equal variants need k >= 2", field="k")
    if variant == "k_equal":
        return refinement_poset(p for p in set_partitions(n) if is_k_equal(p, k))
    if variant == "k_equal_m":
        if m is None or m < 1:
            raise MalformedInputError("k_equal_m needs m >= 1", field="m")
        return refinement_poset(p for p in set_partitions(n) if is_k_equal_m(p, k, m))
    raise MalformedInputError(f"unknown partition lattice variant {variant!r}", field="variant")


# -- maps ---------------------------------------------------------------------


def pi_map(R, P, require_injective=False):
    """Orbit structures of the subracks in ``P`` (payloads are masks).

    Returns ``(image, f)``: the image poset ordered by refinement and the
    node map ``f`` from ``P`` into it.
    """
    if require_injective and not is_connected(R):
        raise HypothesisError("π is only guaranteed injective on connected racks")
    partitions = [orbit_structure(R, S) for S in P.payloads]
    image = refinement_poset(partitions)
    index = {q: k for k, q in enumerate(image.payloads)}
    return image, [index[q] for q in partitions]


def iota_map(Q, order="integer"):
    """Block-size multisets of a poset of set partitions.

    With ``order="integer"`` the image carries the order induced from I_n;
    with ``order="image"`` it carries the order generated by ``x <= y`` in Q.
    """
    shapes = [p.shape() for p in Q.payloads]
    distinct = sorted(set(shapes), key=lambda q: (-len(q.parts), q.parts))
    index = {q: k for k, q in enumerate(distinct)}
    f = [index[s] for s in shapes]
    if order == "integer":
        n = Q.payloads[0].n if Q.payloads else 0
        In = integer_partition_lattice(n)
        where = {q: k for k, q in enumerate(In.payloads)}
        image = In.subposet([where[q] for q in distinct])
        image.parent_ids = None
    elif order == "image":
        covers = {(f[i], f[j]) for i in range(len(Q)) for j in iter_bits(Q.up[i]) if f[i] != f[j]}
        image = Poset.from_covers(distinct, sorted(covers), formatter=str)
    else:
        raise MalformedInputError(f"unknown order {order!r}")
    return image, f


def apply_permutation(perm, partition):
    blocks = []
    for b in partition.blocks:
        img = 0
        for i in iter_bits(b):
            img |= 1 << perm[i]
        blocks.append(img)
    return SetPartition.from_blocks(partition.n, blocks)


def node_action(Q, perms):
    """Each point permutation as a map on the nodes of a poset of set partitions."""
    index = {p: k for k, p in enumerate(Q.payloads)}
    maps = []
    for perm in perms:
        try:
            maps.append([index[apply_permutation(perm, p)] for p in Q.payloads])
        except KeyError:
            raise MalformedInputError("the action does not preserve the poset's node set") from None
    return maps


def orbits_of_action(n, maps):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in maps:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def orb_poset(P, maps):
    """Orbits of a group (given by generating automorphisms) with the generated order.

    Returns ``(orb, omega)`` with ``omega`` the node map ``P -> orb``.
    """
    from .poset import is_automorphism

    for g in maps:
        if not is_automorphism(P, g):
            raise MalformedInputError("supplied map is not an automorphism of the poset")
    orbits = orbits_of_action(len(P), maps)
    omega = [0] * len(P)
    for k, orbit in enumerate(orbits):
        for x in orbit:
            omega[x] = k
    covers = {(omega[i], omega[j]) for i in range(len(P)) for j in iter_bits(P.up[i])
              if i != j and omega[i] != omega[j]}
    payloads = [tuple(P.payloads[x] for x in orbit) for orbit in orbits]
    orb = Poset.from_covers(payloads, sorted(covers),
                            formatter=lambda orbit: " ".join(str(x) for x in orbit))
    return orb, omega
