"""Finite permutation groups, fully materialized.

A :class:`PermGroup` keeps every element in lexicographic order of the image
arrays, so element ``0`` is always the identity and every downstream index
(rack elements, lattice nodes, DOT output) is reproducible.  Subsets of a
group are int bitmasks over element indices.
"""

from collections import deque
from dataclasses import dataclass
from math import gcd

import numpy as np

from .bits import from_indices, iter_bits, popcount, to_indices
from .errors import CapExceededError, HypothesisError, MalformedInputError

DEFAULT_ELEMENT_CAP = 20000


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, ..., degree-1}``; ``images[i]`` is the image of i.

    Products compose right to left: ``(p * q)(i) == p(q(i))``.
    """

    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise MalformedInputError(
                f"images {list(self.images)} are not a permutation of 0..{len(images) - 1}"
            )
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, images):
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, degree):
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for k, point in enumerate(cycle):
                if point in seen or not 0 <= point < degree:
                    raise MalformedInputError(f"bad cycle {cycle} for degree {degree}")
                seen.add(point)
                images[point] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        a = self.images
        return Permutation._trusted(tuple(a[x] for x in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._trusted(tuple(inv))

    def cycles(self):
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def order(self):
        n = 1
        for c in self.cycles():
            n = n * len(c) // gcd(n, len(c))
        return n

    def __str__(self):
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"


def _compose(a, b):
    return tuple(a[x] for x in b)


class PermGroup:
    """A finite permutation group with its full element list.

    ``labels`` optionally names elements for display (Cayley-table groups keep
    their original row indices there).
    """

    def __init__(self, degree, generators, elements, name=None, labels=None):
        self.degree = degree
        self.elements = sorted(elements)
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        self._inverse = None
        self._table = None
        self.name = name
        self.labels = labels
        self.generators = list(generators) if generators else self._greedy_generators()
        if self.elements[0].images != tuple(range(degree)):
            raise MalformedInputError("element list does not contain the identity")

    def __repr__(self):
        return f"PermGroup(name={self.name!r}, order={self.order}, degree={self.degree})"

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    @property
    def full_mask(self):
        return (1 << self.order) - 1

    def index(self, perm):
        images = perm.images if isinstance(perm, Permutation) else tuple(perm)
        return self._index[images]

    def label(self, i):
        if self.labels is not None:
            return self.labels[i]
        return str(self.elements[i])

    # -- index arithmetic -------------------------------------------------

    def mul(self, i, j):
        if self._table is not None:
            return self._table[i][j]
        return self._index[_compose(self.elements[i].images, self.elements[j].images)]

    def mult_table(self):
        if self._table is None:
            els = [p.images for p in self.elements]
            idx = self._index
            self._table = [[idx[_compose(a, b)] for b in els] for a in els]
        return self._table

    def inv(self, i):
        if self._inverse is None:
            self._inverse = [self._index[p.inverse().images] for p in self.elements]
        return self._inverse[i]

    def conj(self, a, b):
        """Index of ``a b a^-1``."""
        return self.mul(self.mul(a, b), self.inv(a))

    def power(self, i, k):
        result = 0
        for _ in range(k):
            result = self.mul(result, i)
        return result

    def element_order(self, i):
        return self.elements[i].order()

    # -- subsets ----------------------------------------------------------

    def generated(self, mask):
        """Bitmask of the subgroup generated by the elements in ``mask``."""
        gens = to_indices(mask)
        seen = 1
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul(x, g)
                if not seen >> y & 1:
                    seen |= 1 << y
                    queue.append(y)
        return seen

    def is_subgroup(self, mask):
        if not mask & 1:
            return False
        members = to_indices(mask)
        return all(mask >> self.mul(a, b) & 1 for a in members for b in members)

    def conjugate_mask(self, g, mask):
        out = 0
        for x in iter_bits(mask):
            out |= 1 << self.conj(g, x)
        return out

    def normalizer(self, mask, gens=None):
        gens = to_indices(mask) if gens is None else gens
        out = 0
        for g in range(self.order):
            if all(mask >> self.conj(g, h) & 1 for h in gens):
                out |= 1 << g
        return out

    def _greedy_generators(self):
        gens = []
        span = 1
        for i in range(1, len(self.elements)):
            if not span >> i & 1:
                gens.append(i)
                span = self.generated(from_indices(gens))
        return [self.elements[i] for i in gens]

    def generator_indices(self):
        return [self.index(g) for g in self.generators]


def group_from_generators(degree, gens, cap=DEFAULT_ELEMENT_CAP, name=None):
    """Close ``gens`` under composition (breadth first)."""
    gens = [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in gens]
    for g in gens:
        if g.degree != degree:
            raise MalformedInputError(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    gen_images = [g.images for g in gens]
    while queue:
        x = queue.popleft()
        for g in gen_images:
            y = _compose(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceededError(
                        f"group closure exceeded the element cap of {cap}", cap=cap
                    )
                queue.append(y)
    elements = [Permutation._trusted(x) for x in seen]
    return PermGroup(degree, gens, elements, name=name)


def group_from_cayley_table(table, name=None):
    """Realize a group given by its multiplication table.

    ``table[a][b]`` is the index of ``a*b``.  The result is the left-regular
    permutation representation; element labels keep the table's indices.
    """
    try:
        t = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError):
        raise MalformedInputError("Cayley table is not a rectangular integer matrix") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise MalformedInputError(f"Cayley table must be square and nonempty, got shape {t.shape}")
    n = t.shape[0]
    want = np.arange(n)
    for r in range(n):
        if not np.array_equal(np.sort(t[r]), want):
            raise MalformedInputError(f"not a Latin square: row {r} repeats an entry", row=r)
        if not np.array_equal(np.sort(t[:, r]), want):
            raise MalformedInputError(f"not a Latin square: column {r} repeats an entry", column=r)
    ident = [e for e in range(n) if np.array_equal(t[e], want) and np.array_equal(t[:, e], want)]
    if not ident:
        raise MalformedInputError("Cayley table has no identity element")
    if n <= 512:
        for a in range(n):
            # (a*b)*c == a*(b*c) for all b, c
            if not np.array_equal(t[t[a]], t[a][t]):
                b, c = map(int, np.argwhere(t[t[a]] != t[a][t])[0])
                raise MalformedInputError(
                    f"associativity fails for ({a}, {b}, {c})", triple=[a, b, c]
                )
    perms = [Permutation._trusted(tuple(int(x) for x in t[g])) for g in range(n)]
    order_in_table = {p.images: g for g, p in enumerate(perms)}
    group = PermGroup(n, None, perms, name=name)
    group.labels = [str(order_in_table[p.images]) for p in group.elements]
    return group


# -- conjugacy ---------------------------------------------------------------


def conjugacy_classes(G):
    """Conjugacy classes as bitmasks, sorted by (size, least element index)."""
    gens = G.generator_indices()
    seen = 0
    classes = []
    for start in range(G.order):
        if seen >> start & 1:
            continue
        cls = 1 << start
        queue = [start]
        while queue:
            x = queue.pop()
            for g in gens:
                y = G.conj(g, x)
                if not cls >> y & 1:
                    cls |= 1 << y
                    queue.append(y)
        seen |= cls
        classes.append(cls)
    classes.sort(key=lambda c: (popcount(c), (c & -c).bit_length()))
    return classes


def centralizer(G, mask):
    if not mask:
        raise MalformedInputError("centralizer of the empty set is not defined")
    members = to_indices(mask)
    out = 0
    for g in range(G.order):
        if all(G.mul(g, s) == G.mul(s, g) for s in members):
            out |= 1 << g
    return out


def center(G):
    out = 0
    gens = G.generator_indices() or [0]
    for g in range(G.order):
        if all(G.mul(g, s) == G.mul(s, g) for s in gens):
            out |= 1 << g
    return out


# -- primes and p-subgroups ----------------------------------------------------


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _require_prime(p):
    if not is_prime(p):
        raise MalformedInputError(f"{p} is not a prime")


def p_part(n, p):
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def p_power_elements(G, p):
    """Elements whose order is a power of ``p`` (always includes the identity)."""
    _require_prime(p)
    out = 0
    for i in range(G.order):
        if _is_p_power(G.element_order(i), p):
            out |= 1 << i
    return out


def mask_key(mask):
    """Sort key for element sets: the sorted tuple of member indices."""
    return tuple(to_indices(mask))


def _one_sylow(G, p):
    target = p_part(G.order, p)
    x = next(i for i in range(G.order) if G.element_order(i) == p)
    gens = [x]
    P = G.generated(1 << x)
    while popcount(P) < target:
        N = G.normalizer(P, gens)
        for y in iter_bits(N & ~P):
            if P >> G.power(y, p) & 1:
                gens.append(y)
                P = G.generated(from_indices(gens))
                break
        else:  # pragma: no cover - Cauchy's theorem in N/P guarantees a hit
            raise AssertionError("normalizer growth stalled")
    return P


def sylow_p_subgroups(G, p):
    """All Sylow p-subgroups, as element bitmasks sorted by member list."""
    _require_prime(p)
    if G.order % p:
        raise HypothesisError(f"{p} does not divide |G| = {G.order}")
    P = _one_sylow(G, p)
    gens = G.generator_indices()
    seen = {P}
    queue = [P]
    while queue:
        H = queue.pop()
        for g in gens:
            K = G.conjugate_mask(g, H)
            if K not in seen:
                seen.add(K)
                queue.append(K)
    return sorted(seen, key=mask_key)


def all_p_subgroups(G, p, nontrivial_only=False):
    """Every p-subgroup of ``G`` (each lies in some Sylow, so grow inside those)."""
    sylows = sylow_p_subgroups(G, p)
    found = {1}
    for P in sylows:
        queue = [1]
        local = {1}
        while queue:
            H = queue.pop()
            for x in iter_bits(P & ~H):
                K = G.generated(H | 1 << x)
                if K not in local:
                    local.add(K)
                    queue.append(K)
        found |= local
    if nontrivial_only:
        found.discard(1)
    return sorted(found, key=lambda m: (popcount(m), mask_key(m)))


def is_normal(G, mask):
    return all(G.conjugate_mask(g, mask) == mask for g in G.generator_indices())


def p_core(G, p):
    """Largest normal p-subgroup: the intersection of all Sylow p-subgroups."""
    core = G.full_mask
    for P in sylow_p_subgroups(G, p):
        core &= P
    if not (G.is_subgroup(core) and is_normal(G, core)):  # pragma: no cover
        raise AssertionError("intersection of Sylow subgroups is not a normal subgroup")
    return core


def cycle_type(perm):
    """Lengths of the nontrivial cycles, largest first."""
    return tuple(sorted((len(c) for c in perm.cycles() if len(c) > 1), reverse=True))


def find_class(G, spec):
    """Index of a conjugacy class named by index, cycle type or "transpositions".

    A bare integer is an index; cycle types carry a comma ("3,3", or "5," for
    a single 5-cycle).
    """
    classes = conjugacy_classes(G)
    if isinstance(spec, int) or (isinstance(spec, str) and spec.strip().isdigit()):
        k = int(spec)
        if not 0 <= k < len(classes):
            raise MalformedInputError(
                f"class index {k} out of range (0..{len(classes) - 1})", field="class")
        return k
    text = spec.strip().lower()
    if text == "transpositions":
        want = (2,)
    elif text in ("identity", "1"):
        want = ()
    else:
        try:
            want = tuple(sorted((int(x) for x in text.replace(" ", "").split(",") if x), reverse=True))
        except ValueError:
            raise MalformedInputError(f"cannot read class {spec!r}", field="class") from None
        want = tuple(x for x in want if x > 1)
    hits = [k for k, c in enumerate(classes)
            if cycle_type(G.elements[(c & -c).bit_length() - 1]) == want]
    if not hits:
        raise MalformedInputError(f"no class with cycle type {spec!r}", field="class")
    if len(hits) > 1:
        raise MalformedInputError(
            f"cycle type {spec!r} splits into classes {hits}; pass an index", field="class")
    return hits[0]
