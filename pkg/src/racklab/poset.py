"""Finite posets stored as up-set and down-set bitmasks.

Node ``i`` has ``up[i]`` (all ``j`` with ``i <= j``, including ``i``) and
``down[i]``.  Node ids are positions in ``payloads`` and never change once a
poset is built; derived posets record the ids they came from in
``parent_ids``.
"""

from .bits import iter_bits, popcount
from .errors import MalformedInputError, NotALatticeError
from .setpartition import IntPartition, SetPartition

VALIDATE_LIMIT = 4096


class _Bound:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name

    __str__ = __repr__


BOTTOM = _Bound("0^")
TOP = _Bound("1^")


class Poset:
    def __init__(self, payloads, up, parent_ids=None, formatter=None, validate=True):
        self.payloads = list(payloads)
        n = len(self.payloads)
        if len(up) != n:
            raise MalformedInputError("up-set list does not match the payload count")
        self.up = list(up)
        down = [0] * n
        for i, u in enumerate(self.up):
            bit = 1 << i
            for j in iter_bits(u):
                down[j] |= bit
        self.down = down
        self.parent_ids = list(parent_ids) if parent_ids is not None else None
        self.formatter = formatter
        self._upper = None
        self._lower = None
        self._by_down = None
        self._by_up = None
        if validate and n <= VALIDATE_LIMIT:
            self._validate()

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_leq(cls, payloads, leq, **kw):
        payloads = list(payloads)
        up = []
        for x in payloads:
            u = 0
            for j, y in enumerate(payloads):
                if leq(x, y):
                    u |= 1 << j
            up.append(u)
        return cls(payloads, up, **kw)

    @classmethod
    def from_subsets(cls, masks, payloads=None, **kw):
        """Poset of bitmask sets ordered by inclusion."""
        masks = list(masks)
        up = []
        for a in masks:
            u = 0
            for j, b in enumerate(masks):
                if a & ~b == 0:
                    u |= 1 << j
            up.append(u)
        return cls(masks if payloads is None else payloads, up, **kw)

    @classmethod
    def from_covers(cls, payloads, covers, **kw):
        """Reflexive-transitive closure of the relation ``i < j`` for (i, j) in covers."""
        payloads = list(payloads)
        n = len(payloads)
        succ = [[] for _ in range(n)]
        for i, j in covers:
            succ[i].append(j)
        up = [None] * n
        state = [0] * n  # 0 new, 1 on stack, 2 done

        for root in range(n):
            if state[root]:
                continue
            stack = [(root, iter(succ[root]))]
            state[root] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    u = 1 << node
                    for s in succ[node]:
                        u |= up[s]
                    up[node] = u
                    state[node] = 2
                    stack.pop()
                elif state[nxt] == 1:
                    raise MalformedInputError("cover relation contains a cycle")
                elif state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
        return cls(payloads, up, **kw)

    @classmethod
    def chain(cls, n):
        return cls(list(range(n)), [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)])

    @classmethod
    def antichain(cls, n):
        return cls(list(range(n)), [1 << i for i in range(n)])

    @classmethod
    def boolean(cls, m):
        """The Boolean lattice of subsets of an m-set (payloads are bitmasks)."""
        return cls.from_subsets(sorted(range(1 << m), key=lambda s: (popcount(s), s)))

    def _validate(self):
        for i, u in enumerate(self.up):
            if not u >> i & 1:
                raise MalformedInputError(f"relation is not reflexive at node {i}")
            if u & self.down[i] != 1 << i:
                raise MalformedInputError(f"relation is not antisymmetric at node {i}")
            for j in iter_bits(u):
                if self.up[j] & ~u:
                    raise MalformedInputError(f"relation is not transitive at ({i}, {j})")

    # -- queries ------------------------------------------------------------------

    def __len__(self):
        return len(self.payloads)

    def __repr__(self):
        return f"Poset(size={len(self)})"

    @property
    def all_mask(self):
        return (1 << len(self.payloads)) - 1

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def lt(self, i, j):
        return i != j and self.leq(i, j)

    def comparable(self, i, j):
        return self.leq(i, j) or self.leq(j, i)

    def upper_covers(self, i):
        if self._upper is None:
            self._compute_covers()
        return self._upper[i]

    def lower_covers(self, i):
        if self._lower is None:
            self._compute_covers()
        return self._lower[i]

    def _compute_covers(self):
        n = len(self)
        upper = [[] for _ in range(n)]
        lower = [[] for _ in range(n)]
        for i in range(n):
            strict = self.up[i] & ~(1 << i)
            for j in iter_bits(strict):
                if strict & self.down[j] == 1 << j:
                    upper[i].append(j)
                    lower[j].append(i)
        self._upper, self._lower = upper, lower

    def covers(self):
        """Sorted list of pairs ``(i, j)`` with ``j`` covering ``i``."""
        return [(i, j) for i in range(len(self)) for j in self.upper_covers(i)]

    def minimal(self):
        return [i for i in range(len(self)) if self.down[i] == 1 << i]

    def maximal(self):
        return [i for i in range(len(self)) if self.up[i] == 1 << i]

    def bottom(self):
        mins = self.minimal()
        if len(mins) == 1 and self.up[mins[0]] == self.all_mask:
            return mins[0]
        return None

    def top(self):
        maxs = self.maximal()
        if len(maxs) == 1 and self.down[maxs[0]] == self.all_mask:
            return maxs[0]
        return None

    def atoms(self):
        b = self.bottom()
        return [] if b is None else list(self.upper_covers(b))

    def coatoms(self):
        t = self.top()
        return [] if t is None else list(self.lower_covers(t))

    def meet_of_mask(self, lower_bounds):
        """The element whose down-set equals ``lower_bounds``, or None."""
        if self._by_down is None:
            self._by_down = {d: i for i, d in enumerate(self.down)}
        return self._by_down.get(lower_bounds)

    def meet(self, i, j):
        m = self.meet_of_mask(self.down[i] & self.down[j])
        if m is None:
            raise NotALatticeError(f"nodes {i} and {j} have no meet")
        return m

    def join(self, i, j):
        if self._by_up is None:
            self._by_up = {u: k for k, u in enumerate(self.up)}
        m = self._by_up.get(self.up[i] & self.up[j])
        if m is None:
            raise NotALatticeError(f"nodes {i} and {j} have no join")
        return m

    def meet_all(self, ids):
        ids = list(ids)
        if not ids:
            t = self.top()
            if t is None:
                raise NotALatticeError("empty meet needs a top element")
            return t
        d = self.all_mask
        for i in ids:
            d &= self.down[i]
        m = self.meet_of_mask(d)
        if m is None:
            raise NotALatticeError(f"nodes {ids} have no meet")
        return m

    def is_lattice(self):
        n = len(self)
        if n == 0:
            return False
        try:
            for i in range(n):
                for j in range(i + 1, n):
                    self.meet(i, j)
                    self.join(i, j)
        except NotALatticeError:
            return False
        return self.bottom() is not None and self.top() is not None

    def heights(self):
        """Length of the longest chain ending at each node (minimal nodes have 0)."""
        h = [0] * len(self)
        for i in self.topological_order():
            for j in self.upper_covers(i):
                if h[i] + 1 > h[j]:
                    h[j] = h[i] + 1
        return h

    def length(self):
        return max(self.heights(), default=-1)

    def topological_order(self):
        """Node ids sorted so that every node precedes the nodes above it."""
        return sorted(range(len(self)), key=lambda i: (popcount(self.down[i]), i))

    def index_of(self, payload):
        return self.payloads.index(payload)

    def root_ids(self):
        """Ids in the poset this one was derived from (identity if not derived)."""
        return self.parent_ids if self.parent_ids is not None else list(range(len(self)))

    def describe(self, i):
        if self.formatter is not None:
            return self.formatter(self.payloads[i])
        return payload_json(self.payloads[i])

    # -- derived posets -----------------------------------------------------------

    def subposet(self, ids, formatter=None):
        """Induced subposet on ``ids`` (kept in the given order)."""
        ids = list(ids)
        pos = {old: k for k, old in enumerate(ids)}
        up = []
        for old in ids:
            u = 0
            for j in iter_bits(self.up[old]):
                k = pos.get(j)
                if k is not None:
                    u |= 1 << k
            up.append(u)
        parents = [self.root_ids()[i] for i in ids]
        return Poset([self.payloads[i] for i in ids], up, parent_ids=parents,
                     formatter=formatter or self.formatter, validate=False)

    def subposet_mask(self, mask):
        return self.subposet(iter_bits(mask))


def payload_json(payload):
    if isinstance(payload, SetPartition):
        return payload.as_lists()
    if isinstance(payload, IntPartition):
        return list(payload.parts)
    if isinstance(payload, (tuple, list)):
        return [payload_json(p) for p in payload]
    if isinstance(payload, (int, str)) and not isinstance(payload, bool):
        return payload
    return str(payload)


# -- combinators -------------------------------------------------------------------


def dual(P):
    return Poset(P.payloads, P.down, parent_ids=P.root_ids(), formatter=P.formatter,
                 validate=False)


def proper_part(L):
    b, t = L.bottom(), L.top()
    if b is None or t is None:
        raise MalformedInputError("proper part needs a bounded poset")
    return L.subposet(i for i in range(len(L)) if i not in (b, t))


def add_bounds(P):
    """``P`` with a new bottom (id 0) and top (id n+1); old ids shift by one."""
    n = len(P)
    full = (1 << (n + 2)) - 1
    up = [full]
    for i in range(n):
        up.append((P.up[i] << 1) | 1 << (n + 1))
    up.append(1 << (n + 1))
    return Poset([BOTTOM] + P.payloads + [TOP], up, validate=False, formatter=None)


def upper_set(P, x, strict=False):
    mask = P.up[x] & ~(1 << x) if strict else P.up[x]
    return P.subposet_mask(mask)


def lower_set(P, x, strict=False):
    mask = P.down[x] & ~(1 << x) if strict else P.down[x]
    return P.subposet_mask(mask)


def interval(P, x, y, open_=False):
    if not P.leq(x, y):
        raise MalformedInputError(f"interval needs x <= y, got {x} and {y}")
    mask = P.up[x] & P.down[y]
    if open_:
        mask &= ~(1 << x | 1 << y)
    return P.subposet_mask(mask)


def direct_product(P, Q):
    """Componentwise order; node ``i*|Q| + j`` is the pair (i, j)."""
    m = len(Q)
    payloads = [(p, q) for p in P.payloads for q in Q.payloads]
    up = []
    for i in range(len(P)):
        for j in range(m):
            u = 0
            for a in iter_bits(P.up[i]):
                u |= Q.up[j] << (a * m)
            up.append(u)
    return Poset(payloads, up, validate=False)


def ordinal_sum(P, Q):
    """Every node of ``P`` below every node of ``Q``; Q's ids are shifted by |P|."""
    n = len(P)
    q_all = ((1 << len(Q)) - 1) << n
    up = [u | q_all for u in P.up] + [u << n for u in Q.up]
    payloads = [("P", x) for x in P.payloads] + [("Q", y) for y in Q.payloads]
    return Poset(payloads, up, validate=False)


def disjoint_union(posets):
    payloads, up, offset = [], [], 0
    for k, P in enumerate(posets):
        payloads += [(k, x) for x in P.payloads]
        up += [u << offset for u in P.up]
        offset += len(P)
    return Poset(payloads, up, validate=False)


def is_automorphism(P, perm):
    n = len(P)
    if sorted(perm) != list(range(n)):
        return False
    return all(P.leq(i, j) == P.leq(perm[i], perm[j]) for i in range(n) for j in range(n))


def fixed_point_subposet(P, maps):
    """Nodes fixed by every supplied automorphism (each a list ``node -> node``)."""
    for perm in maps:
        if not is_automorphism(P, perm):
            raise MalformedInputError("supplied map is not an automorphism of the poset")
    return P.subposet(i for i in range(len(P)) if all(perm[i] == i for perm in maps))


def boolean_proper_part(m):
    return proper_part(Poset.boolean(m))
