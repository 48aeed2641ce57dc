"""Simplicial complexes built from posets, with reduced homology and shellings.

Faces are sorted tuples of vertex ids.  The empty face ``()`` is stored
explicitly; a complex without it is the void complex.
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from .bits import iter_bits
from .config import DEFAULT_PRIMES
from .errors import CapExceededError, InvariantViolation, MalformedInputError
from .lattice import subset_poset

DEFAULT_FACE_CAP = 2000000
DEFAULT_SNF_THRESHOLD = 20000
SHELLING_SEARCH_CAP = 40


class SimplicialComplex:
    def __init__(self, faces, vertex_labels=None, check=True):
        faces = {tuple(sorted(f)) for f in faces}
        self.faces = sorted(faces, key=lambda f: (len(f), f))
        self.vertex_labels = vertex_labels
        if check:
            self._check_closed()
        self._index = None

    @classmethod
    def from_facets(cls, facets, vertex_labels=None, cap=DEFAULT_FACE_CAP):
        faces = set()
        for F in facets:
            F = tuple(sorted(F))
            if (1 << len(F)) > cap:
                raise CapExceededError(f"facet of size {len(F)} exceeds the face cap", cap=cap)
            for k in range(len(F) + 1):
                faces.update(itertools.combinations(F, k))
            if len(faces) > cap:
                raise CapExceededError(f"complex exceeds the face cap of {cap}", cap=cap)
        return cls(faces, vertex_labels, check=False)

    @classmethod
    def void(cls):
        return cls([], check=False)

    def _check_closed(self):
        present = set(self.faces)
        for f in self.faces:
            for k in range(len(f)):
                if f[:k] + f[k + 1:] not in present:
                    raise MalformedInputError(f"face {f} is missing the subface {f[:k] + f[k + 1:]}")

    def __len__(self):
        return len(self.faces)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __repr__(self):
        return f"SimplicialComplex(faces={len(self.faces)}, dim={self.dim})"

    @property
    def is_void(self):
        return not self.faces

    @property
    def dim(self):
        return len(self.faces[-1]) - 1 if self.faces else None

    def vertices(self):
        return [f[0] for f in self.faces if len(f) == 1]

    def faces_of_dim(self, d):
        return [f for f in self.faces if len(f) == d + 1]

    def f_vector(self):
        """Face counts for dimensions -1, 0, 1, ..."""
        counts = defaultdict(int)
        for f in self.faces:
            counts[len(f) - 1] += 1
        if not counts:
            return []
        return [counts[d] for d in range(-1, max(counts) + 1)]

    def facets(self):
        """Maximal faces, sorted by (size, vertices)."""
        if not self.faces:
            return []
        present = set(self.faces)
        covered = set()
        for f in self.faces:
            for k in range(len(f)):
                covered.add(f[:k] + f[k + 1:])
        return [f for f in self.faces if f not in covered and f in present]

    def to_dict(self):
        return {"facets": [list(f) for f in self.facets()]}


# -- constructions ---------------------------------------------------------------


def order_complex(P, cap=DEFAULT_FACE_CAP):
    """All chains of ``P`` (vertex = node id), including the empty chain."""
    faces = [()]
    order = P.topological_order()
    for start in order:
        stack = [((start,), P.up[start] & ~(1 << start))]
        while stack:
            chain, above = stack.pop()
            faces.append(chain)
            if len(faces) > cap:
                raise CapExceededError(f"order complex exceeds the face cap of {cap}", cap=cap)
            for y in iter_bits(above):
                stack.append((chain + (y,), above & P.up[y] & ~(1 << y)))
    labels = [P.describe(i) for i in range(len(P))] if P.formatter else None
    return SimplicialComplex(_sorted_chains(P, faces), labels, check=False)


def _sorted_chains(P, faces):
    # chains were built bottom-up; store them as sorted vertex tuples
    return [tuple(sorted(f)) for f in faces]


def face_poset(K):
    """Nonempty faces ordered by inclusion."""
    nonempty = [f for f in K.faces if f]
    masks = [sum(1 << v for v in f) for f in nonempty]
    n = max((v for f in nonempty for v in f), default=-1) + 1
    P = subset_poset(masks, n)
    P.payloads = nonempty
    P.formatter = lambda f: list(f)
    return P


def face_poset_and_barycentric(K, cap=DEFAULT_FACE_CAP):
    P = face_poset(K)
    return P, order_complex(P, cap)


def barycentric_subdivision(K, cap=DEFAULT_FACE_CAP):
    return face_poset_and_barycentric(K, cap)[1]


def join_complex(A, B):
    """Faces ``α ∪ β``; B's vertices are shifted past A's."""
    if A.is_void or B.is_void:
        return SimplicialComplex.void()
    shift = max((v for f in A.faces for v in f), default=-1) + 1
    faces = [a + tuple(v + shift for v in b) for a in A.faces for b in B.faces]
    return SimplicialComplex(faces, check=False)


def sphere(d):
    """Boundary of the (d+1)-simplex; ``sphere(-1)`` is ``{∅}``."""
    if d < -1:
        raise MalformedInputError("sphere dimension must be >= -1")
    verts = range(d + 2)
    faces = [f for k in range(d + 2) for f in itertools.combinations(verts, k)]
    return SimplicialComplex(faces, check=False)


def simplex(d):
    return SimplicialComplex.from_facets([tuple(range(d + 1))])


def disjoint_union_complex(A, B):
    shift = max((v for f in A.faces for v in f), default=-1) + 1
    faces = set(A.faces) | {tuple(v + shift for v in b) for b in B.faces}
    return SimplicialComplex(faces, check=False)


# -- crosscuts ------------------------------------------------------------------------


@dataclass
class CrosscutReport:
    is_crosscut: bool
    violated: str = None
    witness: list = None


def _bounded_subsets(P, C, cap):
    """Nonempty subsets of ``C`` with a common upper or lower bound, as sorted tuples."""
    C = sorted(C)
    out = []
    # each state: (members, next index, common up-set, common down-set)
    stack = [((), 0, P.all_mask, P.all_mask)]
    while stack:
        members, start, up, down = stack.pop()
        for k in range(start, len(C)):
            c = C[k]
            u, d = up & P.up[c], down & P.down[c]
            if u or d:
                chosen = members + (c,)
                out.append((chosen, u, d))
                if len(out) > cap:
                    raise CapExceededError(f"crosscut complex exceeds the face cap of {cap}", cap=cap)
                stack.append((chosen, k + 1, u, d))
    return out


def check_crosscut(P, C, cap=DEFAULT_FACE_CAP):
    C = sorted(set(C))
    for a, b in itertools.combinations(C, 2):
        if P.comparable(a, b):
            return CrosscutReport(False, "antichain", [a, b])
    # (ii) reduces to: every maximal chain meets C; search for a cover path avoiding C
    inC = set(C)
    parent = {}
    stack = [m for m in P.minimal() if m not in inC]
    for m in stack:
        parent[m] = None
    while stack:
        x = stack.pop()
        if not P.upper_covers(x):
            chain = [x]
            while parent[chain[-1]] is not None:
                chain.append(parent[chain[-1]])
            return CrosscutReport(False, "chain", chain[::-1])
        for y in P.upper_covers(x):
            if y not in inC and y not in parent:
                parent[y] = x
                stack.append(y)
    for members, up, down in _bounded_subsets(P, C, cap):
        join = _least(P, up) if up else None
        meet = _greatest(P, down) if down else None
        if join is None and meet is None:
            return CrosscutReport(False, "bounds", list(members))
    return CrosscutReport(True)


def _least(P, mask):
    for x in iter_bits(mask):
        if P.up[x] & mask == mask:
            return x
    return None


def _greatest(P, mask):
    for x in iter_bits(mask):
        if P.down[x] & mask == mask:
            return x
    return None


def crosscut_complex(P, C, check=True, cap=DEFAULT_FACE_CAP):
    """Subsets of ``C`` with an upper or lower bound in ``P`` (vertex = node id).

    For a bounded lattice pass its proper part, so that the bounds themselves
    do not bound every subset.
    """
    if check:
        report = check_crosscut(P, C, cap)
        if not report.is_crosscut:
            raise MalformedInputError(
                f"not a crosscut: condition '{report.violated}' fails", condition=report.violated,
                witness=report.witness)
    faces = [()] + [m for m, _, _ in _bounded_subsets(P, C, cap)]
    return SimplicialComplex(faces, check=False)


# -- Euler characteristic and homology ---------------------------------------------------


def reduced_euler(K):
    return sum((-1) ** (len(f) + 1) for f in K.faces)


@dataclass
class HomologyReport:
    reduced_betti: dict
    torsion: dict = field(default_factory=dict)
    method: str = "snf"
    chi_tilde: int = 0

    def nonzero(self):
        return {d: b for d, b in self.reduced_betti.items() if b}

    def concentrated_in(self, d, rank=None):
        nz = self.nonzero()
        ok = set(nz) <= {d} and not any(self.torsion.values())
        return ok and (rank is None or nz.get(d, 0) == rank)

    def signature(self):
        """Nonzero Betti numbers and torsion, for comparing complexes."""
        return (tuple(sorted(self.nonzero().items())),
                tuple(sorted((d, tuple(t)) for d, t in self.torsion.items() if t)))

    def to_dict(self):
        return {"betti": {str(d): b for d, b in sorted(self.reduced_betti.items())},
                "torsion": {str(d): list(t) for d, t in sorted(self.torsion.items()) if t},
                "chi_tilde": self.chi_tilde, "method": self.method}


def boundary_rows(K, d):
    """Rows of the boundary map from d-faces to (d-1)-faces, as sparse dicts."""
    lower = {f: k for k, f in enumerate(K.faces_of_dim(d - 1))}
    rows = []
    for f in K.faces_of_dim(d):
        r = {}
        for i in range(len(f)):
            r[lower[f[:i] + f[i + 1:]]] = -1 if i % 2 else 1
        rows.append(r)
    return rows


def _eliminate(rows, modulus=None):
    """Sparse Gaussian elimination.

    Over the integers only unit pivots are used and the unreduced remainder is
    returned; modulo a prime the elimination is complete.
    """
    rows = [dict(r) for r in rows if r]
    col_rows = defaultdict(set)
    for i, r in enumerate(rows):
        for c in r:
            col_rows[c].add(i)
    alive = set(range(len(rows)))
    rank = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(alive, key=lambda i: (len(rows[i]), i)):
            if i not in alive:
                continue
            r = rows[i]
            if not r:
                alive.discard(i)
                continue
            best = None
            for c, v in r.items():
                if modulus is None and v not in (1, -1):
                    continue
                k = len(col_rows[c])
                if best is None or k < best[0]:
                    best = (k, c)
            if best is None:
                continue
            c = best[1]
            v = r[c]
            inv = v if modulus is None else pow(v, -1, modulus)
            alive.discard(i)
            for c2 in r:
                col_rows[c2].discard(i)
            for k in sorted(col_rows[c]):
                rk = rows[k]
                factor = rk[c] * inv
                for c2, val in r.items():
                    nv = rk.get(c2, 0) - factor * val
                    if modulus is not None:
                        nv %= modulus
                    if nv:
                        if c2 not in rk:
                            col_rows[c2].add(k)
                        rk[c2] = nv
                    elif c2 in rk:
                        del rk[c2]
                        col_rows[c2].discard(k)
            rank += 1
            progress = True
    return rank, [rows[i] for i in sorted(alive) if rows[i]]


def smith_invariants(matrix):
    """Nonzero invariant factors of a dense integer matrix (smallest-pivot SNF)."""
    A = [list(r) for r in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            moved = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if moved:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        out.append(abs(A[t][t]))
        t += 1
    return out


def _dense(rows):
    cols = sorted({c for r in rows for c in r})
    pos = {c: k for k, c in enumerate(cols)}
    M = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            M[i][pos[c]] = v
    return M


def integer_rank_and_torsion(rows):
    rank, rest = _eliminate(rows)
    factors = smith_invariants(_dense(rest)) if rest else []
    return rank + len(factors), sorted(f for f in factors if f > 1)


def modular_rank(rows, p):
    rows = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    return _eliminate(rows, p)[0]


def betti_numbers(K, snf_threshold=DEFAULT_SNF_THRESHOLD, primes=DEFAULT_PRIMES):
    """Reduced Betti numbers (and torsion when computed over the integers)."""
    chi = reduced_euler(K)
    if K.is_void:
        return HomologyReport({}, {}, "snf", 0)
    top = K.dim
    f = {d: len(K.faces_of_dim(d)) for d in range(-1, top + 1)}
    method = "snf" if len(K) <= snf_threshold else "two-prime"
    ranks, torsion = {}, {}
    for d in range(0, top + 1):
        rows = boundary_rows(K, d)
        if method == "snf":
            ranks[d], tors = integer_rank_and_torsion(rows)
            if tors:
                torsion[d - 1] = tors
        else:
            found = {p: modular_rank(rows, p) for p in primes}
            if len(set(found.values())) != 1:
                raise InvariantViolation(f"ranks modulo {list(primes)} disagree in dimension {d}",
                                         ranks=found)
            ranks[d] = found[primes[0]]
    betti = {}
    for d in range(-1, top + 1):
        betti[d] = f[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
    report = HomologyReport(betti, torsion, method, chi)
    if sum((-1) ** d * b for d, b in betti.items()) != chi:
        raise InvariantViolation("Betti numbers do not sum to the reduced Euler characteristic")
    return report


# -- shellings ------------------------------------------------------------------------------


@dataclass
class ShellingReport:
    is_shelling: bool
    sphere_counts: dict = field(default_factory=dict)
    covered: list = field(default_factory=list)
    failure: dict = None
    order: list = None


def _step(placed, F):
    """Sizes of maximal intersections of F with earlier facets; whole-boundary flag."""
    inter = {tuple(sorted(set(F) & set(G))) for G in placed}
    maximal = [I for I in inter if not any(I != J and set(I) <= set(J) for J in inter)]
    pure = bool(maximal) and all(len(I) == len(F) - 1 for I in maximal)
    return pure, pure and len(maximal) == len(F), maximal


def verify_shelling(K, order):
    facets = K.facets()
    order = [tuple(sorted(F)) for F in order]
    if sorted(order, key=lambda f: (len(f), f)) != facets:
        raise MalformedInputError("order must list every facet exactly once")
    counts, covered = defaultdict(int), []
    for k, F in enumerate(order):
        if k == 0:
            continue
        pure, full, maximal = _step(order[:k], F)
        if not pure:
            return ShellingReport(False, failure={"position": k, "facet": list(F),
                                                  "intersections": [list(I) for I in maximal]},
                                  order=[list(F) for F in order])
        if full:
            counts[len(F) - 1] += 1
            covered.append(k)
    return ShellingReport(True, dict(counts), covered, order=[list(F) for F in order])


def find_shelling(K, cap=SHELLING_SEARCH_CAP):
    """Depth-first search for a shelling; facets of larger dimension are tried first."""
    facets = K.facets()
    if len(facets) > cap:
        raise CapExceededError(f"shelling search is limited to {cap} facets", cap=cap)
    if not facets:
        return ShellingReport(True, {}, [], order=[])
    facets = sorted(facets, key=lambda f: (-len(f), f))
    dead = set()
    full = (1 << len(facets)) - 1

    def dfs(mask, seq):
        if mask == full:
            return seq
        if mask in dead:
            return None
        placed = [facets[i] for i in seq]
        for i in range(len(facets)):
            if mask >> i & 1:
                continue
            if seq and not _step(placed, facets[i])[0]:
                continue
            found = dfs(mask | 1 << i, seq + [i])
            if found is not None:
                return found
        dead.add(mask)
        return None

    seq = dfs(0, [])
    if seq is None:
        return ShellingReport(False)
    return verify_shelling(K, [facets[i] for i in seq])


def spanning_tree_edge_order(K):
    """For a connected graph: breadth-first tree edges, then the remaining edges."""
    edges = [f for f in K.facets() if len(f) == 2]
    if len(edges) != len(K.facets()):
        raise MalformedInputError("expected a complex whose facets are all edges")
    adj = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = min(adj)
    seen = {start}
    queue = [start]
    tree = []
    for u in queue:
        for v in sorted(adj[u]):
            if v not in seen:
                seen.add(v)
                queue.append(v)
                tree.append(tuple(sorted((u, v))))
    rest = sorted(set(edges) - set(tree))
    return tree + rest


__all__ = [
    "SimplicialComplex", "order_complex", "face_poset", "face_poset_and_barycentric",
    "barycentric_subdivision", "join_complex", "sphere", "simplex", "disjoint_union_complex",
    "check_crosscut", "crosscut_complex", "reduced_euler", "betti_numbers", "HomologyReport",
    "verify_shelling", "find_shelling", "spanning_tree_edge_order", "smith_invariants",
]
