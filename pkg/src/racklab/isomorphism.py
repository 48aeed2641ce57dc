"""Exact poset isomorphism by invariant refinement plus backtracking."""

from .bits import iter_bits, popcount
from .errors import CapExceededError

ISO_CAP = 2000


def _initial_colors(P):
    h = P.heights()
    depth = _depths(P)
    return [
        (popcount(P.up[i]), popcount(P.down[i]), len(P.upper_covers(i)), len(P.lower_covers(i)),
         h[i], depth[i])
        for i in range(len(P))
    ]


def _depths(P):
    d = [0] * len(P)
    for i in reversed(P.topological_order()):
        for j in P.upper_covers(i):
            d[i] = max(d[i], d[j] + 1)
    return d


def refine_colors(posets):
    """Joint colour refinement over several posets; returns one colour list per poset."""
    colors = [_initial_colors(P) for P in posets]
    palette = {c: k for k, c in enumerate(sorted({c for cs in colors for c in cs}))}
    colors = [[palette[c] for c in cs] for cs in colors]
    while True:
        signatures = []
        for P, cs in zip(posets, colors):
            signatures.append([
                (cs[i],
                 tuple(sorted(cs[j] for j in P.upper_covers(i))),
                 tuple(sorted(cs[j] for j in P.lower_covers(i))))
                for i in range(len(P))
            ])
        palette = {s: k for k, s in enumerate(sorted({s for ss in signatures for s in ss}))}
        new = [[palette[s] for s in ss] for ss in signatures]
        # refinement only splits classes, so an unchanged count means stable
        if len(palette) == len({c for cs in colors for c in cs}):
            return new
        colors = new


def _search_order(P, colors):
    """Static variable order: start at a rarest colour, then grow along covers."""
    n = len(P)
    freq = {}
    for c in colors:
        freq[c] = freq.get(c, 0) + 1
    order, placed = [], [False] * n
    touch = [0] * n
    for _ in range(n):
        best = max((i for i in range(n) if not placed[i]),
                   key=lambda i: (touch[i], -freq[colors[i]], -i))
        placed[best] = True
        order.append(best)
        for j in P.upper_covers(best) + P.lower_covers(best):
            touch[j] += 1
    return order


def poset_isomorphism(P, Q, cap=ISO_CAP):
    """A bijection ``f`` (list, P-id -> Q-id) with ``x <= y`` iff ``f(x) <= f(y)``, or None."""
    n = len(P)
    if max(n, len(Q)) > cap:
        raise CapExceededError(f"isomorphism search is limited to {cap} nodes", cap=cap)
    if n != len(Q):
        return None
    if n == 0:
        return []
    cp, cq = refine_colors([P, Q])
    if sorted(cp) != sorted(cq):
        return None
    by_color = {}
    for j, c in enumerate(cq):
        by_color.setdefault(c, []).append(j)
    order = _search_order(P, cp)
    f = [-1] * n
    used = [False] * n

    def consistent(i, c, k):
        for t in range(k):
            j = order[t]
            fj = f[j]
            if P.leq(i, j) != Q.leq(c, fj) or P.leq(j, i) != Q.leq(fj, c):
                return False
        return True

    # iterative DFS keeps deep posets safe from the recursion limit
    choices = [None] * n
    k = 0
    while 0 <= k < n:
        i = order[k]
        if choices[k] is None:
            choices[k] = iter(by_color[cp[i]])
        else:
            used[f[i]] = False
            f[i] = -1
        for c in choices[k]:
            if not used[c] and consistent(i, c, k):
                f[i] = c
                used[c] = True
                break
        if f[i] == -1:
            choices[k] = None
            k -= 1
        else:
            k += 1
    return f if k == n else None


def is_isomorphism(P, Q, f):
    n = len(P)
    if len(Q) != n or sorted(f) != list(range(n)):
        return False
    return all(P.leq(i, j) == Q.leq(f[i], f[j]) for i in range(n) for j in range(n))


def is_order_preserving(P, Q, f):
    """``x <= y`` in P implies ``f(x) <= f(y)`` in Q."""
    return all(Q.leq(f[i], f[j]) for i in range(len(P)) for j in iter_bits(P.up[i]))
