"""Named groups and small group-building helpers."""

import itertools
import re

from .errors import MalformedInputError
from .groups import Permutation, PermGroup, group_from_cayley_table, group_from_generators


def symmetric(n):
    if n < 1:
        raise MalformedInputError("symmetric group needs n >= 1")
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, tuple(range(n))))
    return group_from_generators(n, gens, name=f"S{n}")


def alternating(n):
    if n < 1:
        raise MalformedInputError("alternating group needs n >= 1")
    gens = [Permutation.from_cycles(n, (0, 1, k)) for k in range(2, n)]
    return group_from_generators(n, gens, name=f"A{n}")


def dihedral(order):
    """Dihedral group of the given order 2m acting on m points (m >= 3)."""
    if order % 2 or order < 6:
        raise MalformedInputError(f"dihedral order must be even and >= 6, got {order}")
    m = order // 2
    rotation = Permutation(tuple((i + 1) % m for i in range(m)))
    reflection = Permutation(tuple((-i) % m for i in range(m)))
    return group_from_generators(m, [rotation, reflection], name=f"D{order}")


def cyclic(order):
    """Cyclic group in its regular representation."""
    if order < 1:
        raise MalformedInputError("cyclic order must be positive")
    gen = Permutation(tuple((i + 1) % order for i in range(order)))
    return group_from_generators(order, [gen], name=f"Z{order}")


def quaternion():
    """Q8 in its regular representation on the units {±1, ±i, ±j, ±k}."""
    # units encoded as (sign, letter) with letter in "1ijk"
    units = [(s, u) for u in "1ijk" for s in (1, -1)]
    rule = {
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }

    def times(x, y):
        (s, u), (t, v) = x, y
        if u == "1":
            return (s * t, v)
        if v == "1":
            return (s * t, u)
        if u == v:
            return (-s * t, "1")
        r, w = rule[(u, v)]
        return (s * t * r, w)

    table = [[units.index(times(x, y)) for y in units] for x in units]
    group = group_from_cayley_table(table, name="Q8")
    names = [("" if s > 0 else "-") + u for s, u in units]
    group.labels = [names[int(lbl)] for lbl in group.labels]
    return group


def direct_product(G, H):
    """``G x H`` acting on the disjoint union of their point sets."""
    n, m = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(g.images + tuple(range(n, n + m))))
    for h in H.generators:
        gens.append(Permutation(tuple(range(n)) + tuple(n + x for x in h.images)))
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return group_from_generators(n + m, gens, name=name)


def affine_group(modulus, matrices, name=None):
    """Translations of ``(Z/modulus)^2`` extended by the given 2x2 matrices.

    Points are encoded as ``x + modulus*y``.  With a single matrix of order 3
    this builds the semidirect products ``(Z_m x Z_m) : Z_3``.
    """
    pts = list(itertools.product(range(modulus), repeat=2))
    code = {p: p[0] + modulus * p[1] for p in pts}
    degree = modulus * modulus

    def perm(f):
        images = [0] * degree
        for p in pts:
            images[code[p]] = code[f(p)]
        return Permutation(tuple(images))

    gens = [
        perm(lambda p: ((p[0] + 1) % modulus, p[1])),
        perm(lambda p: (p[0], (p[1] + 1) % modulus)),
    ]
    for (a, b), (c, d) in matrices:
        gens.append(perm(lambda p, a=a, b=b, c=c, d=d: (
            (a * p[0] + b * p[1]) % modulus, (c * p[0] + d * p[1]) % modulus)))
    return group_from_generators(degree, gens, name=name)


# a -> b, b -> a^-1 b^-1 : the order-3 automorphism of Z_m x Z_m used below
ORDER_THREE_MATRIX = ((0, -1), (1, -1))


def order_48_example():
    """``<a,b,c | a^4=b^4=c^3=(ac)^3=1, ab=ba, cac^-1=b>`` as an affine group on 16 points."""
    return affine_group(4, [ORDER_THREE_MATRIX], name="Z4^2:Z3")


def order_243_example():
    """``(Z_9 x Z_9) : Z_3``, a group of order 243 with a 27-element class."""
    return affine_group(9, [ORDER_THREE_MATRIX], name="Z9^2:Z3")


_NAMED = re.compile(r"^([SA])(\d+)$")


def named_group(name, order=None):
    """Resolve names such as ``S4``, ``A5``, ``Q8``, ``dihedral`` (with order)."""
    m = _NAMED.match(name)
    if m:
        n = int(m.group(2))
        return symmetric(n) if m.group(1) == "S" else alternating(n)
    if name == "Q8":
        return quaternion()
    if name in ("dihedral", "cyclic"):
        if order is None:
            raise MalformedInputError(f"named group {name!r} needs an order", field="order")
        return dihedral(order) if name == "dihedral" else cyclic(order)
    if name == "order48":
        return order_48_example()
    if name == "order243":
        return order_243_example()
    if name == "Z2xS3":
        return direct_product(cyclic(2), symmetric(3))
    raise MalformedInputError(f"unknown named group {name!r}", field="name")


def group_from_spec(spec, cap=None):
    """Build a group from the JSON input-file structure."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise MalformedInputError("group spec must be an object with a 'kind' field", field="kind")
    kind = spec["kind"]
    if kind == "generators":
        try:
            degree = int(spec["degree"])
            gens = [Permutation(tuple(g)) for g in spec["generators"]]
        except KeyError as exc:
            raise MalformedInputError(f"missing field {exc.args[0]!r}", field=exc.args[0]) from None
        kwargs = {"cap": cap} if cap else {}
        return group_from_generators(degree, gens, **kwargs)
    if kind == "cayley":
        if "table" not in spec:
            raise MalformedInputError("missing field 'table'", field="table")
        return group_from_cayley_table(spec["table"])
    if kind == "named":
        if "name" not in spec:
            raise MalformedInputError("missing field 'name'", field="name")
        return named_group(spec["name"], spec.get("order"))
    raise MalformedInputError(f"unknown group kind {kind!r}", field="kind")


def cayley_table(G):
    """Multiplication table of ``G`` over its element indices."""
    return [list(row) for row in G.mult_table()]


__all__ = [
    "PermGroup", "symmetric", "alternating", "dihedral", "cyclic", "quaternion",
    "direct_product", "affine_group", "order_48_example", "order_243_example",
    "named_group", "group_from_spec", "cayley_table",
]
