"""Finite racks given by operation tables, and conjugation racks of groups.

Rack elements are dense indices ``0..n-1``; ``table[a][b]`` is ``a ▷ b``.
Subsets (subracks, orbits, blocks) are int bitmasks over those indices.
"""

from dataclasses import dataclass, field

import numpy as np

from .bits import from_indices, iter_bits, to_indices
from .errors import HypothesisError, InvariantViolation, MalformedInputError, NotClosedError
from .groups import conjugacy_classes, p_power_elements
from .setpartition import SetPartition


class FiniteRack:
    """A finite set with a binary operation given by a table.

    Construction only checks the table's shape; use :func:`check_axioms`
    to verify the rack and quandle axioms.
    """

    def __init__(self, table, labels=None, provenance=None):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        for a, row in enumerate(rows):
            if len(row) != n:
                raise MalformedInputError(f"table row {a} has length {len(row)}, expected {n}")
            if any(not 0 <= x < n for x in row):
                raise MalformedInputError(f"table row {a} has an entry out of range")
        self.table = rows
        self.size = n
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise MalformedInputError("label count does not match the table size")
        self.provenance = provenance or {}

    def __repr__(self):
        kind = self.provenance.get("kind", "custom")
        return f"FiniteRack(size={self.size}, kind={kind!r})"

    def __len__(self):
        return self.size

    @property
    def full_mask(self):
        return (1 << self.size) - 1

    def op(self, a, b):
        return self.table[a][b]

    def is_quandle(self):
        return all(self.table[a][a] == a for a in range(self.size))

    def image(self, a, mask):
        """``φ_a`` applied to the subset ``mask``."""
        row = self.table[a]
        out = 0
        for x in iter_bits(mask):
            out |= 1 << row[x]
        return out

    def restrict(self, mask):
        """The subrack on ``mask`` as a rack of its own, relabelled densely."""
        members = to_indices(mask)
        pos = {x: k for k, x in enumerate(members)}
        try:
            table = [[pos[self.table[a][b]] for b in members] for a in members]
        except KeyError:
            raise NotClosedError("subset is not closed under the rack operation") from None
        return FiniteRack(table, [self.labels[x] for x in members],
                          {"kind": "subrack", "parent_elements": members})

    def to_dict(self):
        return {"size": self.size, "table": [list(r) for r in self.table], "labels": self.labels}

    @classmethod
    def from_dict(cls, data):
        try:
            table = data["table"]
        except (KeyError, TypeError):
            raise MalformedInputError("rack file needs a 'table' field", field="table") from None
        if "size" in data and int(data["size"]) != len(table):
            raise MalformedInputError("'size' does not match the table", field="size")
        return cls(table, data.get("labels"))


# -- constructions -------------------------------------------------------------


def conjugation_rack(G, S, kind="custom", p=None):
    """The quandle ``(S, a ▷ b = a b a^-1)`` for a conjugation-closed subset ``S`` of ``G``."""
    members = to_indices(S)
    pos = {x: k for k, x in enumerate(members)}
    table = []
    for a in members:
        row = []
        for b in members:
            c = G.conj(a, b)
            if c not in pos:
                raise NotClosedError(
                    f"{G.label(a)} ▷ {G.label(b)} = {G.label(c)} leaves the subset",
                    pair=[G.label(a), G.label(b)],
                )
            row.append(pos[c])
        table.append(row)
    prov = {"kind": kind, "group": G, "elements": members}
    if p is not None:
        prov["p"] = p
    return FiniteRack(table, [G.label(x) for x in members], prov)


def group_rack(G):
    return conjugation_rack(G, G.full_mask, kind="group")


def class_rack(G, which):
    """Rack on one conjugacy class (an index into ``conjugacy_classes``) or a union mask."""
    classes = conjugacy_classes(G)
    if isinstance(which, int) and 0 <= which < len(classes):
        mask = classes[which]
    else:
        try:
            mask = 0
            for i in which:
                mask |= classes[i]
        except (TypeError, IndexError):
            raise MalformedInputError(
                f"class index {which!r} out of range (0..{len(classes) - 1})") from None
    return conjugation_rack(G, mask, kind="class")


def p_power_rack(G, p):
    return conjugation_rack(G, p_power_elements(G, p), kind="ppower", p=p)


def cyclic_rack(n):
    """``a ▷ b = b + 1 (mod n)``: a rack, and not a quandle for n >= 2."""
    return FiniteRack([[(b + 1) % n for b in range(n)] for _ in range(n)])


def dihedral_quandle(n):
    """``a ▷ b = 2a - b (mod n)``."""
    return FiniteRack([[(2 * a - b) % n for b in range(n)] for a in range(n)])


def trivial_rack(n):
    return FiniteRack([list(range(n)) for _ in range(n)])


# -- axioms ----------------------------------------------------------------------


@dataclass
class AxiomReport:
    is_rack: bool
    is_quandle: bool
    violations: list = field(default_factory=list)


def check_axioms(R, max_violations=20):
    """Exhaustively test self-distributivity, bijective rows and idempotence."""
    t = np.asarray(R.table, dtype=np.int64).reshape(R.size, R.size)
    n = R.size
    violations = []
    want = np.arange(n)
    a2_ok = True
    for a in range(n):
        if not np.array_equal(np.sort(t[a]), want):
            a2_ok = False
            if len(violations) < max_violations:
                violations.append({"axiom": "A2", "row": a})
    a1_ok = True
    for a in range(n):
        lhs = t[a][t]                       # a ▷ (b ▷ c)
        rhs = t[t[a]][:, t[a]]              # (a ▷ b) ▷ (a ▷ c)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a1_ok = False
            for b, c in bad[: max(0, max_violations - len(violations))]:
                violations.append({"axiom": "A1", "triple": [a, int(b), int(c)]})
    a3_bad = [a for a in range(n) if t[a, a] != a] if n else []
    for a in a3_bad[: max(0, max_violations - len(violations))]:
        violations.append({"axiom": "A3", "element": a})
    is_rack = a1_ok and a2_ok
    return AxiomReport(is_rack=is_rack, is_quandle=is_rack and not a3_bad, violations=violations)


# -- closure and orbits ----------------------------------------------------------


def subrack_closure(R, S):
    """Least ▷-closed superset of ``S``."""
    T = R.table
    mask = S
    members = to_indices(S)
    k = 0
    while k < len(members):
        x = members[k]
        row = T[x]
        for j in range(k + 1):
            y = members[j]
            z = row[y]
            if not mask >> z & 1:
                mask |= 1 << z
                members.append(z)
            z = T[y][x]
            if not mask >> z & 1:
                mask |= 1 << z
                members.append(z)
        k += 1
    return mask


def is_closed(R, S):
    return subrack_closure(R, S) == S


def _orbits(n, rows):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rows:
        for x in range(n):
            rx, ry = find(x), find(row[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return SetPartition.from_labels([find(x) for x in range(n)])


def inner_orbits(R):
    """Orbits of the group generated by all left multiplications."""
    return _orbits(R.size, R.table)


def is_connected(R):
    return len(inner_orbits(R).blocks) == 1


def is_faithful(R):
    return len(set(R.table)) == R.size


def orbit_structure(R, S):
    """Partition of the whole rack into orbits of the group generated by ``φ_s``, s in S."""
    if not is_closed(R, S):
        raise NotClosedError("orbit structure is only defined for subracks", subset=to_indices(S))
    return _orbits(R.size, [R.table[s] for s in iter_bits(S)])


def preserves_blocks(R, a, partition):
    return all(R.image(a, b) == b for b in partition.blocks)


def eta_closure(R, S):
    """Largest subrack with the same orbit structure as ``S`` (connected racks only)."""
    if not is_connected(R):
        raise HypothesisError("η is only a closure operator on connected racks")
    if S == 0 or S == R.full_mask:
        raise HypothesisError("η needs a nonempty proper subrack")
    blocks = orbit_structure(R, S)
    out = 0
    for a in range(R.size):
        if preserves_blocks(R, a, blocks):
            out |= 1 << a
    return out


def quandle_quotient(R):
    """Quotient by ``[a] = {φ_a^n(a)}`` with ``[a] * [b] = [a ▷ b]``.

    Returns the quotient quandle; ``provenance["classes"]`` lists the class
    of every quotient element as a list of original indices.
    """
    n = R.size
    cls_of = [-1] * n
    classes = []
    for a in range(n):
        orbit = 0
        x = a
        while not orbit >> x & 1:
            orbit |= 1 << x
            x = R.table[a][x]
        members = to_indices(orbit)
        known = {cls_of[m] for m in members}
        if known == {-1}:
            for m in members:
                cls_of[m] = len(classes)
            classes.append(orbit)
        elif len(known) != 1 or classes[known.pop()] != orbit:
            raise InvariantViolation(f"the sets [a] do not partition the rack (element {a})")
    k = len(classes)
    table = [[-1] * k for _ in range(k)]
    for a in range(n):
        for b in range(n):
            i, j, v = cls_of[a], cls_of[b], cls_of[R.table[a][b]]
            if table[i][j] == -1:
                table[i][j] = v
            elif table[i][j] != v:
                raise InvariantViolation("quotient operation is not well defined")
    labels = ["{" + ",".join(R.labels[m] for m in iter_bits(c)) + "}" for c in classes]
    return FiniteRack(table, labels, {"kind": "quotient",
                                      "classes": [to_indices(c) for c in classes]})


def group_mask(R, mask):
    """Inverse of :func:`elements_mask`: the group element bitmask of a subrack."""
    elements = R.provenance["elements"]
    return from_indices(elements[k] for k in iter_bits(mask))


def rack_mask(R, group_element_mask):
    """Bitmask of the rack elements lying in a group element set."""
    out = 0
    for k, g in enumerate(R.provenance["elements"]):
        if group_element_mask >> g & 1:
            out |= 1 << k
    return out


__all__ = [
    "FiniteRack", "conjugation_rack", "group_rack", "class_rack", "p_power_rack",
    "cyclic_rack", "dihedral_quandle", "trivial_rack", "AxiomReport", "check_axioms",
    "subrack_closure", "is_closed", "inner_orbits", "is_connected", "is_faithful",
    "orbit_structure", "eta_closure", "quandle_quotient", "group_mask", "rack_mask",
]
