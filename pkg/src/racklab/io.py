"""JSON and DOT serialization, plus atomic file writes.

Output is deterministic: keys are sorted and node order follows node ids, so
identical inputs give byte-identical files.
"""

import json
import os
import tempfile

from .errors import MalformedInputError
from .poset import payload_json


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def write_atomic(path, text):
    """Write ``text`` to ``path`` via a temporary file in the same directory."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_json(path):
    """Parse a JSON file, turning syntax errors into diagnostics with a line number."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}", path=str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}",
                                  path=str(path), line=exc.lineno, column=exc.colno) from None


# -- posets ------------------------------------------------------------------------


def _payload(P, i):
    return P.describe(i) if P.formatter is not None else payload_json(P.payloads[i])


def poset_to_dict(P):
    nodes = [{"id": i, "payload": _payload(P, i)} for i in range(len(P))]
    covers = [[i, j] for i in range(len(P)) for j in sorted(P.upper_covers(i))]
    return {"nodes": nodes, "covers": covers}


def poset_from_dict(data):
    from .poset import Poset

    try:
        nodes = sorted(data["nodes"], key=lambda n: n["id"])
        covers = [tuple(c) for c in data["covers"]]
    except (KeyError, TypeError) as exc:
        raise MalformedInputError(f"poset dump is missing {exc}", field="nodes") from None
    if [n["id"] for n in nodes] != list(range(len(nodes))):
        raise MalformedInputError("node ids must be 0..n-1", field="nodes")
    return Poset.from_covers([n["payload"] for n in nodes], covers)


def _dot_label(text):
    if not isinstance(text, str):
        text = json.dumps(text, sort_keys=True, separators=(",", ":"))
    return text.replace("\\", "\\\\").replace('"', '\\"')


def poset_to_dot(P, name="poset", labels=True):
    """Hasse diagram with one ``rank=same`` row per height."""
    heights = P.heights()
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for i in range(len(P)):
        label = _dot_label(_payload(P, i)) if labels else str(i)
        lines.append(f'  n{i} [label="{label}"];')
    rows = {}
    for i, h in enumerate(heights):
        rows.setdefault(h, []).append(i)
    for h in sorted(rows):
        members = " ".join(f"n{i};" for i in rows[h])
        lines.append(f"  {{ rank=same; {members} }}")
    for i in range(len(P)):
        for j in sorted(P.upper_covers(i)):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- complexes, homology, verdicts ----------------------------------------------------


def complex_to_dict(K):
    return {"facets": [list(F) for F in K.facets()]}


def complex_from_dict(data):
    from .topology import SimplicialComplex

    try:
        facets = data["facets"]
    except (KeyError, TypeError):
        raise MalformedInputError("complex dump needs a 'facets' field", field="facets") from None
    return SimplicialComplex.from_facets([tuple(int(v) for v in F) for F in facets])


def homology_to_dict(report):
    return report.to_dict()


def verdict_to_dict(v):
    return v.to_dict()


def suite_report(verdicts):
    """Aggregate verdicts into one report keyed by position, with per-claim status."""
    entries = []
    for name, v in verdicts:
        d = v.to_dict()
        d["name"] = name
        d["status"] = "pass" if v.conclusion_holds else "fail"
        entries.append(d)
    return {"all_conclusions_hold": all(v.conclusion_holds for _, v in verdicts),
            "checks": entries}
