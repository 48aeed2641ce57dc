"""Command-line entry point.

Exit codes: 0 ran to completion (for ``check``: every conclusion whose
hypotheses hold is true), 1 usage or parse error, 2 a size cap was hit,
3 an internal invariant failed or a checked conclusion is false.
"""

import argparse
import json
import os
import sys

from .bits import iter_bits, popcount
from .config import DEFAULT_PRIMES, caps_from_env
from .constructions import group_from_spec, named_group
from .errors import (CapExceededError, HypothesisError, InvariantViolation, MalformedInputError,
                     RacklabError)
from .groups import center, conjugacy_classes, find_class, is_prime, sylow_p_subgroups
from .io import (complex_to_dict, dumps, load_json, poset_to_dict, poset_to_dot, suite_report,
                 write_atomic)
from .racks import (FiniteRack, check_axioms, class_rack, group_rack, is_connected, is_faithful,
                    p_power_rack)
from .theorems import (RackStudy, Verdict, check_decomposition, check_euler, check_nilpotent_class,
                       check_pi_ipi, check_product, check_sphere_theorems, inf_purity_probe,
                       spherical_and_parabolic)

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3

CLAIMS = ("sphere", "thm_p", "euler", "pi_ipi", "product", "nil", "inf_purity", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_source(p):
    src = p.add_argument_group("input")
    src.add_argument("--named", help="named group: S<n>, A<n>, Q8, Z2xS3, order48, order243, "
                                     "dihedral or cyclic (with --order)")
    src.add_argument("--order", type=int, help="order for dihedral/cyclic groups")
    src.add_argument("--file", help="group spec JSON (kind: generators | cayley | named)")
    src.add_argument("--rack-file", help="rack JSON {size, table, labels}")


def _add_rack(p):
    r = p.add_argument_group("rack construction")
    r.add_argument("--class", dest="klass",
                   help="conjugacy class: index, cycle type such as 3,3 or 'transpositions'")
    r.add_argument("--ppower", type=int, metavar="P", help="rack of all elements of P-power order")


def _add_common(p):
    p.add_argument("--out", help="directory for JSON/DOT artifacts")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    caps = p.add_argument_group("caps (flag > RACKLAB_CAPS > default)")
    caps.add_argument("--element-cap", type=int)
    caps.add_argument("--node-cap", type=int)
    caps.add_argument("--face-cap", type=int)
    caps.add_argument("--snf-threshold", type=int)
    caps.add_argument("--primes", help="comma-separated primes for modular ranks")


def build_parser():
    parser = _Parser(prog="racklab", description="Subrack lattices of conjugation racks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("group", help="summarize a group")
    _add_source(g)
    _add_common(g)

    r = sub.add_parser("rack", help="build a rack, dump it and report its axioms")
    _add_source(r)
    _add_rack(r)
    _add_common(r)

    lt = sub.add_parser("lattice", help="enumerate the subrack lattice")
    _add_source(lt)
    _add_rack(lt)
    _add_common(lt)
    lt.add_argument("--dot", help="write the Hasse diagram here")
    lt.add_argument("--json", help="write the lattice dump here")

    tp = sub.add_parser("topology", help="order complex and reduced homology")
    _add_source(tp)
    _add_rack(tp)
    _add_common(tp)
    tp.add_argument("--poset", choices=("proper", "inf", "parabolic"), default="proper")

    ck = sub.add_parser("check", help="run a checker, or the whole suite with 'all'")
    ck.add_argument("claim", choices=CLAIMS)
    _add_source(ck)
    _add_rack(ck)
    _add_common(ck)
    ck.add_argument("-p", type=int, dest="p", help="prime for euler and nil")
    ck.add_argument("--t", type=int, help="layer count for nil (reported when omitted)")
    return parser


# -- plumbing ----------------------------------------------------------------------------


class Context:
    def __init__(self, args, environ=None):
        self.args = args
        primes = DEFAULT_PRIMES
        if args.primes:
            try:
                primes = tuple(int(x) for x in args.primes.split(","))
            except ValueError:
                raise UsageError(f"bad --primes {args.primes!r}") from None
            if len(set(primes)) != len(primes) or any(p <= 2 or not is_prime(p) for p in primes):
                raise UsageError("--primes must be distinct primes greater than 2")
        self.primes = primes
        self.caps = caps_from_env(environ, element=args.element_cap, node=args.node_cap,
                                  face=args.face_cap, snf=args.snf_threshold)
        self.group = None
        self.rack = None

    def study(self, R):
        return RackStudy(R, self.caps.node, self.caps.face, self.caps.snf, self.primes)

    def write(self, name, obj):
        if self.args.out:
            text = obj if isinstance(obj, str) else dumps(obj)
            write_atomic(os.path.join(self.args.out, name), text)

    def load_group(self):
        a = self.args
        if a.named and a.file:
            raise UsageError("give either --named or --file, not both")
        if a.named:
            self.group = named_group(a.named, a.order)
        elif a.file:
            self.group = group_from_spec(load_json(a.file), self.caps.element)
        else:
            raise UsageError("no group given (use --named or --file)")
        return self.group

    def load_rack(self):
        a = self.args
        if a.rack_file:
            if a.named or a.file or a.klass is not None or a.ppower is not None:
                raise UsageError("--rack-file cannot be combined with a group source")
            R = FiniteRack.from_dict(load_json(a.rack_file))
            ax = check_axioms(R)
            if not ax.is_rack:
                raise MalformedInputError("the table does not satisfy the rack axioms",
                                          violations=ax.violations)
            self.rack = R
            return R
        G = self.load_group()
        if a.klass is not None and a.ppower is not None:
            raise UsageError("give either --class or --ppower, not both")
        if a.klass is not None:
            R = class_rack(G, find_class(G, a.klass))
        elif a.ppower is not None:
            if not is_prime(a.ppower):
                raise MalformedInputError(f"{a.ppower} is not prime", field="ppower")
            R = p_power_rack(G, a.ppower)
        else:
            R = group_rack(G)
        self.rack = R
        return R


def _say(line):
    print(line)


def _betti_text(report):
    nz = report.nonzero()
    text = ", ".join(f"b{d}={b}" for d, b in sorted(nz.items())) or "acyclic"
    tors = {d: t for d, t in report.torsion.items() if t}
    if tors:
        text += f" torsion={tors}"
    return f"{text} chi~={report.chi_tilde}"


# -- commands -----------------------------------------------------------------------------


def cmd_group(ctx):
    G = ctx.load_group()
    classes = conjugacy_classes(G)
    primes = [p for p in range(2, G.order + 1) if G.order % p == 0 and is_prime(p)]
    summary = {"name": G.name, "order": G.order, "degree": G.degree,
               "class_count": len(classes), "class_sizes": [popcount(c) for c in classes],
               "class_representatives": [G.label((c & -c).bit_length() - 1) for c in classes],
               "center_order": popcount(center(G)),
               "sylow_counts": {str(p): len(sylow_p_subgroups(G, p)) for p in primes}}
    ctx.write("group.json", summary)
    _say(f"order {G.order}, {len(classes)} classes, center {summary['center_order']}, "
         f"Sylow counts {summary['sylow_counts']}")
    if not ctx.args.out:
        print(dumps(summary), end="")
    return EXIT_OK


def _rack_flags(R):
    ax = check_axioms(R)
    return {"size": R.size, "is_rack": ax.is_rack, "is_quandle": ax.is_quandle,
            "connected": is_connected(R), "faithful": is_faithful(R)}


def cmd_rack(ctx):
    R = ctx.load_rack()
    flags = _rack_flags(R)
    ctx.write("rack.json", R.to_dict())
    ctx.write("rack_report.json", flags)
    _say(" ".join(f"{k}={v}" for k, v in flags.items()))
    if not ctx.args.out:
        print(dumps(R.to_dict()), end="")
    return EXIT_OK


def _lattice_artifacts(ctx, st):
    L = st.lattice
    a = ctx.args
    if a.dot:
        write_atomic(a.dot, poset_to_dot(L, "subracks"))
    if a.json:
        write_atomic(a.json, dumps(poset_to_dict(L)))
    ctx.write("lattice.json", poset_to_dict(L))
    ctx.write("lattice.dot", poset_to_dot(L, "subracks"))
    ctx.write("inf.json", poset_to_dict(st.inf))
    sp = spherical_and_parabolic(ctx.rack, study=st)
    ctx.write("spherical.json", poset_to_dict(L.subposet(sp.spherical)))
    ctx.write("parabolic.json", poset_to_dict(L.subposet(sp.parabolic)))
    return {"nodes": len(L), "inf": len(st.inf), "coatoms": len(L.coatoms()),
            "spherical": len(sp.spherical), "parabolic": len(sp.parabolic)}


def cmd_lattice(ctx):
    R = ctx.load_rack()
    st = ctx.study(R)
    out = _lattice_artifacts(ctx, st)
    _say(" ".join(f"{k}={v}" for k, v in out.items()))
    return EXIT_OK


def cmd_topology(ctx):
    R = ctx.load_rack()
    st = ctx.study(R)
    which = ctx.args.poset
    if which == "proper":
        P = st.proper
    elif which == "inf":
        P = st.inf
    else:
        sp = spherical_and_parabolic(R, study=st)
        P = st.lattice.subposet(sp.parabolic)
    from .topology import order_complex

    K = order_complex(P, ctx.caps.face)
    hom = st.homology_of(P)
    ctx.write(f"complex_{which}.json", complex_to_dict(K))
    ctx.write(f"homology_{which}.json", hom.to_dict())
    _say(f"{which}: {len(P)} elements, {len(K.faces)} faces, {_betti_text(hom)}")
    return EXIT_OK


def _need_group(ctx):
    if ctx.rack.provenance.get("group") is None:
        raise UsageError("this check needs a group source (--named or --file)")
    return ctx.rack.provenance["group"]


def _run_claim(ctx, claim):
    a = ctx.args
    if claim == "euler":
        G = ctx.load_group()
        if a.p is None:
            raise UsageError("euler needs -p")
        if not is_prime(a.p):
            raise MalformedInputError(f"{a.p} is not prime", field="p")
        return check_euler(G, a.p, ctx.study(p_power_rack(G, a.p)))
    R = ctx.load_rack()
    if claim == "sphere":
        return check_sphere_theorems(R, ctx.study(R))
    if claim == "thm_p":
        return check_decomposition(R, ctx.study(R))
    if claim == "pi_ipi":
        return check_pi_ipi(R, ctx.study(R))
    if claim == "inf_purity":
        return inf_purity_probe(R, ctx.study(R))
    if claim == "product":
        G = _need_group(ctx)
        X = sum(1 << g for g in ctx.rack.provenance["elements"])
        return check_product(G, X, ctx.caps.node)
    if claim == "nil":
        p = a.p
        if p is None:
            raise UsageError("nil needs -p")
        return check_nilpotent_class(ctx.study(R).lattice, p, a.t)
    raise UsageError(f"unknown claim {claim!r}")  # pragma: no cover


def _verdict_line(name, v):
    status = "PASS" if v.passed else ("n/a (hypotheses fail)" if not v.hypotheses_hold else "FAIL")
    return f"{name}: {status}"


def cmd_check(ctx):
    a = ctx.args
    if a.claim == "all":
        from .suite import run_suite

        results = run_suite(seed=a.seed)
        for name, v in results:
            ctx.write(f"check_{name}.json", v.to_dict())
            _say(_verdict_line(name, v))
        report = suite_report(results)
        ctx.write("report.json", report)
        return EXIT_OK if report["all_conclusions_hold"] else EXIT_INTERNAL
    try:
        v = _run_claim(ctx, a.claim)
    except HypothesisError as exc:
        # a failed precondition is a recorded outcome, not a tool failure
        v = Verdict(a.claim, False, False, {"reason": str(exc)})
    ctx.write(f"check_{a.claim}.json", v.to_dict())
    _say(_verdict_line(a.claim, v))
    summary = {k: v.data[k] for k in ("homology", "proper", "chi_tilde", "divisible", "length",
                                      "fitting_t", "candidate") if k in v.data}
    if summary:
        _say(json.dumps(summary, sort_keys=True))
    if not ctx.args.out:
        print(dumps(v.to_dict()), end="")
    if v.hypotheses_hold and not v.conclusion_holds:
        return EXIT_INTERNAL
    return EXIT_OK


COMMANDS = {"group": cmd_group, "rack": cmd_rack, "lattice": cmd_lattice,
            "topology": cmd_topology, "check": cmd_check}


def _write_partial(args, exc):
    partial = getattr(exc, "partial", None)
    if partial is None or not getattr(args, "out", None):
        return
    if isinstance(partial, list) and all(isinstance(x, int) for x in partial):
        partial = {"closed_sets_found": len(partial),
                   "closed_sets": [list(iter_bits(m)) for m in partial[:10000]]}
    write_atomic(os.path.join(args.out, "partial.json"), dumps({"partial": partial,
                                                               "error": exc.to_dict()}))


def main(argv=None, environ=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        ctx = Context(args, environ)
        return COMMANDS[args.command](ctx)
    except UsageError as exc:
        print(f"racklab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        _write_partial(args, exc)
        print(f"racklab: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as exc:
        print(f"racklab: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except RacklabError as exc:
        print(f"racklab: {json.dumps(exc.to_dict(), sort_keys=True)}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
