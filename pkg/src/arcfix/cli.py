"""Command line front end.

Graphs are read from files in the plain text format: a header line `n m`
followed by m lines `u v`, with `#` starting comments.  Every command
except `gen` prints a single JSON object on stdout.  Exit codes: 0 on
success, 2 on usage errors, 3 on graph parse errors, 4 when an oracle
cap is exceeded, 1 on internal failures.
"""

import argparse
import json
import sys
import time

from . import generators
from . import patterns as pt
from .graphs import GraphParseError, format_graph, parse_graph
from .interval import pi_approx6, pi_mixed, pied, pivd
from .oracle import OracleCapError, brute_edit, member_oracle
from .pca import bpvd, is_bipartite_permutation, pca_approx9, pca_vd, recognize_pca
from .phcag import (phcag_approx6, phcag_completion, phcag_ed, phcag_mixed,
                    phcag_vd)
from .representation import (recognize_phcag, recognize_proper_interval,
                             validate_rep)
from .results import Budget

RECOGNIZERS = {
    "pi": recognize_proper_interval,
    "phcag": recognize_phcag,
    "pca": recognize_pca,
    "bp": is_bipartite_permutation,
}

APPROX = {
    "pi": pi_approx6,
    "phcag": phcag_approx6,
    "pca": pca_approx9,
}

# problem name -> (solver arity, solver, class whose recognizer checks output)
PROBLEMS = {
    "pivd": ("k", pivd, "pi"),
    "pied": ("k", pied, "pi"),
    "pi-mixed": ("k1k2", pi_mixed, "pi"),
    "phcag-vd": ("k", phcag_vd, "phcag"),
    "phcag-ed": ("k", phcag_ed, "phcag"),
    "phcag-mixed": ("k1k2", phcag_mixed, "phcag"),
    "phcag-comp": ("k", phcag_completion, "phcag"),
    "pca-vd": ("k", pca_vd, "pca"),
    "bpvd": ("k", bpvd, "bp"),
}


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(obj):
    print(json.dumps(obj))


def _stats_json(ms, nodes=0):
    return {"nodesExplored": nodes, "timeMs": ms}


def _witness_json(w):
    return {"kind": pt.kind_name(w.kind), "vertices": list(w.vertices)}


def _representation_json(rec):
    rep = {}
    if rec.path is not None:
        rep["cliquePath"] = [sorted(c) for c in rec.path]
    if rec.circle is not None:
        rep["cliqueCircle"] = [sorted(c) for c in rec.circle.cliques]
    if rec.arcs is not None:
        rep["arcs"] = {"size": rec.arcs.size,
                       "spans": [list(a) for a in rec.arcs.arcs]}
    return rep or None


def _solution_json(res):
    return {
        "deletedVertices": sorted(res.deleted_vertices),
        "deletedEdges": [list(e) for e in sorted(res.deleted_edges)],
        "addedEdges": [list(e) for e in sorted(res.added_edges)],
    }


def _apply_solution(g, res):
    cur = g.without_edges(res.deleted_edges).with_edges(res.added_edges)
    if res.deleted_vertices:
        cur, _ = cur.delete_vertices(res.deleted_vertices)
    return cur


def _verify_solution(g, res, cls):
    if not res.answer:
        return True
    return RECOGNIZERS[cls](_apply_solution(g, res)).accepted


def _verify_recognition(g, rec, cls):
    if not rec.accepted:
        return rec.witness is not None and pt.verify_witness(g, rec.witness)
    if rec.arcs is not None:
        report = validate_rep(g, rec.arcs)
        if not (report.is_rep and report.is_proper):
            return False
        if cls == "phcag" and not report.is_helly:
            return False
    return True


def _cmd_recognize(args):
    g = _load(args.graph)
    t0 = time.perf_counter()
    rec = RECOGNIZERS[args.cls](g)
    ms = int((time.perf_counter() - t0) * 1000)
    out = {"member": rec.accepted}
    if rec.witness is not None:
        out["witness"] = _witness_json(rec.witness)
    rep = _representation_json(rec)
    if rep is not None:
        out["representation"] = rep
    out["stats"] = _stats_json(ms)
    if args.verify:
        out["verified"] = _verify_recognition(g, rec, args.cls)
        if not out["verified"]:
            _emit(out)
            return 1
    _emit(out)
    return 0


def _cmd_solve(args):
    arity, solver, cls = PROBLEMS[args.problem]
    if arity == "k1k2":
        if args.k2 is None:
            raise UsageError("problem %s needs --k1 and --k2" % args.problem)
        budget = Budget(args.k, args.k2)
    else:
        if args.k2 is not None:
            raise UsageError("problem %s takes a single budget -k" % args.problem)
        budget = args.k
    g = _load(args.graph)
    t0 = time.perf_counter()
    res = solver(g, budget)
    ms = int((time.perf_counter() - t0) * 1000)
    out = {"answer": "yes" if res.answer else "no"}
    if res.answer:
        out["solution"] = _solution_json(res)
    out["stats"] = _stats_json(ms, res.stats.nodes_explored)
    if args.verify:
        out["verified"] = _verify_solution(g, res, cls)
        if not out["verified"]:
            _emit(out)
            return 1
    _emit(out)
    return 0


def _cmd_approx(args):
    g = _load(args.graph)
    t0 = time.perf_counter()
    removed = APPROX[args.cls](g)
    ms = int((time.perf_counter() - t0) * 1000)
    out = {
        "answer": "yes",
        "solution": {"deletedVertices": sorted(removed),
                     "deletedEdges": [], "addedEdges": []},
        "stats": _stats_json(ms),
    }
    if args.verify:
        rest, _ = g.delete_vertices(removed)
        out["verified"] = RECOGNIZERS[args.cls](rest).accepted
        if not out["verified"]:
            _emit(out)
            return 1
    _emit(out)
    return 0


def _cmd_oracle(args):
    g = _load(args.graph)
    t0 = time.perf_counter()
    if args.mode == "member":
        member = member_oracle(g, args.cls)
        ms = int((time.perf_counter() - t0) * 1000)
        _emit({"member": member, "stats": _stats_json(ms)})
        return 0
    found = brute_edit(g, args.cls, k1=args.k1, k2=args.k2, k3=args.k3)
    ms = int((time.perf_counter() - t0) * 1000)
    out = {"answer": "yes" if found is not None else "no"}
    if found is not None:
        verts, dels, adds = found
        out["solution"] = {
            "deletedVertices": sorted(verts),
            "deletedEdges": [list(e) for e in sorted(dels)],
            "addedEdges": [list(e) for e in sorted(adds)],
        }
    out["stats"] = _stats_json(ms)
    _emit(out)
    return 0


def _cmd_gen(args):
    if args.name is not None:
        g = generators.named(args.name)
        sys.stdout.write(format_graph(g, comment=args.name))
        return 0
    kind = args.random
    if args.n is None or args.k is None:
        raise UsageError("--random needs --n and --k")
    if kind == "planted-phcag":
        g, _ = generators.planted_phcag(args.n, args.k, seed=args.seed)
    else:
        g, _ = generators.planted_pca(args.n, args.k, seed=args.seed)
    tag = "%s n=%d k=%d seed=%d" % (kind, args.n, args.k, args.seed)
    sys.stdout.write(format_graph(g, comment=tag))
    return 0


class UsageError(Exception):
    pass


def _build_parser():
    top = argparse.ArgumentParser(prog="arcfix")
    top.add_argument("--threads", type=int, default=1,
                     help="accepted for compatibility; solvers are single threaded")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="class membership with certificate")
    p.add_argument("--class", dest="cls", required=True, choices=sorted(RECOGNIZERS))
    p.add_argument("--verify", action="store_true")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("solve", help="exact bounded modification")
    p.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    p.add_argument("-k", "--k1", dest="k", type=int, required=True)
    p.add_argument("--k2", type=int, default=None)
    p.add_argument("--verify", action="store_true")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("approx", help="constant-ratio vertex deletion")
    p.add_argument("--class", dest="cls", required=True, choices=sorted(APPROX))
    p.add_argument("--verify", action="store_true")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("oracle", help="small-instance ground truth")
    osub = p.add_subparsers(dest="mode", required=True)
    for mode in ("member", "edit"):
        q = osub.add_parser(mode)
        q.add_argument("--class", dest="cls", required=True,
                       choices=sorted(RECOGNIZERS))
        if mode == "edit":
            q.add_argument("--k1", type=int, default=0)
            q.add_argument("--k2", type=int, default=0)
            q.add_argument("--k3", type=int, default=0)
        q.add_argument("graph")
        q.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="emit a catalog or planted graph")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--name", help="catalog kind, e.g. tent or cycle:7")
    grp.add_argument("--random", choices=("planted-phcag", "planted-pca"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)
    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve" and args.k < 0:
        parser.error("budgets must be nonnegative")
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except GraphParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 3
    except OracleCapError as exc:
        print("oracle cap: %s" % exc, file=sys.stderr)
        return 4
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
