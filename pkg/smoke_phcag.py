import itertools
import random
import sys
import time

sys.path.insert(0, "src")

from arcfix import patterns as pt
from arcfix.graphs import Graph, iter_bits
from arcfix.oracle import brute_edit
from arcfix.phcag import (
    BetaTable, hole_contexts, phcag_approx6, phcag_completion, phcag_ed,
    phcag_mixed, phcag_vd,
)
from arcfix.representation import recognize_phcag
from arcfix.results import Budget


def union(g1, g2):
    g = Graph(g1.n + g2.n)
    for u, v in g1.edges():
        g.adj[u] |= 1 << v
        g.adj[v] |= 1 << u
    for u, v in g2.edges():
        g.adj[u + g1.n] |= 1 << (v + g1.n)
        g.adj[v + g1.n] |= 1 << (u + g1.n)
    return g


def cyc(l, extra=0):
    g = Graph(l + extra)
    for i in range(l):
        g.adj[i] |= 1 << ((i + 1) % l)
        g.adj[(i + 1) % l] |= 1 << i
    return g


def check_vd(g, k):
    res = phcag_vd(g, k)
    opt = brute_edit(g, "phcag", k1=k)
    if res.answer != (opt is not None):
        return "vd answer n=%d k=%d %r" % (g.n, k, sorted(g.edges()))
    if res.answer:
        if len(res.deleted_vertices) > k:
            return "vd oversize"
        rest, _ = g.delete_vertices(res.deleted_vertices)
        if not recognize_phcag(rest).accepted:
            return "vd bad certificate n=%d k=%d %r del=%r" % (
                g.n, k, sorted(g.edges()), sorted(res.deleted_vertices))
    return None


def check_ed(g, k):
    res = phcag_ed(g, k)
    opt = brute_edit(g, "phcag", k2=k)
    if res.answer != (opt is not None):
        return "ed answer n=%d k=%d %r" % (g.n, k, sorted(g.edges()))
    if res.answer:
        if len(res.deleted_edges) > k:
            return "ed oversize"
        rest = g.without_edges(res.deleted_edges)
        if not recognize_phcag(rest).accepted:
            return "ed bad certificate n=%d k=%d %r del=%r" % (
                g.n, k, sorted(g.edges()), sorted(res.deleted_edges))
    return None


def check_mixed(g, k1, k2):
    res = phcag_mixed(g, Budget(k1, k2))
    opt = brute_edit(g, "phcag", k1=k1, k2=k2)
    if res.answer != (opt is not None):
        return "mixed answer n=%d k=(%d,%d) %r" % (g.n, k1, k2, sorted(g.edges()))
    if res.answer:
        if len(res.deleted_vertices) > k1 or len(res.deleted_edges) > k2:
            return "mixed oversize"
        rest = g.without_edges(res.deleted_edges)
        rest, _ = rest.delete_vertices(res.deleted_vertices)
        if not recognize_phcag(rest).accepted:
            return "mixed bad certificate n=%d k=(%d,%d) %r" % (
                g.n, k1, k2, sorted(g.edges()))
    return None


def check_comp(g, k):
    res = phcag_completion(g, k)
    opt = brute_edit(g, "phcag", k3=k)
    if res.answer != (opt is not None):
        return "comp answer n=%d k=%d %r" % (g.n, k, sorted(g.edges()))
    if res.answer:
        if len(res.added_edges) > k:
            return "comp oversize"
        grown = g.with_edges(res.added_edges)
        if not recognize_phcag(grown).accepted:
            return "comp bad certificate n=%d k=%d %r add=%r" % (
                g.n, k, sorted(g.edges()), sorted(res.added_edges))
    return None


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n)
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                g.adj[u] |= 1 << v
                g.adj[v] |= 1 << u
        yield g


def main():
    # spec examples -------------------------------------------------------
    from arcfix.patterns import build as realize
    w4 = realize(pt.wheel(4))
    tent = realize(pt.tent())
    claw = realize(pt.claw())
    c4s = realize(pt.cstar(4))
    assert phcag_vd(w4, 1).answer
    assert not phcag_vd(tent, 0).answer
    assert phcag_vd(union(tent, cyc(7)), 6).answer
    assert phcag_ed(claw, 1).answer
    assert phcag_ed(tent, 1).answer == (brute_edit(tent, "phcag", k2=1) is not None)
    assert phcag_mixed(union(w4, w4), Budget(1, 8)).answer
    assert phcag_completion(c4s, 1).answer
    assert not phcag_completion(c4s, 0).answer
    assert phcag_completion(cyc(7), 0).answer
    print("spec examples ok")

    # beta fixture: C9 plus one isolated vertex, interior window ---------
    g = cyc(9, extra=1)
    host = sum(1 << i for i in range(9))
    hole = tuple(range(9))
    costs = set()
    for i, ctx in enumerate(hole_contexts(g, hole, host, 2)):
        if i >= 4:
            break
        tab = BetaTable(ctx, 2)
        costs.add(tab.lookup(1, 2, 8)[0])
        assert BetaTable(ctx, 1).lookup(0, 2, 8)[0] == 0
    assert costs == {2}, costs
    print("beta fixture ok")

    # exhaustive n <= 5 ---------------------------------------------------
    t0 = time.time()
    bad = []
    cnt = 0
    for n in range(6):
        for g in all_graphs(n):
            cnt += 1
            for k in (0, 1, 2):
                for f in (check_vd, check_ed, check_comp):
                    r = f(g, k)
                    if r:
                        bad.append(r)
            for k1, k2 in ((1, 1), (2, 1), (0, 2)):
                r = check_mixed(g, k1, k2)
                if r:
                    bad.append(r)
            if bad:
                print(bad[:3])
                return
    print("exhaustive n<=5 graphs %d bad %d %.1fs" % (cnt, len(bad), time.time() - t0))

    # random n = 7 --------------------------------------------------------
    t0 = time.time()
    rng = random.Random(11)
    bad = []
    for trial in range(300):
        n = 7
        p = rng.choice((0.25, 0.4, 0.55, 0.7))
        g = Graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    g.adj[u] |= 1 << v
                    g.adj[v] |= 1 << u
        k = rng.randint(0, 3)
        checks = [check_vd(g, k), check_ed(g, k), check_comp(g, min(k, 2))]
        k2 = rng.randint(0, 2)
        checks.append(check_mixed(g, k, k2) if k + k2 <= 4 else None)
        for r in checks:
            if r:
                bad.append(r)
        if bad:
            print(bad[:3])
            return
    print("random trials 300 bad %d %.1fs" % (len(bad), time.time() - t0))

    # approximation ratio -------------------------------------------------
    t0 = time.time()
    rng = random.Random(23)
    worst = 0.0
    for trial in range(200):
        n = rng.randint(5, 8)
        p = rng.choice((0.3, 0.5, 0.7))
        g = Graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    g.adj[u] |= 1 << v
                    g.adj[v] |= 1 << u
        sel = phcag_approx6(g)
        rest, _ = g.delete_vertices(sel)
        assert recognize_phcag(rest).accepted
        opt = None
        for k in range(n + 1):
            if brute_edit(g, "phcag", k1=k, budget_cap=8) is not None:
                opt = k
                break
        if opt == 0:
            assert len(sel) == 0, (sorted(g.edges()), sorted(sel))
        else:
            worst = max(worst, len(sel) / opt)
    assert worst <= 6.0, worst
    print("approx trials 200 worst ratio %.2f %.1fs" % (worst, time.time() - t0))
    print("all ok")


main()
