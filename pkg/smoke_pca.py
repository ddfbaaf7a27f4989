import itertools
import random
import sys
import time

sys.path.insert(0, "src")

from arcfix import patterns as pt
from arcfix.graphs import Graph
from arcfix.oracle import brute_edit, member_oracle
from arcfix.patterns import build
from arcfix.pca import (
    bpvd, is_bipartite_permutation, pca_approx9, pca_vd, recognize_pca,
)


def union(*gs):
    n = sum(g.n for g in gs)
    out = Graph(n)
    off = 0
    for g in gs:
        for u, v in g.edges():
            out.adj[u + off] |= 1 << (v + off)
            out.adj[v + off] |= 1 << (u + off)
        off += g.n
    return out


def cyc(l):
    g = Graph(l)
    for i in range(l):
        g.adj[i] |= 1 << ((i + 1) % l)
        g.adj[(i + 1) % l] |= 1 << i
    return g


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n)
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                g.adj[u] |= 1 << v
                g.adj[v] |= 1 << u
        yield g


def rand_graph(rng, n, p):
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.adj[u] |= 1 << v
                g.adj[v] |= 1 << u
    return g


def check_bp_rec(g):
    r = is_bipartite_permutation(g)
    want = member_oracle(g, "bp")
    if r.accepted != want:
        return "bp-rec n=%d %r" % (g.n, sorted(g.edges()))
    if not r.accepted and not pt.verify_witness(g, r.witness):
        return "bp-rec witness n=%d %r %r" % (g.n, sorted(g.edges()), r.witness)
    return None


def check_pca_rec(g):
    r = recognize_pca(g)
    want = member_oracle(g, "pca")
    if r.accepted != want:
        return "pca-rec n=%d %r" % (g.n, sorted(g.edges()))
    if not r.accepted and r.witness is not None and not pt.verify_witness(g, r.witness):
        return "pca-rec witness n=%d %r %r" % (g.n, sorted(g.edges()), r.witness)
    return None


def check_bpvd(g, k):
    res = bpvd(g, k)
    opt = brute_edit(g, "bp", k1=k)
    if res.answer != (opt is not None):
        return "bpvd n=%d k=%d %r" % (g.n, k, sorted(g.edges()))
    if res.answer:
        if len(res.deleted_vertices) > k:
            return "bpvd oversize"
        rest, _ = g.delete_vertices(res.deleted_vertices)
        if not is_bipartite_permutation(rest).accepted:
            return "bpvd certificate n=%d k=%d %r" % (g.n, k, sorted(g.edges()))
    return None


def check_pca_vd(g, k):
    res = pca_vd(g, k)
    opt = brute_edit(g, "pca", k1=k)
    if res.answer != (opt is not None):
        return "pca_vd n=%d k=%d %r" % (g.n, k, sorted(g.edges()))
    if res.answer:
        if len(res.deleted_vertices) > k:
            return "pca_vd oversize"
        rest, _ = g.delete_vertices(res.deleted_vertices)
        if not recognize_pca(rest).accepted:
            return "pca_vd certificate n=%d k=%d %r del=%r" % (
                g.n, k, sorted(g.edges()), sorted(res.deleted_vertices))
    return None


def main():
    # spec examples -------------------------------------------------------
    assert is_bipartite_permutation(cyc(4)).accepted
    r = is_bipartite_permutation(cyc(6))
    assert not r.accepted and r.witness.kind.tag == "cycle" and r.witness.kind.param == 6
    r = is_bipartite_permutation(build(pt.f(1)))
    assert not r.accepted and r.witness.kind.tag == "f1"
    assert bpvd(cyc(6), 1).answer
    assert bpvd(build(pt.f(1)), 1).answer
    assert not bpvd(cyc(3), 0).answer
    assert recognize_pca(build(pt.tent())).accepted
    r = recognize_pca(build(pt.claw()))
    assert not r.accepted and r.witness.kind.tag == "claw", r.witness
    assert recognize_pca(build(pt.wheel(4))).accepted
    assert pca_vd(build(pt.claw()), 1).answer
    assert pca_vd(build(pt.tent_plus_isolated()), 1).answer
    assert pca_vd(build(pt.tent()), 0).answer
    assert pca_approx9(build(pt.tent())) == frozenset()
    assert len(pca_approx9(build(pt.claw()))) <= 7
    t3 = union(build(pt.claw()), build(pt.claw()), build(pt.claw()))
    assert len(pca_approx9(t3)) <= 21
    rest, _ = t3.delete_vertices(pca_approx9(t3))
    assert recognize_pca(rest).accepted
    print("spec examples ok")

    # exhaustive recognizers n <= 6 --------------------------------------
    t0 = time.time()
    cnt = 0
    for n in range(7):
        for g in all_graphs(n):
            cnt += 1
            r = check_bp_rec(g) or check_pca_rec(g)
            if r:
                print(r)
                return
    print("recognizers exhaustive n<=6 graphs %d ok %.1fs" % (cnt, time.time() - t0))

    # exhaustive solvers n <= 5 -------------------------------------------
    t0 = time.time()
    cnt = 0
    for n in range(6):
        for g in all_graphs(n):
            cnt += 1
            for k in (0, 1, 2):
                r = check_bpvd(g, k) or check_pca_vd(g, k)
                if r:
                    print(r)
                    return
    print("solvers exhaustive n<=5 graphs %d ok %.1fs" % (cnt, time.time() - t0))

    # random n = 7 ---------------------------------------------------------
    t0 = time.time()
    rng = random.Random(7)
    for trial in range(300):
        g = rand_graph(rng, 7, rng.choice((0.25, 0.45, 0.65, 0.85)))
        r = check_bp_rec(g) or check_pca_rec(g)
        if r:
            print(r)
            return
        k = rng.randint(0, 3)
        r = check_bpvd(g, k) or check_pca_vd(g, k)
        if r:
            print(r)
            return
    print("random trials 300 ok %.1fs" % (time.time() - t0))

    # approximation ratio --------------------------------------------------
    t0 = time.time()
    rng = random.Random(13)
    worst = 0.0
    for trial in range(200):
        n = rng.randint(5, 8)
        g = rand_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))
        sel = pca_approx9(g)
        rest, _ = g.delete_vertices(sel)
        assert recognize_pca(rest).accepted
        opt = None
        for k in range(n + 1):
            if brute_edit(g, "pca", k1=k, budget_cap=8) is not None:
                opt = k
                break
        if opt == 0:
            assert len(sel) == 0, (sorted(g.edges()), sorted(sel))
        else:
            worst = max(worst, len(sel) / opt)
    assert worst <= 9.0, worst
    print("approx trials 200 worst ratio %.2f %.1fs" % (worst, time.time() - t0))
    print("all ok")


main()
