import itertools
import random
import sys
import time

sys.path.insert(0, "src")

from arcfix import oracle as orc
from arcfix import patterns as pt
from arcfix.graphs import Graph
from arcfix.interval import pi_approx6, pi_mixed, pied, pivd
from arcfix.representation import recognize_proper_interval
from arcfix.results import Budget


def apply_sol(g, res):
    h = g.without_edges(res.deleted_edges).with_edges(res.added_edges)
    h, ids = h.delete_vertices(res.deleted_vertices)
    return h


def check_yes(g, res, k1, k2):
    assert len(res.deleted_vertices) <= k1, (res, k1)
    assert len(res.deleted_edges) <= k2, (res, k2)
    assert not res.added_edges
    h = apply_sol(g, res)
    rec = recognize_proper_interval(h)
    assert rec.accepted, (g.adj, res)


# spec examples
tent = pt.build(pt.tent())
w4 = pt.build(pt.wheel(4))
claw = pt.build(pt.claw())
c4 = pt.build(pt.cycle(4))
c6 = pt.build(pt.cycle(6))

assert pivd(tent, 1).answer
assert not pivd(w4, 0).answer
assert pivd(c6, 1).answer
assert pied(claw, 1).answer
assert pied(c4, 1).answer
assert not pied(c4, 0).answer
assert pi_mixed(tent, Budget(1, 0)).answer
assert not pi_mixed(tent, Budget(0, 1)).answer
assert pi_mixed(tent, Budget(0, 2)).answer
assert not pi_mixed(w4, Budget(0, 0)).answer
assert pi_approx6(pt.build(pt.cycle(3))) == frozenset()
assert len(pi_approx6(tent)) <= 6
t3 = Graph(18)
for off in (0, 6, 12):
    for u, v in tent.edges():
        t3 = t3.with_edges([(u + off, v + off)])
x3 = pi_approx6(t3)
assert len(x3) <= 18 and recognize_proper_interval(t3.delete_vertices(x3)[0]).accepted
print("spec examples ok")

# exhaustive small sweep vs oracle
t0 = time.time()
bad = 0
count = 0
for n in range(1, 6):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        count += 1
        for k in range(3):
            want = orc.brute_edit(g, "pi", k1=k) is not None
            got = pivd(g, k)
            if got.answer != want:
                bad += 1
                print("pivd", n, bits, k, want, got.answer)
            elif got.answer:
                check_yes(g, got, k, 0)
            want = orc.brute_edit(g, "pi", k2=k) is not None
            got = pied(g, k)
            if got.answer != want:
                bad += 1
                print("pied", n, bits, k, want, got.answer)
            elif got.answer:
                check_yes(g, got, 0, k)
        for k1 in range(3):
            for k2 in range(3 - k1):
                want = orc.brute_edit(g, "pi", k1=k1, k2=k2) is not None
                got = pi_mixed(g, Budget(k1, k2))
                if got.answer != want:
                    bad += 1
                    print("mixed", n, bits, k1, k2, want, got.answer)
                elif got.answer:
                    check_yes(g, got, k1, k2)
print("exhaustive n<=5 graphs %d bad %d %.1fs" % (count, bad, time.time() - t0))

# random n=7..8
t0 = time.time()
rng = random.Random(7)
bad = 0
for trial in range(600):
    n = rng.choice([7, 8])
    p = rng.choice([0.25, 0.4, 0.55, 0.7])
    g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
    k = rng.randrange(4)
    want = orc.brute_edit(g, "pi", k1=k, n_cap=8) is not None
    got = pivd(g, k)
    if got.answer != want:
        bad += 1
        print("pivd", g.adj, k, want)
    elif got.answer:
        check_yes(g, got, k, 0)
    want = orc.brute_edit(g, "pi", k2=k, n_cap=8) is not None
    got = pied(g, k)
    if got.answer != want:
        bad += 1
        print("pied", g.adj, k, want)
    elif got.answer:
        check_yes(g, got, 0, k)
    k1 = rng.randrange(3)
    k2 = rng.randrange(3)
    want = orc.brute_edit(g, "pi", k1=k1, k2=k2, n_cap=8, budget_cap=6) is not None
    got = pi_mixed(g, Budget(k1, k2))
    if got.answer != want:
        bad += 1
        print("mixed", g.adj, k1, k2, want)
    elif got.answer:
        check_yes(g, got, k1, k2)
print("random trials 600 bad %d %.1fs" % (bad, time.time() - t0))

# approx ratio on random instances with known opt
t0 = time.time()
rng = random.Random(11)
worst = 0.0
for trial in range(300):
    n = rng.choice([6, 7, 8])
    p = rng.choice([0.3, 0.5, 0.7])
    g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
    x = pi_approx6(g)
    assert recognize_proper_interval(g.delete_vertices(x)[0]).accepted
    opt = None
    for k in range(n + 1):
        if orc.brute_edit(g, "pi", k1=k, n_cap=8, budget_cap=8) is not None:
            opt = k
            break
    assert opt is not None
    if opt == 0:
        assert len(x) == 0, (g.adj, x)
    else:
        worst = max(worst, len(x) / opt)
        assert len(x) <= 6 * opt, (g.adj, x, opt)
print("approx trials 300 worst ratio %.2f %.1fs" % (worst, time.time() - t0))
print("all ok")
