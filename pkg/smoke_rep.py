import math
import random
import sys

sys.path.insert(0, "src")

from arcfix.graphs import Graph
from arcfix import patterns as pt
from arcfix import representation as rep
from arcfix import oracle


def cycle_graph(l):
    return Graph(l, [(i, (i + 1) % l) for i in range(l)])


def cocktail(p):
    n = 2 * p
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if v != u + p or u >= p])


# maximal_cliques examples
c5 = cycle_graph(5)
assert len(rep.maximal_cliques(c5, 6)) == 5
try:
    rep.maximal_cliques(cocktail(3), 6)
    raise SystemExit("expected TooManyCliques")
except rep.TooManyCliques:
    pass
tent = pt.build(pt.tent())
ks = rep.maximal_cliques(tent, 7)
assert len(ks) == 4, ks
assert frozenset({0, 1, 2}) in ks

# clique_circle examples
cc4 = rep.clique_circle(cycle_graph(4))
assert cc4 is not None and cc4.size == 4
cc7 = rep.clique_circle(cycle_graph(7))
assert cc7 is not None and cc7.size == 7

# arcs_from_circle on K3
k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
a3 = rep.arcs_from_circle(rep.clique_circle(k3))
assert len(set(a3.arcs)) == 1, a3

# validate_rep: three arcs pairwise meeting, empty center
tri = rep.ArcRep(6, ((0, 2), (2, 4), (4, 0)))
r = rep.validate_rep(k3, tri)
assert r.is_rep and not r.is_helly and r.min_cover == 3, r

# tent fixture, size 12
tent_arcs = rep.ArcRep(12, ((0, 5), (4, 9), (8, 1), (3, 6), (7, 10), (11, 2)))
r = rep.validate_rep(tent, tent_arcs)
assert r.is_rep and r.is_proper and not r.is_helly, r
assert r.helly_violation == frozenset({0, 1, 2}), r

# C7 native arcs
r = rep.validate_rep(cycle_graph(7), rep.arcs_from_circle(cc7))
assert r.is_rep and r.is_proper and r.is_helly and r.min_cover >= 4, r

# recognize_phcag examples
w4 = pt.build(pt.wheel(4))
res = rep.recognize_phcag(w4)
assert not res.accepted and res.witness.kind == pt.wheel(4), res
res = rep.recognize_phcag(cycle_graph(7))
assert res.accepted and res.circle.size == 7
tent_k1 = Graph(7, list(tent.edges()))
res = rep.recognize_phcag(tent_k1)
assert not res.accepted and res.witness.kind == pt.tent(), res

# C5 + K1 must reject with cycle-plus-isolated witness
c5k1 = Graph(6, [(i, (i + 1) % 5) for i in range(5)])
res = rep.recognize_phcag(c5k1)
assert not res.accepted and res.witness.kind == pt.cstar(5), res
assert pt.verify_witness(c5k1, res.witness)

# recognize_proper_interval examples
p5 = Graph(5, [(i, i + 1) for i in range(4)])
res = rep.recognize_proper_interval(p5)
assert res.accepted and len(res.path) == 4, res
res = rep.recognize_proper_interval(cycle_graph(4))
assert not res.accepted and res.witness.kind == pt.cycle(4)
net = pt.build(pt.net())
res = rep.recognize_proper_interval(net)
assert not res.accepted and res.witness.kind == pt.net()

# min_point_load
i, s = rep.min_point_load(rep.clique_circle(cycle_graph(6)))
assert len(s) == 1, (i, s)
diamond = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
cd = rep.clique_circle(diamond)
assert cd.size == 2
i, s = rep.min_point_load(cd)
assert i == 0 and len(s) == 0, (i, s)
i, s = rep.min_point_load(rep.clique_circle(cycle_graph(9)))
assert len(s) == 1, (i, s)

print("fixtures ok")

# cross-validate against the oracle
rng = random.Random(11)
bad = 0
trials = 0
for t in range(4000):
    n = rng.randint(1, 8)
    p = rng.choice([0.2, 0.35, 0.5, 0.65, 0.8])
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < p])
    trials += 1
    want_pi = oracle.member_oracle(g, "pi")
    want_ph = oracle.member_oracle(g, "phcag")
    rp = rep.recognize_proper_interval(g)
    rh = rep.recognize_phcag(g)
    if rp.accepted != want_pi or rh.accepted != want_ph:
        bad += 1
        print("MISMATCH", g.key(), want_pi, rp.accepted, want_ph, rh.accepted)
        if bad > 4:
            break
    if rp.witness is not None:
        assert pt.verify_witness(g, rp.witness), ("pi witness", g.key())
    if rh.witness is not None:
        assert pt.verify_witness(g, rh.witness), ("ph witness", g.key())
    if rh.accepted and rh.arcs is not None:
        rr = rep.validate_rep(g, rh.arcs)
        assert rr.is_rep and rr.is_helly, (g.key(), rr)
    if rp.accepted:
        # clique path sanity: consecutive cliques within a component share
        seen = set()
        for k in rp.path:
            seen |= k
        assert seen == set(range(g.n)) or g.n == 0 or \
            seen == {v for v in range(g.n)}, g.key()

print("random trials", trials, "mismatches", bad)
