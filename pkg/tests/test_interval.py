import pytest

from arcfix import patterns as pt
from arcfix.interval import pi_approx6, pi_mixed, pied, pivd
from arcfix.oracle import brute_edit, brute_opt, member_oracle
from arcfix.results import Budget
from _corpus import all_graphs, cyc, random_graph


def _check_yes(g, res, k1=0, k2=0):
    assert res.answer
    assert len(res.deleted_vertices) <= k1
    assert len(res.deleted_edges) <= k2
    assert not res.added_edges
    final, _ = g.without_edges(res.deleted_edges).delete_vertices(res.deleted_vertices)
    assert member_oracle(final, "pi")


def test_tent_facts():
    tent = pt.build(pt.tent())
    assert not pied(tent, 1).answer
    _check_yes(tent, pied(tent, 2), k2=2)
    assert not pi_mixed(tent, Budget(0, 1)).answer
    _check_yes(tent, pi_mixed(tent, Budget(1, 0)), k1=1)
    _check_yes(tent, pivd(tent, 1), k1=1)


def test_small_obstruction_facts():
    _check_yes(pt.build(pt.claw()), pivd(pt.build(pt.claw()), 1), k1=1)
    _check_yes(cyc(4), pivd(cyc(4), 1), k1=1)
    assert not pivd(cyc(4), 0).answer
    assert pivd(cyc(3), 0).answer
    _check_yes(cyc(6), pied(cyc(6), 1), k2=1)


def test_rejects_negative_budget():
    g = cyc(4)
    with pytest.raises(ValueError):
        pivd(g, -1)
    with pytest.raises(ValueError):
        pied(g, -1)
    with pytest.raises(ValueError):
        pi_mixed(g, Budget(-1, 0))


def test_stats_populated():
    res = pivd(pt.build(pt.tent()), 1)
    assert res.stats.nodes_explored >= 1
    d = res.stats.as_dict()
    assert set(d) == {"nodesExplored", "maxDepth"}


def test_exhaustive_small_vs_oracle():
    for n in range(6):
        for g in all_graphs(n):
            for k in range(3):
                want = brute_edit(g, "pi", k1=k) is not None
                res = pivd(g, k)
                assert res.answer == want, (g.key(), k)
                if res.answer:
                    _check_yes(g, res, k1=k)
                want = brute_edit(g, "pi", k2=k) is not None
                res = pied(g, k)
                assert res.answer == want, (g.key(), k)
                if res.answer:
                    _check_yes(g, res, k2=k)
            for k1, k2 in ((0, 1), (1, 1), (1, 2), (2, 1)):
                want = brute_edit(g, "pi", k1=k1, k2=k2) is not None
                res = pi_mixed(g, Budget(k1, k2))
                assert res.answer == want, (g.key(), k1, k2)
                if res.answer:
                    _check_yes(g, res, k1=k1, k2=k2)


def test_random_medium_vs_oracle(rng):
    for _ in range(120):
        g = random_graph(rng, rng.randint(6, 7), rng.choice((0.3, 0.5, 0.7)))
        k = rng.randint(0, 3)
        assert pivd(g, k).answer == (brute_edit(g, "pi", k1=k) is not None)
        assert pied(g, k).answer == (brute_edit(g, "pi", k2=k) is not None)


def test_approx6_ratio(rng):
    graphs = [pt.build(pt.tent()), pt.build(pt.claw()), cyc(7)]
    graphs += [random_graph(rng, rng.randint(4, 8), 0.5) for _ in range(60)]
    for g in graphs:
        sel = pi_approx6(g)
        rest, _ = g.delete_vertices(sel)
        assert member_oracle(rest, "pi")
        opt = brute_opt(g, "pi", k1=4, budget_cap=4)
        if opt is not None:
            assert len(sel) <= 6 * opt
            if opt == 0:
                assert not sel
