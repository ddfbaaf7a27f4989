import pytest

from arcfix import patterns as pt
from arcfix.generators import planted_pca
from arcfix.graphs import Graph
from arcfix.oracle import brute_edit, member_all, member_oracle
from arcfix.pca import (LONG_HOLE_CAP, _long_hole, bpvd,
                        is_bipartite_permutation, pca_approx9, pca_vd,
                        recognize_pca, reduced_check)
from _corpus import all_graphs, cyc, random_graph, union


def test_long_hole():
    assert _long_hole(cyc(7), 6) == tuple(range(7))
    assert _long_hole(cyc(5), 6) is None
    assert _long_hole(cyc(5), 5) == tuple(range(5))
    # chords disqualify: C6 plus a long chord has no 6-hole
    g = cyc(6).with_edges([(0, 3)])
    assert _long_hole(g, 6) is None
    assert _long_hole(g, 4) is not None


def test_bp_recognition_examples():
    assert is_bipartite_permutation(cyc(4)).accepted
    r = is_bipartite_permutation(cyc(6))
    assert not r.accepted and r.witness.kind == pt.cycle(6)
    assert pt.verify_witness(cyc(6), r.witness)
    r = is_bipartite_permutation(cyc(5))
    assert not r.accepted and r.witness.kind.tag == "cycle"
    assert r.witness.kind.param % 2 == 1
    f1 = pt.build(pt.f(1))
    r = is_bipartite_permutation(f1)
    assert not r.accepted and r.witness.kind.tag == "f1"
    assert pt.verify_witness(f1, r.witness)


def test_bp_long_hole_cap():
    big = union(cyc(4), Graph(61))
    with pytest.raises(ValueError):
        is_bipartite_permutation(big)
    assert is_bipartite_permutation(big, hole_cap=big.n).accepted
    assert LONG_HOLE_CAP == 64


def test_bpvd_facts():
    res = bpvd(cyc(6), 1)
    assert res.answer and len(res.deleted_vertices) == 1
    rest, _ = cyc(6).delete_vertices(res.deleted_vertices)
    assert member_oracle(rest, "bp")
    assert bpvd(pt.build(pt.f(1)), 1).answer
    assert not bpvd(cyc(3), 0).answer


def test_bpvd_pluggable_impl():
    calls = []

    def fake(g, k):
        calls.append((g.n, k))
        return "sentinel"

    assert bpvd(cyc(6), 2, impl=fake) == "sentinel"
    assert calls == [(6, 2)]


def test_recognize_pca_examples():
    assert recognize_pca(pt.build(pt.tent())).accepted
    assert recognize_pca(pt.build(pt.wheel(4))).accepted
    assert recognize_pca(cyc(6)).accepted
    for kind in (pt.claw(), pt.prism(), pt.wheel(5), pt.tent_plus_isolated()):
        g = pt.build(kind)
        r = recognize_pca(g)
        assert not r.accepted, kind
        assert pt.verify_witness(g, r.witness), kind
    r = recognize_pca(pt.build(pt.claw()))
    assert r.witness.kind == pt.claw()


def test_reduced_check():
    rc = reduced_check(cyc(7))
    assert rc.connected and rc.co_connected and rc.fis_free
    rc = reduced_check(pt.build(pt.tent_plus_isolated()))
    assert not rc.connected and not rc.fis_free
    assert rc.witness.kind.tag == "tent-iso"
    rc = reduced_check(cyc(4))
    assert rc.connected and not rc.co_connected and rc.fis_free


def test_pca_vd_facts():
    assert pca_vd(pt.build(pt.tent()), 0).answer
    for kind in (pt.claw(), pt.tent_plus_isolated(), pt.wheel(5)):
        g = pt.build(kind)
        assert not pca_vd(g, 0).answer, kind
        res = pca_vd(g, 1)
        assert res.answer, kind
        rest, _ = g.delete_vertices(res.deleted_vertices)
        assert member_oracle(rest, "pca"), kind


def test_exhaustive_recognizers_small():
    for n in range(6):
        for g in all_graphs(n):
            truth = member_all(g)
            rb = is_bipartite_permutation(g)
            assert rb.accepted == truth["bp"], g.key()
            if not rb.accepted:
                assert pt.verify_witness(g, rb.witness), g.key()
            rp = recognize_pca(g)
            assert rp.accepted == truth["pca"], g.key()
            if not rp.accepted:
                assert pt.verify_witness(g, rp.witness), g.key()


def test_exhaustive_solvers_small():
    for n in range(6):
        for g in all_graphs(n):
            for k in (0, 1, 2):
                res = bpvd(g, k)
                assert res.answer == (brute_edit(g, "bp", k1=k) is not None)
                if res.answer:
                    rest, _ = g.delete_vertices(res.deleted_vertices)
                    assert member_oracle(rest, "bp")
                res = pca_vd(g, k)
                assert res.answer == (brute_edit(g, "pca", k1=k) is not None)
                if res.answer:
                    rest, _ = g.delete_vertices(res.deleted_vertices)
                    assert member_oracle(rest, "pca")


def test_random_medium_vs_oracle(rng):
    for _ in range(100):
        g = random_graph(rng, 7, rng.choice((0.25, 0.45, 0.65, 0.85)))
        truth = member_all(g)
        assert is_bipartite_permutation(g).accepted == truth["bp"]
        assert recognize_pca(g).accepted == truth["pca"]
        k = rng.randint(0, 3)
        assert bpvd(g, k).answer == (brute_edit(g, "bp", k1=k) is not None)
        assert pca_vd(g, k).answer == (brute_edit(g, "pca", k1=k) is not None)


def test_approx9(rng):
    assert pca_approx9(pt.build(pt.tent())) == frozenset()
    assert len(pca_approx9(pt.build(pt.claw()))) <= 7
    t3 = union(*(pt.build(pt.claw()) for _ in range(3)))
    sel = pca_approx9(t3)
    assert len(sel) <= 21
    rest, _ = t3.delete_vertices(sel)
    assert recognize_pca(rest).accepted
    for _ in range(60):
        g = random_graph(rng, rng.randint(5, 8), rng.choice((0.3, 0.5, 0.7)))
        sel = pca_approx9(g)
        rest, _ = g.delete_vertices(sel)
        assert recognize_pca(rest).accepted
        opt = next(k for k in range(g.n + 1)
                   if brute_edit(g, "pca", k1=k, budget_cap=8) is not None)
        if opt == 0:
            assert not sel
        else:
            assert len(sel) <= 9 * opt


def test_planted_pca_quick():
    g, defects = planted_pca(40, 2, seed=5)
    assert not pca_vd(g, 1).answer
    res = pca_vd(g, 2)
    assert res.answer
    rest, _ = g.delete_vertices(res.deleted_vertices)
    assert recognize_pca(rest).accepted
