import itertools

import pytest

from arcfix import patterns as pt
from arcfix.graphs import Graph
from arcfix.generators import cocktail_party
from arcfix.oracle import (CLASSES, OracleCapError, brute_edit, brute_opt,
                           member_all, member_oracle)
from _corpus import all_graphs, cyc, random_graph, union


def test_member_pinned_facts():
    tent = pt.build(pt.tent())
    assert member_oracle(tent, "pca")
    assert not member_oracle(tent, "phcag")
    assert not member_oracle(tent, "pi")

    w4 = pt.build(pt.wheel(4))
    assert member_oracle(w4, "pca")
    assert not member_oracle(w4, "phcag")

    assert member_oracle(cyc(7), "phcag")
    assert not member_oracle(cyc(7), "pi")
    assert member_oracle(cyc(7, extra=1), "bp") is False  # odd cycle inside

    # octahedron: every neighborhood is a 4-wheel rim
    k222 = cocktail_party(3)
    assert member_oracle(k222, "pca")
    assert not member_oracle(k222, "phcag")

    prism = pt.build(pt.prism())
    assert not member_oracle(prism, "pca")

    c5star = cyc(5, extra=1)
    assert not member_oracle(c5star, "pca")
    assert not member_oracle(c5star, "phcag")

    assert member_oracle(cyc(4), "bp")
    assert not member_oracle(cyc(6), "bp")
    assert not member_oracle(pt.build(pt.f(1)), "bp")


def test_member_rejects_unknown_class():
    with pytest.raises(ValueError):
        member_oracle(cyc(4), "interval")


def test_class_containments_exhaustive():
    for n in range(6):
        for g in all_graphs(n):
            m = member_all(g)
            if m["pi"]:
                assert m["phcag"]
            if m["phcag"]:
                assert m["pca"]


def test_member_all_matches_member_oracle(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7), 0.5)
        m = member_all(g)
        assert m == {c: member_oracle(g, c) for c in CLASSES}


def test_membership_cap():
    with pytest.raises(OracleCapError):
        member_oracle(Graph(13), "pi")
    with pytest.raises(OracleCapError):
        member_all(Graph(13))


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("ARCFIX_ORACLE_CAP", "5")
    with pytest.raises(OracleCapError):
        member_oracle(Graph(6), "pi")
    # editing budget cap is lifted alongside
    res = brute_edit(cyc(4), "pi", k2=5)
    assert res is not None and sum(map(len, res)) == 1
    monkeypatch.setenv("ARCFIX_ORACLE_CAP", "not-a-number")
    assert member_oracle(Graph(12), "pi")


def test_edit_caps():
    with pytest.raises(OracleCapError):
        brute_edit(Graph(10), "pi", k1=1)
    with pytest.raises(OracleCapError):
        brute_edit(cyc(4), "pi", k1=3, k2=2)


def test_brute_edit_examples():
    claw = pt.build(pt.claw())
    assert brute_edit(claw, "pi", k1=1) == (frozenset({0}), frozenset(), frozenset())

    tent = pt.build(pt.tent())
    assert brute_edit(tent, "pi", k2=1) is None
    dels = brute_edit(tent, "pi", k2=2)
    assert dels is not None and len(dels[1]) == 2 and not dels[0] and not dels[2]

    c4star = union(cyc(4), Graph(1))
    assert brute_opt(c4star, "phcag", k3=1) == 1
    assert brute_edit(c4star, "phcag") is None


def test_brute_edit_applies_cleanly(rng):
    for _ in range(40):
        g = random_graph(rng, 5, 0.5)
        cls = rng.choice(CLASSES)
        k1, k2, k3 = rng.choice(((1, 1, 0), (0, 2, 1), (2, 0, 1)))
        res = brute_edit(g, cls, k1, k2, k3)
        if res is None:
            continue
        svs, dels, adds = res
        assert len(svs) <= k1 and len(dels) <= k2 and len(adds) <= k3
        assert not (dels & adds)
        edited = g.without_edges(dels).with_edges(adds)
        final, ids = edited.delete_vertices(svs)
        assert member_oracle(final, cls)
        # edges incident to deleted vertices are never listed
        for u, v in itertools.chain(dels, adds):
            assert u not in svs and v not in svs


def test_brute_opt_is_minimal(rng):
    for _ in range(15):
        g = random_graph(rng, 5, 0.6)
        opt = brute_opt(g, "pi", k1=2, k2=2)
        if opt in (None, 0):
            continue
        for a in range(min(opt, 2) + 1):
            b = opt - 1 - a
            if b > 2 or b < 0:
                continue
            assert brute_edit(g, "pi", k1=a, k2=b) is None
