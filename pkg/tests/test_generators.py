import pytest

from arcfix import patterns as pt
from arcfix.generators import (circulant, cocktail_party, named,
                               planted_completion, planted_pca, planted_phcag)
from arcfix.oracle import member_oracle
from arcfix.pca import pca_vd, recognize_pca
from arcfix.phcag import phcag_vd
from arcfix.representation import recognize_phcag
from _corpus import isomorphic


def test_named_builds_catalog_kinds():
    assert isomorphic(named("tent"), pt.build(pt.tent()))
    assert isomorphic(named("cycle:7"), pt.build(pt.cycle(7)))
    assert isomorphic(named("co-wheel:4"), pt.build(pt.wheel(4)).complement())
    with pytest.raises(ValueError):
        named("hexagon")


def test_cocktail_party_shape():
    g = cocktail_party(3)
    assert g.n == 6
    assert all(not g.has_edge(2 * i, 2 * i + 1) for i in range(3))
    assert sum(1 for _ in g.edges()) == 15 - 3


def test_circulant_shape():
    g = circulant(9, 2)
    degs = {sum(1 for v in range(g.n) if g.has_edge(u, v)) for u in range(g.n)}
    assert degs == {4}
    assert member_oracle(circulant(9, 2), "phcag")
    # dense case collapses to a complete graph
    k5 = circulant(5, 2)
    assert all(k5.has_edge(u, v) for u in range(5) for v in range(u + 1, 5))


def test_planted_phcag_properties():
    g, defects = planted_phcag(52, 3, seed=4)
    assert g.n == 52 and defects == frozenset(range(49, 52))
    assert not recognize_phcag(g).accepted
    base, _ = g.delete_vertices(defects)
    assert recognize_phcag(base).accepted
    # each defect centres a claw: the planted set is an optimal repair
    assert not phcag_vd(g, 2).answer
    assert phcag_vd(g, 3).answer
    # deterministic per seed, varies across seeds
    again, _ = planted_phcag(52, 3, seed=4)
    assert sorted(again.edges()) == sorted(g.edges())
    other, _ = planted_phcag(52, 3, seed=5)
    assert sorted(other.edges()) != sorted(g.edges())


def test_planted_phcag_guards():
    with pytest.raises(ValueError):
        planted_phcag(10, 2)
    with pytest.raises(ValueError):
        planted_phcag(5, 6)
    g, defects = planted_phcag(40, 0)
    assert not defects and recognize_phcag(g).accepted


def test_planted_pca_properties():
    g, defects = planted_pca(30, 2, seed=9)
    assert g.n == 30 and defects == frozenset(range(28, 30))
    assert not recognize_pca(g).accepted
    base, _ = g.delete_vertices(defects)
    assert recognize_pca(base).accepted
    assert not pca_vd(g, 1).answer
    res = pca_vd(g, 2)
    assert res.answer
    rest, _ = g.delete_vertices(res.deleted_vertices)
    assert recognize_pca(rest).accepted
    again, _ = planted_pca(30, 2, seed=9)
    assert sorted(again.edges()) == sorted(g.edges())


def test_planted_pca_guards():
    with pytest.raises(ValueError):
        planted_pca(6, 0)
    with pytest.raises(ValueError):
        planted_pca(21, 3)   # path of 18 < 6k + 8


def test_planted_completion_shapes():
    g = planted_completion(12, extras=2, comp_size=1, seed=1)
    assert g.n == 14
    comps = g.component_masks()
    assert len(comps) == 3
    g = planted_completion(10, extras=1, comp_size=3, seed=3)
    assert 11 <= g.n <= 13
    with pytest.raises(ValueError):
        planted_completion(3)
