import itertools

import pytest

from arcfix import patterns as pt
from _corpus import all_graphs, cyc, isomorphic, union

FIXED = [pt.claw(), pt.tent(), pt.net(), pt.prism(), pt.tent_plus_isolated(),
         pt.f(1), pt.f(2), pt.f(3), pt.f(4)]
PARAMETRIC = [pt.cycle(4), pt.cycle(7), pt.cstar(3), pt.cstar(4), pt.cstar(6),
              pt.wheel(4), pt.wheel(5)]


@pytest.mark.parametrize("kind", FIXED + PARAMETRIC,
                         ids=lambda k: pt.kind_name(k))
def test_build_shapes(kind):
    g = pt.build(kind)
    tag, param = kind.tag, kind.param
    if tag == "claw":
        assert g.n == 4 and g.edge_count() == 3
    elif tag == "cycle":
        assert g.n == param and g.edge_count() == param
    elif tag == "cstar":
        assert g.n == param + 1 and g.edge_count() == param
        assert any(g.degree(v) == 0 for v in range(g.n))
    elif tag == "wheel":
        assert g.n == param + 1
        assert max(g.degree(v) for v in range(g.n)) == param
    elif tag in ("tent", "net"):
        assert g.n == 6 and g.edge_count() == 9 if tag == "tent" else g.n == 6
    elif tag == "prism":
        assert g.n == 6 and g.edge_count() == 9
    elif tag == "tent-iso":
        assert g.n == 7 and sum(g.degree(v) == 0 for v in range(g.n)) == 1


def test_complement_kinds():
    for kind in FIXED + PARAMETRIC:
        assert pt.build(pt.co(kind)) == pt.build(kind).complement()
    with pytest.raises(ValueError):
        pt.co(pt.co(pt.claw()))


def test_net_is_co_tent():
    assert isomorphic(pt.build(pt.net()), pt.build(pt.tent()).complement())


def test_kind_names():
    assert pt.kind_name(pt.claw()) == "Claw"
    assert pt.kind_name(pt.cstar(4)) == "C4Star"
    assert pt.kind_name(pt.cycle(6)) == "Cycle(6)"
    assert pt.kind_name(pt.wheel(5)) == "Wheel(5)"
    assert pt.kind_name(pt.co(pt.f(2))) == "ComplementOf(F2)"


def test_parse_kind_round_trip():
    for name in ("claw", "tent", "net", "prism", "s3star", "f1", "f4",
                 "c4star", "w4", "w5", "cycle:9", "cstar:7", "wheel:6",
                 "co-tent", "co-cycle:5"):
        kind = pt.parse_kind(name)
        assert pt.build(kind).n >= 4
    assert pt.parse_kind("C4STAR") == pt.cstar(4)
    with pytest.raises(ValueError):
        pt.parse_kind("frobnicate")
    with pytest.raises(ValueError):
        pt.parse_kind("cycle:x")
    with pytest.raises(ValueError):
        pt.parse_kind("claw:3")


def test_catalog_contents():
    tags = [k.tag for k in pt.PHCAG7]
    assert tags == ["claw", "cstar", "tent", "net", "wheel", "wheel", "prism"]
    assert [k.param for k in pt.PHCAG7 if k.tag == "wheel"] == [4, 5]
    assert {k.tag for k in pt.PI_SMALL} == {"claw", "net", "tent", "cycle"}
    assert len(pt.REDUCED_G) == 10
    assert sum(k.tag == "co" for k in pt.REDUCED_G) == 4
    assert {k.tag for k in pt.BP_SMALL} == {"f1", "f2", "f3", "cycle"}
    assert sorted(k.param for k in pt.BP_SMALL if k.tag == "cycle") == [3, 5, 6, 7]


def _contains_brute(g, kind):
    pat = pt.build(kind)
    if pat.n > g.n:
        return False
    for verts in itertools.permutations(range(g.n), pat.n):
        if pt.verify_witness(g, pt.Witness(kind, verts)):
            return True
    return False


@pytest.mark.parametrize("kind", [pt.claw(), pt.cycle(4), pt.cycle(5),
                                  pt.cstar(3), pt.cstar(4)],
                         ids=lambda k: pt.kind_name(k))
def test_find_induced_vs_brute_small(kind):
    for g in all_graphs(5):
        w = pt.find_induced(g, kind)
        assert (w is not None) == _contains_brute(g, kind)
        if w is not None:
            assert w.kind == kind
            assert pt.verify_witness(g, w)


def test_find_induced_six_vertex_kinds():
    # spot checks for the heavier patterns
    for kind in (pt.tent(), pt.net(), pt.prism(), pt.wheel(5)):
        g = pt.build(kind)
        w = pt.find_induced(g, kind)
        assert w is not None and pt.verify_witness(g, w)
        assert pt.find_induced(cyc(6), kind) is None
        padded = union(pt.build(kind), cyc(3))
        assert pt.find_induced(padded, kind) is not None


def test_find_any_order_and_verify():
    g = union(pt.build(pt.claw()), cyc(5))
    w = pt.find_any(g, pt.PI_SMALL)
    assert w is not None and pt.verify_witness(g, w)
    assert pt.find_any(cyc(3), pt.PI_SMALL) is None


def test_witness_rejects_bad_tuples():
    g = pt.build(pt.claw())
    assert not pt.verify_witness(g, pt.Witness(pt.claw(), (0, 0, 1, 2)))
    assert not pt.verify_witness(g, pt.Witness(pt.claw(), (1, 0, 2, 3)))
    assert not pt.verify_witness(g, pt.Witness(pt.claw(), (0, 1, 2, 9)))


def test_f_patterns_in_their_builds():
    for i in (1, 2, 3, 4):
        kind = pt.f(i)
        w = pt.find_induced(pt.build(kind), kind)
        assert w is not None
        assert pt.verify_witness(pt.build(kind), w)
