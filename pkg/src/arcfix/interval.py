"""Proper interval modification solvers.

Vertex deletion branches on the six small obstructions (claw, net,
tent, C4, C5, C6).  Once none is left, every component is a proper
Helly circular-arc graph, and the cheapest way to kill its remaining
holes is an exact minimum crossing set on the clique circle: deleting
the arcs through the least-loaded circle point leaves an uncovered
point, hence an interval model, while any cheaper deletion keeps the
circle covered and a minimal cover of four or more arcs is a hole.
Edge and mixed deletion branch on the same obstructions and finish by
branching on hole edges (and vertices) directly.
"""

from . import patterns as pt
from .branching import (
    ParetoFail,
    WitnessPool,
    cycle_edges,
    edges_inside,
    greedy_disjoint,
    witness_edges,
)
from .graphs import find_hole, iter_bits
from .representation import clique_circle, min_point_load
from .results import Budget, Stats, no_result, yes_result


def _translate(ids, verts):
    return tuple(ids[v] for v in verts)


def _hole_cuts(cur, ids):
    """Minimum vertex sets (input ids) killing all holes per component.

    Only valid on obstruction-free graphs, where each component has a
    clique circle and holes survive exactly while the circle stays
    covered.
    """
    for m in cur.component_masks():
        comp, cids = cur.subgraph(iter_bits(m))
        if find_hole(comp) is None:
            continue
        circ = clique_circle(comp)
        assert circ is not None, "obstruction-free component has no clique circle; this is a bug"
        _, crossing = min_point_load(circ)
        yield frozenset(ids[cids[v]] for v in crossing)


def pivd(g, k):
    """Can deleting at most k vertices leave a proper interval graph?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    stats = Stats()
    pool = WitnessPool()
    if greedy_disjoint(g, pt.PI_SMALL, pool, cap=k) > k:
        return no_result(stats)
    fail = {}

    def rec(keep, k, depth):
        stats.enter(depth)
        prior = fail.get(keep, -1)
        if k <= prior:
            return None
        lb = pool.packing(keep)
        if lb > k:
            fail[keep] = max(prior, lb - 1)
            return None
        hit = pool.find_pattern(keep)
        verts = hit[0] if hit else None
        cur = ids = None
        if verts is None:
            cur, ids = g.subgraph(iter_bits(keep))
            w = pt.find_any(cur, pt.PI_SMALL)
            if w is not None:
                verts = _translate(ids, w.vertices)
                pool.add(verts, kind=w.kind)
        if verts is not None:
            if k > 0:
                for v in verts:
                    out = rec(keep & ~(1 << v), k - 1, depth + 1)
                    if out is not None:
                        return out
            fail[keep] = max(prior, k)
            return None
        final = keep
        cost = 0
        for cut in _hole_cuts(cur, ids):
            cost += len(cut)
            if cost > k:
                fail[keep] = max(prior, k)
                return None
            for v in cut:
                final &= ~(1 << v)
        return final

    final = rec(g.full_mask, k, 0)
    if final is None:
        return no_result(stats)
    return yes_result(stats, vertices=iter_bits(g.full_mask & ~final))


def pied(g, k):
    """Can deleting at most k edges leave a proper interval graph?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    stats = Stats()
    pool = WitnessPool()
    if greedy_disjoint(g, pt.PI_SMALL, pool, cap=k) > k:
        return no_result(stats)
    keep = g.full_mask
    fail = {}

    def rec(dropped, k, depth):
        stats.enter(depth)
        prior = fail.get(dropped, -1)
        if k <= prior:
            return None
        lb = pool.packing(keep, dropped)
        if lb > k:
            fail[dropped] = max(prior, lb - 1)
            return None
        cur = g.without_edges(dropped)
        hit = pool.find_pattern(keep, dropped)
        verts = hit[0] if hit else None
        if verts is None:
            w = pt.find_any(cur, pt.PI_SMALL)
            if w is not None:
                verts = w.vertices
                pool.add(verts, kind=w.kind, req=edges_inside(dropped, verts))
        if verts is not None:
            branches = witness_edges(cur, verts)
        else:
            hole = pool.find_hole(keep, dropped)
            if hole is None:
                h = find_hole(cur)
                if h is None:
                    return dropped
                hole = tuple(h)
                pool.add(hole, hole=True, req=edges_inside(dropped, hole))
            branches = cycle_edges(hole)
        if k > 0:
            for e in branches:
                out = rec(dropped | {e}, k - 1, depth + 1)
                if out is not None:
                    return out
        fail[dropped] = max(prior, k)
        return None

    dropped = rec(frozenset(), k, 0)
    if dropped is None:
        return no_result(stats)
    return yes_result(stats, edges=dropped)


def pi_mixed(g, b):
    """Can deleting ≤ b.k1 vertices and ≤ b.k2 edges leave a proper interval graph?"""
    if not isinstance(b, Budget):
        b = Budget(*b)
    stats = Stats()
    pool = WitnessPool()
    if greedy_disjoint(g, pt.PI_SMALL, pool, cap=b.k1 + b.k2) > b.k1 + b.k2:
        return no_result(stats)
    fail = ParetoFail()

    def rec(keep, dropped, k1, k2, depth):
        stats.enter(depth)
        key = (keep, dropped)
        if fail.covered(key, (k1, k2)):
            return None
        if pool.packing(keep, dropped) > k1 + k2:
            fail.record(key, (k1, k2))
            return None
        base = g.without_edges(dropped) if dropped else g
        cur, ids = base.subgraph(iter_bits(keep))
        hit = pool.find_pattern(keep, dropped)
        verts = hit[0] if hit else None
        if verts is None:
            w = pt.find_any(cur, pt.PI_SMALL)
            if w is not None:
                verts = _translate(ids, w.vertices)
                pool.add(verts, kind=w.kind, req=edges_inside(dropped, verts))
        if verts is not None:
            branches = witness_edges(base, verts)
        else:
            hole = pool.find_hole(keep, dropped)
            if hole is None:
                h = find_hole(cur)
                if h is None:
                    return keep, dropped
                hole = _translate(ids, h)
                pool.add(hole, hole=True, req=edges_inside(dropped, hole))
            verts = hole
            branches = cycle_edges(hole)
        if k1 > 0:
            for v in verts:
                out = rec(keep & ~(1 << v), dropped, k1 - 1, k2, depth + 1)
                if out is not None:
                    return out
        if k2 > 0:
            for e in branches:
                out = rec(keep, dropped | {e}, k1, k2 - 1, depth + 1)
                if out is not None:
                    return out
        fail.record(key, (k1, k2))
        return None

    out = rec(g.full_mask, frozenset(), b.k1, b.k2, 0)
    if out is None:
        return no_result(stats)
    keep, dropped = out
    edges = [e for e in dropped if keep >> e[0] & 1 and keep >> e[1] & 1]
    return yes_result(stats, vertices=iter_bits(g.full_mask & ~keep), edges=edges)


def pi_approx6(g):
    """Vertex set within 6x the optimum whose removal leaves a proper interval graph.

    Greedily removes whole obstruction copies, then resolves the
    leftover holes exactly per component.  The removed copies are
    disjoint, so the optimum pays one vertex per copy plus the exact
    hole cost, while this pays at most six per copy.
    """
    removed = set()
    cur, ids = g, tuple(range(g.n))
    while True:
        w = pt.find_any(cur, pt.PI_SMALL)
        if w is None:
            break
        removed.update(ids[v] for v in w.vertices)
        cur, sub = cur.delete_vertices(w.vertices)
        ids = tuple(ids[i] for i in sub)
    for cut in _hole_cuts(cur, ids):
        removed |= cut
    return frozenset(removed)
