"""Vertex deletion toward proper circular-arc graphs.

Recognition splits on connectivity: disconnected graphs must be proper
interval, graphs with a disconnected complement need the complement to
be a bipartite permutation graph, and the remaining case branches on a
short list of small patterns before reading the answer off the
complement's bipartiteness.  The deletion solver follows the same
shape, and the bipartite-permutation subroutine is pluggable.
"""

import itertools
from dataclasses import dataclass

from . import patterns as pt
from .branching import WitnessPool, greedy_disjoint
from .graphs import induced_odd_cycle, is_bipartite, iter_bits
from .interval import pi_approx6, pivd
from .representation import Recognition, recognize_proper_interval
from .results import Stats, no_result, yes_result

LONG_HOLE_CAP = 64

_F_KINDS = (pt.f(1), pt.f(2), pt.f(3))


def _long_hole(g, minlen):
    """Some induced cycle with at least minlen vertices, or None.

    Depth-first over induced paths anchored at their smallest vertex; a
    candidate adjacent to the anchor can only ever close the cycle.
    """
    adj = g.adj

    def grow(path, pmask):
        last = path[-1]
        v0 = path[0]
        inner = pmask & ~(1 << last) & ~(1 << v0)
        for u in iter_bits(adj[last]):
            if u <= v0 or pmask >> u & 1 or adj[u] & inner:
                continue
            # the second vertex touches the anchor by construction; any
            # later one doing so can only close the cycle
            if len(path) > 1 and adj[u] >> v0 & 1:
                if len(path) + 1 >= minlen and path[1] < u:
                    return path + [u]
                continue
            out = grow(path + [u], pmask | 1 << u)
            if out is not None:
                return out
        return None

    for v0 in range(g.n):
        out = grow([v0], 1 << v0)
        if out is not None:
            return tuple(out)
    return None


def is_bipartite_permutation(g, hole_cap=LONG_HOLE_CAP):
    """Accept, or reject with an odd cycle, an F pattern, or a long hole.

    The long-hole search enumerates induced paths and is capped: graphs
    larger than hole_cap vertices are refused once the cheaper checks
    pass.
    """
    ok, info = is_bipartite(g)
    if not ok:
        cyc = induced_odd_cycle(g, info)
        return Recognition(False, witness=pt.Witness(pt.cycle(len(cyc)), tuple(cyc)))
    w = pt.find_any(g, _F_KINDS)
    if w is not None:
        return Recognition(False, witness=w)
    if g.n > hole_cap:
        raise ValueError("long-hole search capped at %d vertices" % hole_cap)
    h = _long_hole(g, 6)
    if h is not None:
        return Recognition(False, witness=pt.Witness(pt.cycle(len(h)), tuple(h)))
    return Recognition(True)


def bpvd(g, k, impl=None):
    """Can deleting at most k vertices leave a bipartite permutation graph?

    Branches on the small patterns; a pattern-free graph that is still
    rejected only has long holes left, which are handled by trying every
    deletion set up to the remaining budget.  Pass impl to substitute a
    different complete solver with the same signature.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if impl is not None:
        return impl(g, k)
    stats = Stats()
    pool = WitnessPool()
    if greedy_disjoint(g, pt.BP_SMALL, pool, include_holes=False, cap=k) > k:
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
            w = pt.find_any(cur, pt.BP_SMALL)
            if w is not None:
                verts = tuple(ids[v] for v in w.vertices)
                pool.add(verts, kind=w.kind)
        if verts is not None:
            if k > 0:
                for v in verts:
                    out = rec(keep & ~(1 << v), k - 1, depth + 1)
                    if out is not None:
                        return out
            fail[keep] = max(prior, k)
            return None
        if is_bipartite_permutation(cur).accepted:
            return keep
        for size in range(1, k + 1):
            for drop in itertools.combinations(range(cur.n), size):
                rest, _ = cur.delete_vertices(drop)
                if is_bipartite_permutation(rest).accepted:
                    out = keep
                    for v in drop:
                        out &= ~(1 << ids[v])
                    return out
        fail[keep] = max(prior, k)
        return None

    final = rec(g.full_mask, k, 0)
    if final is None:
        return no_result(stats)
    return yes_result(stats, vertices=iter_bits(g.full_mask & ~final))


@dataclass(frozen=True)
class ReducedCheck:
    """Connectivity on both sides plus freedom from the small patterns."""
    graph: object
    connected: bool
    co_connected: bool
    fis_free: bool
    witness: object = None


def reduced_check(g):
    w = pt.find_any(g, pt.REDUCED_G)
    return ReducedCheck(g, g.is_connected(), g.complement().is_connected(),
                        w is None, w)


def _co_witness(g, w):
    """Translate complement-side evidence back to the input graph.

    A complement triangle always extends to a claw here: it appears only
    when the complement is disconnected, and any vertex of another
    co-component is adjacent to all three corners.
    """
    if w.kind.tag == "cycle" and w.kind.param == 3:
        a, b, c = w.vertices
        for x in range(g.n):
            if x in (a, b, c):
                continue
            if g.has_edge(x, a) and g.has_edge(x, b) and g.has_edge(x, c):
                return pt.Witness(pt.claw(), (x, a, b, c))
    return pt.Witness(pt.co(w.kind), w.vertices)


def recognize_pca(g):
    """Is g a proper circular-arc graph, with evidence on rejection?"""
    if not g.is_connected():
        return recognize_proper_interval(g)
    co = g.complement()
    if not co.is_connected():
        r = is_bipartite_permutation(co)
        if r.accepted:
            return Recognition(True)
        return Recognition(False, witness=_co_witness(g, r.witness))
    w = pt.find_any(g, pt.REDUCED_G)
    if w is not None:
        return Recognition(False, witness=w)
    if not is_bipartite(co)[0]:
        return Recognition(True)
    r = is_bipartite_permutation(co)
    if r.accepted:
        return Recognition(True)
    return Recognition(False, witness=_co_witness(g, r.witness))


def _keep_candidates(cur):
    """Per component: masks of its non-bipartite complement components,
    largest first, as (component, kept) pairs in cur's numbering."""
    comps = sorted(cur.component_masks(),
                   key=lambda m: (-m.bit_count(), m & -m))
    for comp in comps:
        sub, ids = cur.subgraph(iter_bits(comp))
        co = sub.complement()
        if is_bipartite(co)[0]:
            continue
        parts = []
        for m in co.component_masks():
            piece, _ = co.subgraph(iter_bits(m))
            if not is_bipartite(piece)[0]:
                parts.append(m)
        parts.sort(key=lambda m: (-m.bit_count(), m & -m))
        for m in parts:
            kept = 0
            for v in iter_bits(m):
                kept |= 1 << ids[v]
            yield comp, kept


def pca_vd(g, k):
    """Can deleting at most k vertices leave a proper circular-arc graph?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    esc = pivd(g, k)
    if esc.answer:
        return esc
    esc = bpvd(g.complement(), k)
    if esc.answer:
        return esc
    stats = Stats()
    pool = WitnessPool()
    if greedy_disjoint(g, pt.REDUCED_G, pool, include_holes=False, cap=k) > k:
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
            w = pt.find_any(cur, pt.REDUCED_G)
            if w is not None:
                verts = tuple(ids[v] for v in w.vertices)
                pool.add(verts, kind=w.kind)
        if verts is not None:
            if k > 0:
                for v in verts:
                    out = rec(keep & ~(1 << v), k - 1, depth + 1)
                    if out is not None:
                        return out
            fail[keep] = max(prior, k)
            return None
        # pattern-free: pay for all but one component, then for all but
        # one non-bipartite piece of that component's complement
        ncur = keep.bit_count()
        for comp, kept in _keep_candidates(cur):
            cost = ncur - kept.bit_count()
            if cost > k:
                continue
            survivors = [ids[v] for v in iter_bits(kept)]
            rest, _ = g.subgraph(survivors)
            if recognize_pca(rest).accepted:
                out = 0
                for v in survivors:
                    out |= 1 << v
                return out
        fail[keep] = max(prior, k)
        return None

    final = rec(g.full_mask, k, 0)
    if final is None:
        return no_result(stats)
    return yes_result(stats, vertices=iter_bits(g.full_mask & ~final))


def pca_approx9(g):
    """Vertex set within 9x the optimum whose removal leaves the target class.

    Greedy wholesale pattern removal, then the cheapest verified finish
    among: proper-interval cleanup, bipartite-permutation cleanup of the
    complement, and keeping one non-bipartite complement piece.
    """
    removed = set()
    cur, ids = g, tuple(range(g.n))
    while True:
        w = pt.find_any(cur, pt.REDUCED_G)
        if w is None:
            break
        removed.update(ids[v] for v in w.vertices)
        cur, sub = cur.delete_vertices(w.vertices)
        ids = tuple(ids[i] for i in sub)
    finishes = [{ids[v] for v in pi_approx6(cur)}]
    for comp, kept in _keep_candidates(cur):
        finishes.append({ids[v] for v in iter_bits(cur.full_mask & ~kept)})
    cap = min(len(y) for y in finishes)
    co = cur.complement()
    for k in range(min(cap, cur.n) + 1):
        r = bpvd(co, k)
        if r.answer:
            finishes.append({ids[v] for v in r.deleted_vertices})
            break
    best = None
    for y in finishes:
        sel = frozenset(removed | y)
        rest, _ = g.delete_vertices(sel)
        if not recognize_pca(rest).accepted:
            continue
        if best is None or (len(sel), tuple(sorted(sel))) < (len(best), tuple(sorted(best))):
            best = sel
    assert best is not None, "no finish verified; this is a bug"
    return best
