"""Modification solvers targeting proper Helly circular-arc graphs.

Deletion solvers branch on the seven small obstructions after letting
the proper-interval solvers try first; once no obstruction is left the
graph is fine exactly when it is connected, so the base case keeps the
largest component.  Completion branches on missing obstruction edges,
then on chords and attachment edges of a short hole, and resolves long
holes with a window dynamic program along the host's clique circle.
"""

import itertools
import math
from dataclasses import dataclass

from . import patterns as pt
from .branching import ParetoFail, WitnessPool, edges_inside, greedy_disjoint
from .graphs import find_hole, iter_bits
from .interval import pi_approx6, pi_mixed, pied, pivd
from .representation import (
    _span_table,
    clique_circle,
    recognize_phcag,
    recognize_proper_interval,
)
from .results import Budget, Stats, no_result, yes_result

INF = math.inf

_BETA_KINDS = (pt.claw(), pt.tent(), pt.net())


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def _edge_branches(kind, verts):
    """Edge sets to try deleting, one branch each, for a witness kind.

    Singles cover the kinds where any pattern edge may go.  The tent
    loses an inner edge or both edges of a degree-two corner, the
    five-wheel only ever loses hub edges, and the prism loses a rung
    or four of its six triangle edges; the tests check each list
    exhaustively against the membership oracle.
    """
    def e(i, j):
        return _norm(verts[i], verts[j])

    tag = kind.tag
    if tag == "claw":
        return [(e(0, 1),), (e(0, 2),), (e(0, 3),)]
    if tag == "cstar":
        l = kind.param
        return [(e(i, (i + 1) % l),) for i in range(l)]
    if tag == "net":
        return [(e(0, 1),), (e(1, 2),), (e(0, 2),),
                (e(0, 3),), (e(1, 4),), (e(2, 5),)]
    if tag == "tent":
        return [(e(0, 1),), (e(1, 2),), (e(0, 2),),
                (e(0, 3), e(1, 3)), (e(1, 4), e(2, 4)), (e(2, 5), e(0, 5))]
    if tag == "wheel" and kind.param == 4:
        return ([(e(i, (i + 1) % 4),) for i in range(4)]
                + [(e(i, 4),) for i in range(4)])
    if tag == "wheel" and kind.param == 5:
        return [(e(i, 5),) for i in range(5)]
    if tag == "prism":
        out = [(e(0, 3),), (e(1, 4),), (e(2, 5),)]
        tri = [e(0, 1), e(1, 2), e(0, 2), e(3, 4), e(4, 5), e(3, 5)]
        out.extend(itertools.combinations(tri, 4))
        return out
    raise ValueError("no edge rule for %r" % (kind,))


def phcag_vd(g, k):
    """Can deleting at most k vertices leave a proper Helly circular-arc graph?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    esc = pivd(g, k)
    if esc.answer:
        return esc
    stats = Stats()
    pool = WitnessPool()
    if greedy_disjoint(g, pt.PHCAG7, pool, include_holes=False, cap=k) > k:
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
            w = pt.find_any(cur, pt.PHCAG7)
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
        # no obstruction: the answer is any single surviving component,
        # since the proper-interval escape already ruled out every
        # disconnected outcome
        if keep == 0:
            return keep
        big = max(cur.component_masks(), key=lambda m: m.bit_count())
        if keep.bit_count() - big.bit_count() <= k:
            out = 0
            for v in iter_bits(big):
                out |= 1 << ids[v]
            return out
        fail[keep] = max(prior, k)
        return None

    final = rec(g.full_mask, k, 0)
    if final is None:
        return no_result(stats)
    return yes_result(stats, vertices=iter_bits(g.full_mask & ~final))


def phcag_ed(g, k):
    """Can deleting at most k edges leave a proper Helly circular-arc graph?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    esc = pied(g, k)
    if esc.answer:
        return esc
    stats = Stats()
    if not g.is_connected():
        return no_result(stats)
    pool = WitnessPool()
    if greedy_disjoint(g, pt.PHCAG7, pool, include_holes=False, cap=k) > k:
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
        if hit is None:
            w = pt.find_any(cur, pt.PHCAG7)
            if w is not None:
                hit = (w.vertices, w.kind)
                pool.add(w.vertices, kind=w.kind,
                         req=edges_inside(dropped, w.vertices))
        if hit is None:
            if cur.is_connected():
                return dropped
            fail[dropped] = max(prior, k)
            return None
        verts, kind = hit
        if k > 0:
            for branch in _edge_branches(kind, verts):
                if len(branch) <= k:
                    out = rec(dropped | set(branch), k - len(branch), depth + 1)
                    if out is not None:
                        return out
        fail[dropped] = max(prior, k)
        return None

    dropped = rec(frozenset(), k, 0)
    if dropped is None:
        return no_result(stats)
    return yes_result(stats, edges=dropped)


def phcag_mixed(g, b):
    """Mixed vertex/edge deletion into a proper Helly circular-arc graph."""
    if not isinstance(b, Budget):
        b = Budget(*b)
    esc = pi_mixed(g, b)
    if esc.answer:
        return esc
    stats = Stats()
    pool = WitnessPool()
    total = b.k1 + b.k2
    if greedy_disjoint(g, pt.PHCAG7, pool, include_holes=False, cap=total) > total:
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
        hit = pool.find_pattern(keep, dropped)
        cur = ids = None
        if hit is None:
            base = g.without_edges(dropped) if dropped else g
            cur, ids = base.subgraph(iter_bits(keep))
            w = pt.find_any(cur, pt.PHCAG7)
            if w is not None:
                verts = tuple(ids[v] for v in w.vertices)
                hit = (verts, w.kind)
                pool.add(verts, kind=w.kind, req=edges_inside(dropped, verts))
        if hit is None:
            if keep == 0:
                return keep, dropped
            big = max(cur.component_masks(), key=lambda m: m.bit_count())
            if keep.bit_count() - big.bit_count() <= k1:
                orig = 0
                for v in iter_bits(big):
                    orig |= 1 << ids[v]
                return orig, dropped
            fail.record(key, (k1, k2))
            return None
        verts, kind = hit
        if k1 > 0:
            for v in verts:
                out = rec(keep & ~(1 << v), dropped, k1 - 1, k2, depth + 1)
                if out is not None:
                    return out
        if k2 > 0:
            for branch in _edge_branches(kind, verts):
                if len(branch) <= k2:
                    out = rec(keep, dropped | set(branch),
                              k1, k2 - len(branch), depth + 1)
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


# ---------------------------------------------------------------------------
# completion

@dataclass(frozen=True)
class HoleContext:
    """A numbered hole on its host's clique circle, plus outside components.

    hole[0] and hole[-1] are adjacent and both belong to the circle
    clique at index 0, which no window ever includes.  spans[i] is the
    clique index run of hole[i]: position 0 closes its prefix run at
    spans[0][1], the last position opens its suffix run at
    spans[-1][0], and interior runs never meet index 0.
    """

    graph: object
    hole: tuple
    comps: tuple
    cliques: tuple
    clique_masks: tuple
    spans: tuple

    def start_clique(self, a):
        """Index of the left end clique of a window opening after position a."""
        return self.spans[a - 1][1]

    def end_clique(self, b):
        """Index of the right end clique of a window closing before position b."""
        return self.spans[b - 1][0]


def hole_contexts(g, hole, host_mask, k):
    """Numbered contexts for the window DP, one per anchor guess.

    Tries both orientations anchored at each of the first 16k + 2 hole
    positions, and every host clique containing the anchor edge as the
    circle's fixed first clique; few enough positions have modified
    neighborhoods in a k-solution that one guess is always clean.
    """
    sub, ids = g.subgraph(iter_bits(host_mask))
    circ = clique_circle(sub)
    assert circ is not None, "host component has no clique circle; this is a bug"
    l = circ.size
    inv = {orig: i for i, orig in enumerate(ids)}
    comps = tuple(m for m in g.component_masks() if m != host_mask)
    t = len(hole)
    for j in range(min(t, 16 * k + 2)):
        for step in (1, -1):
            order = tuple(hole[(j + step * s) % t] for s in range(t))
            s1, st = inv[order[0]], inv[order[-1]]
            for c in range(l):
                if s1 not in circ.cliques[c] or st not in circ.cliques[c]:
                    continue
                rot = circ.cliques[c:] + circ.cliques[:c]
                spans = _span_table(sub.n, list(rot))
                assert spans is not None, "rotated circle lost consecutive runs; this is a bug"
                span_list = []
                ok = True
                for i in range(t):
                    lp, rp = spans[inv[order[i]]]
                    covers0 = lp > rp or lp == 0
                    if i in (0, t - 1):
                        if not covers0:
                            ok = False
                            break
                    elif covers0 or lp > rp:
                        ok = False
                        break
                    span_list.append((lp, rp))
                if not ok:
                    continue
                # keep only the orientation winding with the circle:
                # interior runs advance weakly, never retreat
                inner = span_list[1:t - 1]
                if any(x[0] > y[0] or x[1] > y[1]
                       for x, y in zip(inner, inner[1:])):
                    continue
                cliques = tuple(frozenset(ids[u] for u in kk) for kk in rot)
                masks = []
                for kk in cliques:
                    m = 0
                    for v in kk:
                        m |= 1 << v
                    masks.append(m)
                yield HoleContext(graph=g, hole=order, comps=comps,
                                  cliques=cliques, clique_masks=tuple(masks),
                                  spans=tuple(span_list))


def _beta_direct(ctx, S, a, b, k):
    """Window cost by bounded branching; returns (cost, added edges)."""
    start = ctx.start_clique(a)
    end = ctx.end_clique(b)
    if start > end:
        return INF, None
    e1 = ctx.clique_masks[start]
    e2 = ctx.clique_masks[end]
    if e1 & e2:
        return INF, None
    wmask = 0
    for c in range(start, end + 1):
        wmask |= ctx.clique_masks[c]
    chosen = [j for j in range(len(ctx.comps)) if S >> j & 1]
    if len(chosen) > k:
        return INF, None
    for j in chosen:
        wmask |= ctx.comps[j]
    forbid = e1 | e2
    anchors = [v for v in (ctx.hole[i] for i in range(a, b - 1))
               if not (1 << v) & forbid and (1 << v) & wmask]
    if chosen and not anchors:
        return INF, None
    best = [INF, None]
    seen = set()

    def dfs(added):
        if added in seen or len(added) >= best[0]:
            return
        seen.add(added)
        wg, wids = ctx.graph.with_edges(added).subgraph(iter_bits(wmask))
        w = pt.find_any(wg, _BETA_KINDS)
        if w is None:
            h = find_hole(wg)
            if h is None:
                if not wg.is_connected():
                    return
                path = recognize_proper_interval(wg).path
                inv = {o: i for i, o in enumerate(wids)}
                p1 = frozenset(inv[v] for v in iter_bits(e1))
                p2 = frozenset(inv[v] for v in iter_bits(e2))
                if {path[0], path[-1]} == {p1, p2}:
                    best[0] = len(added)
                    best[1] = added
                return
            vs = tuple(h)
        else:
            vs = w.vertices
        if len(added) >= k:
            return
        opts = []
        for x, y in itertools.combinations(vs, 2):
            if not wg.has_edge(x, y):
                ou, ov = wids[x], wids[y]
                if (1 << ou | 1 << ov) & forbid:
                    continue
                opts.append(_norm(ou, ov))
        for e in sorted(opts):
            dfs(added | {e})

    if chosen:
        for assign in itertools.product(anchors, repeat=len(chosen)):
            base = set()
            for j, v in zip(chosen, assign):
                x = (ctx.comps[j] & -ctx.comps[j]).bit_length() - 1
                base.add(_norm(x, v))
            if len(base) <= k:
                dfs(frozenset(base))
    else:
        dfs(frozenset())
    return best[0], best[1]


class BetaTable:
    """Memo for the window DP of one numbered context.

    Small windows are solved by direct branching; larger ones split at
    an offset within 8k + 1 of the right edge, since some boundary in
    that range has an untouched clique to glue at.
    """

    def __init__(self, ctx, k):
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.ctx = ctx
        self.k = k
        self.table = {}

    def lookup(self, S, a, b):
        t = len(self.ctx.hole)
        if not 1 <= a < b <= t:
            raise ValueError("window positions out of range")
        if S >> len(self.ctx.comps):
            raise ValueError("unknown component bit in S")
        key = (S, a, b)
        got = self.table.get(key)
        if got is None:
            if b - a <= max(8 * self.k, 1):
                got = _beta_direct(self.ctx, S, a, b, self.k)
            else:
                got = self._split(S, a, b)
            self.table[key] = got
        return got

    def _split(self, S, a, b):
        best = (INF, None)
        for i in range(1, min(8 * self.k + 1, b - a - 1) + 1):
            mid = b - i
            s2 = S
            while True:
                lcost, ledges = self.lookup(S & ~s2, a, mid)
                if lcost < best[0]:
                    rcost, redges = self.lookup(s2, mid, b)
                    total = lcost + rcost
                    if total < best[0] and total <= self.k:
                        best = (total, ledges | redges)
                if s2 == 0:
                    break
                s2 = (s2 - 1) & S
        return best


def beta(ctx, S, a, b, k):
    """Minimum additions for one window, or inf when above k."""
    return BetaTable(ctx, k).lookup(S, a, b)[0]


def phcag_completion(g, k):
    """Can adding at most k edges reach a proper Helly circular-arc graph?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    stats = Stats()
    visited = set()

    def rec(added, k, depth):
        stats.enter(depth)
        if added in visited:
            return None
        visited.add(added)
        cur = g.with_edges(added)
        w = pt.find_any(cur, pt.PHCAG7)
        if w is not None:
            if k == 0:
                return None
            opts = sorted(_norm(u, v)
                          for u, v in itertools.combinations(w.vertices, 2)
                          if not cur.has_edge(u, v))
            for e in opts:
                out = rec(added | {e}, k - 1, depth + 1)
                if out is not None:
                    return out
            return None
        if recognize_phcag(cur).accepted:
            return added
        hole = find_hole(cur)
        assert hole is not None, "unfinished graph without obstruction or hole; this is a bug"
        hole = tuple(hole)
        host = next(m for m in cur.component_masks() if m >> hole[0] & 1)
        t = len(hole)
        if t <= 16 * k + 16:
            if k == 0:
                return None
            x = next(v for v in range(g.n) if not host >> v & 1)
            opts = [_norm(x, v) for v in hole]
            opts.extend(sorted(_norm(u, v)
                               for u, v in itertools.combinations(hole, 2)
                               if not cur.has_edge(u, v)))
            for e in opts:
                out = rec(added | {e}, k - 1, depth + 1)
                if out is not None:
                    return out
            return None
        if 2 * host.bit_count() < 2 * g.n - k:
            return None
        for ctx in hole_contexts(cur, hole, host, k):
            cost, edges = BetaTable(ctx, k).lookup((1 << len(ctx.comps)) - 1, 1, t)
            if cost <= k:
                return added | edges
        return None

    out = rec(frozenset(), k, 0)
    if out is None:
        return no_result(stats)
    return yes_result(stats, additions=out)


def phcag_approx6(g):
    """Vertex set within 6x the optimum whose removal leaves the target class.

    Removes whole obstruction copies greedily, then keeps the cheaper
    verified finish: proper-interval cleanup of the rest, or keeping
    only its largest component.
    """
    removed = set()
    cur, ids = g, tuple(range(g.n))
    while True:
        w = pt.find_any(cur, pt.PHCAG7)
        if w is None:
            break
        removed.update(ids[v] for v in w.vertices)
        cur, sub = cur.delete_vertices(w.vertices)
        ids = tuple(ids[i] for i in sub)
    y1 = {ids[v] for v in pi_approx6(cur)}
    y2 = set()
    comp_masks = cur.component_masks()
    if comp_masks:
        big = max(comp_masks, key=lambda m: m.bit_count())
        y2 = {ids[v] for v in iter_bits(cur.full_mask & ~big)}
    cands = []
    for y in (y1, y2):
        sel = frozenset(removed | y)
        rest, _ = g.delete_vertices(sel)
        if recognize_phcag(rest).accepted:
            cands.append(sel)
    assert cands, "no candidate verified; this is a bug"
    return min(cands, key=lambda s: (len(s), tuple(sorted(s))))
