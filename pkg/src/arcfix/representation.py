"""Maximal cliques, clique circles, arc representations, recognition.

A clique circle lists the maximal cliques in circular order so every
vertex occupies consecutive positions; reading a vertex's position run
as a circular arc gives an arc representation on a circle with one
point per clique.  Recognition accepts by building and validating such
a representation and rejects with a forbidden-pattern witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, find_hole, iter_bits
from . import patterns as pt
from . import pq


class TooManyCliques(Exception):
    pass


def maximal_cliques(g, cap):
    """All maximal cliques if there are at most cap, else TooManyCliques.

    Bron-Kerbosch with pivoting on bitmasks; abandons the enumeration as
    soon as the cap is exceeded.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if g.n == 0:
        return []
    adj = g.adj
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            if len(out) > cap:
                raise TooManyCliques("more than %d maximal cliques" % cap)
            return
        pux = p | x
        u = max(iter_bits(pux), key=lambda w: (adj[w] & p).bit_count())
        for v in iter_bits(p & ~adj[u]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.full_mask, 0)
    return [frozenset(iter_bits(m)) for m in out]


@dataclass(frozen=True)
class CliqueCircle:
    """Maximal cliques in circular order plus each vertex's position run.

    spans[v] = (lp, rp): the clique positions containing v, read
    clockwise from lp to rp.  A vertex lying in every clique gets the
    non-wrapping full run (0, len(cliques) - 1).
    """
    cliques: tuple
    spans: tuple

    @property
    def size(self):
        return len(self.cliques)


@dataclass(frozen=True)
class ArcRep:
    """Closed circular arcs [l, r] on a circle of integer positions."""
    size: int
    arcs: tuple


@dataclass(frozen=True)
class RepReport:
    is_rep: bool
    is_proper: bool
    is_helly: bool
    min_cover: object          # 1..4 exact, 5 meaning ">= 5", math.inf if none
    helly_violation: Optional[frozenset] = None


@dataclass(frozen=True)
class Recognition:
    accepted: bool
    witness: Optional[pt.Witness] = None
    circle: Optional[CliqueCircle] = None
    arcs: Optional[ArcRep] = None
    path: Optional[tuple] = None


def _canonical_order(cliques):
    """Lex-smallest rotation/reflection of a circular clique order."""
    enc = [tuple(sorted(k)) for k in cliques]
    l = len(enc)
    best = None
    for seq in (enc, enc[::-1]):
        for s in range(l):
            cand = tuple(seq[s:] + seq[:s])
            if best is None or cand < best:
                best = cand
    return [frozenset(k) for k in best]


def _span_table(n, cliques):
    l = len(cliques)
    posn = [set() for _ in range(n)]
    for i, k in enumerate(cliques):
        for v in k:
            posn[v].add(i)
    spans = []
    for v in range(n):
        p = posn[v]
        if len(p) == l:
            spans.append((0, l - 1))
            continue
        starts = [i for i in p if (i - 1) % l not in p]
        if len(starts) != 1:
            return None
        lp = starts[0]
        rp = (lp + len(p) - 1) % l
        if any((lp + d) % l not in p for d in range(len(p))):
            return None
        spans.append((lp, rp))
    return tuple(spans)


def clique_circle(g):
    """Circular arrangement of the maximal cliques, or None.

    The arrangement is canonical: lex-smallest under rotation and
    reflection of the sorted-clique encoding.
    """
    cliques = maximal_cliques(g, max(g.n, 1))
    l = len(cliques)
    byvert = [frozenset(i for i, k in enumerate(cliques) if v in k)
              for v in range(g.n)]
    order = pq.circular_ones(byvert, l)
    if order is None:
        return None
    ordered = _canonical_order([cliques[i] for i in order])
    spans = _span_table(g.n, ordered)
    if spans is None:
        return None
    return CliqueCircle(tuple(ordered), spans)


def arcs_from_circle(c):
    return ArcRep(c.size, tuple(c.spans))


def _straighten(c):
    """Rearrange a circle's cliques into a consecutive-ones path, or None.

    Chordal graphs can admit several circular arrangements, and the
    canonical one may wrap some vertex's run even though a clique path
    exists.  Arcs staggered from a wrapping arrangement can nest, so
    recognition prefers the path form whenever there is one; graphs
    with a hole never have one, and keep the circle.
    """
    byvert = [frozenset(i for i, k in enumerate(c.cliques) if v in k)
              for v in range(len(c.spans))]
    order = pq.consecutive_ones(byvert, c.size)
    if order is None:
        return None
    ordered = [c.cliques[i] for i in order]
    spans = _span_table(len(c.spans), ordered)
    if spans is None:
        return None
    return CliqueCircle(tuple(ordered), spans)


def _proper_arcs(c):
    """Arc representation from a circle, staggered to avoid nesting.

    The one-point-per-clique arcs of arcs_from_circle nest whenever one
    vertex's position run contains another's, so they are rarely proper.
    Here every clique position becomes a window of 2n + 3 ticks around a
    core tick shared by all arcs through that position.  Within one
    window, arcs whose runs start there reach further left the shorter
    the run, and arcs whose runs end there reach further right the
    shorter the run, so a contained run pokes out beside its container
    at the shared end instead of nesting.  Identical runs are tied in
    opposite directions on the two ends.

    When some rotation of the circle leaves no partial run wrapping
    (always the case for clique paths of chordal graphs), positions are
    relabeled from that cut, and vertices lying in every clique get the
    straightened full span; otherwise a vertex in every clique would
    swallow the arcs of runs strictly inside its own.
    """
    n = len(c.spans)
    l = c.size
    w = 2 * n + 3
    run = [(rp - lp) % l + 1 for lp, rp in c.spans]
    blocked = [False] * l
    for v, (lp, rp) in enumerate(c.spans):
        if 1 < run[v] < l:
            for d in range(1, run[v]):
                blocked[(lp + d) % l] = True
    cut = next((b for b in range(l) if not blocked[b]), None)
    starters = {}
    enders = {}
    for v, (lp, rp) in enumerate(c.spans):
        if cut is not None:
            lp, rp = (0, l - 1) if run[v] == l else ((lp - cut) % l,
                                                     (rp - cut) % l)
        starters.setdefault(lp, []).append(v)
        enders.setdefault(rp, []).append(v)
    left = [0] * n
    right = [0] * n
    for p, vs in starters.items():
        vs.sort(key=lambda v: (-run[v], v))
        core = p * w + n + 1
        for i, v in enumerate(vs):
            left[v] = core - 1 - i
    for p, vs in enders.items():
        vs.sort(key=lambda v: (-run[v], -v))
        core = p * w + n + 1
        for i, v in enumerate(vs):
            right[v] = core + 1 + i
    return ArcRep(c.size * w, tuple(zip(left, right)))


def _arc_ticks(l, r, size):
    """Bitmask of the closed real arc from point l clockwise to point r.

    The circle is discretized into 2*size ticks: bit 2p is the integer
    point p, bit 2p+1 the open segment between points p and p+1.  An arc
    covers its endpoints' run of points and the segments strictly
    inside, so two arcs meeting only at a shared endpoint intersect but
    arcs [0,1] and [2,3] leave the segments between them uncovered.
    """
    ticks = 2 * ((r - l) % size) + 1
    size2 = 2 * size
    m = (1 << ticks) - 1
    s = 2 * l % size2
    return ((m << s) | (m >> (size2 - s))) & ((1 << size2) - 1)


def _min_cover(rep, masks):
    """Minimum arcs covering the whole circle: exact up to 4, then 5
    standing for five or more, math.inf when even all arcs fall short.

    Greedy chain per starting arc: repeatedly take the arc over the
    first uncovered tick that extends the covered run the furthest.
    Arcs are contiguous tick intervals, so the chain is tracked as an
    integer pair instead of a bitmask.
    """
    size = 2 * rep.size
    union = 0
    for m in masks:
        union |= m
    if union != (1 << size) - 1:
        return math.inf
    spans = [(2 * l % size, 2 * ((r - l) % rep.size) + 1)
             for l, r in rep.arcs]
    best = 5
    for a0, t0 in spans:
        end = t0                     # ticks [0, end) covered, relative to a0
        cnt = 1
        while cnt < 4 and end < size:
            new_end = end
            for a, t in spans:
                d = (end - (a - a0)) % size
                if d < t:
                    new_end = max(new_end, end + t - d)
            if new_end == end:
                break
            end = min(new_end, size)
            cnt += 1
        if end >= size and cnt < best:
            best = cnt
    return best


def validate_rep(g, rep):
    """Check a representation: intersection graph, properness, Helly
    property, and the minimum number of arcs covering the circle."""
    n = g.n
    if len(rep.arcs) != n:
        raise ValueError("arc count does not match vertex count")
    masks = [_arc_ticks(l, r, rep.size) for l, r in rep.arcs]
    is_rep = True
    inter_edges = []
    for u in range(n):
        for v in range(u + 1, n):
            meet = bool(masks[u] & masks[v])
            if meet:
                inter_edges.append((u, v))
            if meet != g.has_edge(u, v):
                is_rep = False
    is_proper = True
    for u in range(n):
        for v in range(n):
            if u != v and masks[u] & ~masks[v] == 0 and masks[u] != masks[v]:
                is_proper = False
                break
        if not is_proper:
            break
    inter = Graph(n, inter_edges)
    is_helly = True
    violation = None
    for k in maximal_cliques(inter, 1 << max(n, 1)) if n else []:
        common = (1 << 2 * rep.size) - 1
        for v in k:
            common &= masks[v]
        if not common:
            is_helly = False
            violation = k
            break
    return RepReport(is_rep, is_proper, is_helly, _min_cover(rep, masks),
                     violation)


def min_point_load(c):
    """Gap between consecutive cliques crossed by fewest arcs.

    An arc crosses gap i when it covers positions i and i+1; full-circle
    arcs are not counted, they survive any single cut.  Returns the
    smallest-index gap among those with minimum load.
    """
    l = c.size
    if l < 2:
        raise ValueError("need at least two cliques")
    loads = [set() for _ in range(l)]
    for v, (lp, rp) in enumerate(c.spans):
        if (lp, rp) == (0, l - 1):
            continue
        run = (rp - lp) % l
        for d in range(run):
            loads[(lp + d) % l].add(v)
    besti = min(range(l), key=lambda i: (len(loads[i]), i))
    return besti, frozenset(loads[besti])


def _clique_path(sub):
    """Linear clique order for a connected proper interval graph."""
    cliques = maximal_cliques(sub, max(sub.n, 1))
    l = len(cliques)
    byvert = [frozenset(i for i, k in enumerate(cliques) if v in k)
              for v in range(sub.n)]
    order = pq.consecutive_ones(byvert, l)
    if order is None:
        raise AssertionError("no clique path for a pattern-free chordal graph")
    seq = [tuple(sorted(cliques[i])) for i in order]
    if seq[::-1] < seq:
        seq = seq[::-1]
    return seq


def recognize_proper_interval(g):
    """Accept with a clique path, or reject with a Claw, Tent, Net, or
    Cycle witness.  Disconnected input gets per-component paths joined
    in order of smallest vertex."""
    w = pt.find_any(g, (pt.claw(), pt.net(), pt.tent()))
    if w is not None:
        return Recognition(False, witness=w)
    h = find_hole(g)
    if h is not None:
        return Recognition(False, witness=pt.Witness(pt.cycle(len(h)), tuple(h)))
    path = []
    for mask in g.component_masks():
        sub, ids = g.subgraph(iter_bits(mask))
        for k in _clique_path(sub):
            path.append(frozenset(ids[v] for v in k))
    return Recognition(True, path=tuple(path))


def _phcag7_reject(g):
    w = pt.find_any(g, pt.PHCAG7)
    if w is None:
        raise AssertionError(
            "representation invalid on a connected graph without a "
            "seven-pattern witness; this is a bug")
    return Recognition(False, witness=w)


def recognize_phcag(g):
    """Accept with a validated circle and arc representation (connected
    case) or a clique path (disconnected case: every component must be
    proper interval), else reject with a witness.

    Acceptance criterion for a connected graph with a hole: claw-free,
    the maximal cliques arrange into a circle, and no three arcs of the
    derived representation cover the circle.  A connected chordal graph
    qualifies exactly when it is proper interval; its circle may have
    covering arcs (a single shared vertex can span a two-clique circle),
    which is why the cover test only applies when a hole exists.

    The attached arcs are the staggered form, which is proper and Helly
    whenever the graph is accepted; the raw one-point-per-clique arcs
    generally are not proper.

    Connected rejection witnesses come from the seven bounded patterns;
    disconnected rejection converts a hole of length l in one component
    plus a vertex of another into the cycle-plus-isolated-vertex
    pattern.
    """
    if g.n == 0:
        return Recognition(True, path=())
    if not g.is_connected():
        r = recognize_proper_interval(g)
        if r.accepted:
            return r
        w = r.witness
        if w.kind.tag == "cycle":
            length = w.kind.param
            comp = next(m for m in g.component_masks()
                        if m >> w.vertices[0] & 1)
            out = next(v for v in range(g.n) if not comp >> v & 1)
            w = pt.Witness(pt.cstar(length), w.vertices + (out,))
            if not pt.verify_witness(g, w):
                raise AssertionError("bad cycle-plus-vertex conversion")
        return Recognition(False, witness=w)
    hole = find_hole(g)
    if hole is None:
        if pt.find_any(g, (pt.claw(), pt.net(), pt.tent())) is not None:
            return _phcag7_reject(g)
    elif pt.find_induced(g, pt.claw()) is not None:
        return _phcag7_reject(g)
    try:
        c = clique_circle(g)
    except TooManyCliques:
        return _phcag7_reject(g)
    if c is None:
        return _phcag7_reject(g)
    rep = _proper_arcs(_straighten(c) or c)
    report = validate_rep(g, rep)
    ok = report.is_rep and report.is_proper and report.is_helly
    if ok and hole is not None:
        ok = report.min_cover != math.inf and report.min_cover >= 4
    if not ok:
        return _phcag7_reject(g)
    return Recognition(True, circle=c, arcs=rep)
