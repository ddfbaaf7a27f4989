"""Forbidden-pattern catalog: construction, detection, witnesses.

Canonical numberings (fixed, used everywhere a Witness is produced):

  Claw                 center 0, leaves 1..3
  Cycle(l)             0-1-...-(l-1)-0
  CStar(l)             cycle 0..l-1, isolated vertex l   (C3Star, C4Star)
  Wheel(l)             cycle 0..l-1, hub l
  Tent                 triangle 0,1,2; 3~{0,1}, 4~{1,2}, 5~{2,0}
  Net                  triangle 0,1,2; pendants 3~0, 4~1, 5~2
  TentPlusIsolated     tent 0..5, isolated 6
  Prism                triangles 0,1,2 and 3,4,5; rungs i~i+3
  F1                   center 0; paths 0-1-2, 0-3-4, 0-5-6
  F2                   path 0-1-2-3-4, chord 0-3, pendants 5~0, 6~2
  F3                   6-cycle 0..5, chord 0-3, pendant 6~0
  F4                   6-cycle 0..5, chord 0-3, 6~{0,3}
  ComplementOf(k)      complement of build(k), same numbering

find_induced returns the lexicographically smallest embedding tuple under
the canonical numbering, found by backtracking with ascending candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, iter_bits


@dataclass(frozen=True)
class PatternKind:
    tag: str
    param: int | None = None
    inner: "PatternKind | None" = None


@dataclass(frozen=True)
class Witness:
    kind: PatternKind
    vertices: tuple


def claw():
    return PatternKind("claw")


def cycle(l):
    return PatternKind("cycle", l)


def cstar(l):
    return PatternKind("cstar", l)


def wheel(l):
    return PatternKind("wheel", l)


def tent():
    return PatternKind("tent")


def net():
    return PatternKind("net")


def tent_plus_isolated():
    return PatternKind("tent-iso")


def prism():
    return PatternKind("prism")


def f(i):
    return PatternKind("f%d" % i)


def co(kind):
    if kind.tag == "co":
        raise ValueError("ComplementOf cannot be nested")
    return PatternKind("co", inner=kind)


_FIXED_EDGES = {
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "tent": (6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]),
    "net": (6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]),
    "tent-iso": (7, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]),
    "prism": (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    "f1": (7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
    "f2": (7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (0, 3), (2, 6)]),
    "f3": (7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (6, 0)]),
    "f4": (7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (6, 0), (6, 3)]),
}


@lru_cache(maxsize=None)
def build(kind):
    """Canonical labeled graph for a pattern kind."""
    tag = kind.tag
    if tag in _FIXED_EDGES:
        n, edges = _FIXED_EDGES[tag]
        return Graph(n, edges)
    if tag == "cycle":
        l = kind.param
        if l is None or l < 3:
            raise ValueError("cycle length must be >= 3")
        return Graph(l, [(i, (i + 1) % l) for i in range(l)])
    if tag == "cstar":
        l = kind.param
        if l is None or l < 3:
            raise ValueError("cstar cycle length must be >= 3")
        return Graph(l + 1, [(i, (i + 1) % l) for i in range(l)])
    if tag == "wheel":
        l = kind.param
        if l is None or l < 4:
            raise ValueError("wheel rim length must be >= 4")
        rim = [(i, (i + 1) % l) for i in range(l)]
        return Graph(l + 1, rim + [(i, l) for i in range(l)])
    if tag == "co":
        return build(kind.inner).complement()
    raise ValueError("unknown pattern tag %r" % tag)


def kind_name(kind):
    tag = kind.tag
    if tag == "claw":
        return "Claw"
    if tag == "cycle":
        return "Cycle(%d)" % kind.param
    if tag == "cstar":
        if kind.param in (3, 4):
            return "C%dStar" % kind.param
        return "CStar(%d)" % kind.param
    if tag == "wheel":
        return "Wheel(%d)" % kind.param
    if tag == "tent":
        return "Tent"
    if tag == "net":
        return "Net"
    if tag == "tent-iso":
        return "TentPlusIsolated"
    if tag == "prism":
        return "Prism"
    if tag.startswith("f"):
        return tag.upper()
    if tag == "co":
        return "ComplementOf(%s)" % kind_name(kind.inner)
    raise ValueError(tag)


def parse_kind(text):
    """Parse CLI names like 'claw', 'cycle:5', 'c4star', 'co-f2'."""
    t = text.strip().lower()
    if t.startswith("co-"):
        return co(parse_kind(t[3:]))
    name, _, param = t.partition(":")
    if param:
        try:
            l = int(param)
        except ValueError:
            raise ValueError("bad pattern parameter %r" % param) from None
        if name == "cycle":
            return cycle(l)
        if name == "cstar":
            return cstar(l)
        if name == "wheel":
            return wheel(l)
        raise ValueError("pattern %r takes no parameter" % name)
    fixed = {
        "claw": claw(), "tent": tent(), "net": net(), "prism": prism(),
        "tent-iso": tent_plus_isolated(), "tentplusisolated": tent_plus_isolated(),
        "s3star": tent_plus_isolated(),
        "f1": f(1), "f2": f(2), "f3": f(3), "f4": f(4),
        "c3star": cstar(3), "c4star": cstar(4),
        "w4": wheel(4), "w5": wheel(5),
    }
    if t in fixed:
        return fixed[t]
    raise ValueError("unknown pattern name %r" % text)


# ---------------------------------------------------------------------------
# catalogs (branching lists; order matters for find_any determinism)

PHCAG7 = (claw(), cstar(4), tent(), net(), wheel(4), wheel(5), prism())
PI_SMALL = (claw(), net(), tent(), cycle(4), cycle(5), cycle(6))
REDUCED_G = (
    claw(), wheel(5), cstar(4), prism(), net(), tent_plus_isolated(),
    co(f(1)), co(f(2)), co(f(3)), co(f(4)),
)
BP_SMALL = (f(1), f(2), f(3), cycle(3), cycle(5), cycle(6), cycle(7))


# ---------------------------------------------------------------------------
# detection


@lru_cache(maxsize=None)
def _compiled(kind):
    pat = build(kind)
    s = pat.n
    padj = tuple(pat.adj)
    pdeg = tuple(pat.degree(i) for i in range(s))
    return s, padj, pdeg


def find_induced(g, kind):
    """Lex-smallest induced embedding of the pattern, or None."""
    tag = kind.tag
    if tag == "cycle":
        t = _cycle_search(g, kind.param, "plain")
    elif tag == "cstar":
        t = _cycle_search(g, kind.param, "nonadj")
    elif tag == "wheel":
        t = _cycle_search(g, kind.param, "hub")
    elif tag in ("tent", "net", "tent-iso"):
        t = _tri_search(g, tag)
    else:
        t = _generic_search(g, kind)
    if t is None:
        return None
    return Witness(kind, tuple(t))


def find_any(g, kinds):
    for kind in kinds:
        w = find_induced(g, kind)
        if w is not None:
            return w
    return None


def verify_witness(g, w):
    """Direct ordered edge comparison against the canonical pattern."""
    verts = w.vertices
    if len(set(verts)) != len(verts) or any(not 0 <= v < g.n for v in verts):
        return False
    pat = build(w.kind)
    if pat.n != len(verts):
        return False
    for i in range(pat.n):
        for j in range(i + 1, pat.n):
            if g.has_edge(verts[i], verts[j]) != pat.has_edge(i, j):
                return False
    return True


def _generic_search(g, kind):
    s, padj, pdeg = _compiled(kind)
    if s > g.n:
        return None
    n = g.n
    adj = g.adj
    gdeg = [adj[v].bit_count() for v in range(n)]
    full = (1 << n) - 1
    image = [0] * s

    def place(i, used):
        if i == s:
            return True
        cand = full & ~used
        for j in range(i):
            if padj[i] >> j & 1:
                cand &= adj[image[j]]
            else:
                cand &= ~adj[image[j]]
        need = pdeg[i]
        for v in iter_bits(cand):
            if gdeg[v] < need:
                continue
            image[i] = v
            if place(i + 1, used | 1 << v):
                return True
        return False

    if place(0, 0):
        return image
    return None


def _tri_search(g, which):
    """Triangle plus three pendants: tent (pendants on edges), net
    (pendants on vertices), tent-iso (tent plus an untouched vertex).

    Enumerates triangles a < b < c ascending, then pendants ascending,
    so the result matches the generic backtracking order.  The pendant
    sets come from single mask expressions, which keeps absence checks
    cheap on graphs with many triangles.
    """
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    tenty = which != "net"
    for a in range(n):
        above_a = full >> (a + 1) << (a + 1)
        for b in iter_bits(adj[a] & above_a):
            above_b = full >> (b + 1) << (b + 1)
            for c in iter_bits(adj[a] & adj[b] & above_b):
                used = 1 << a | 1 << b | 1 << c
                if tenty:
                    xm = adj[a] & adj[b] & ~adj[c] & ~used
                    ym = adj[b] & adj[c] & ~adj[a]
                    zm = adj[a] & adj[c] & ~adj[b]
                else:
                    xm = adj[a] & ~adj[b] & ~adj[c]
                    ym = adj[b] & ~adj[a] & ~adj[c]
                    zm = adj[c] & ~adj[a] & ~adj[b]
                if not (xm and ym and zm):
                    continue
                for x in iter_bits(xm):
                    y2 = ym & ~adj[x] & ~(1 << x)
                    if not y2:
                        continue
                    z2 = zm & ~adj[x] & ~(1 << x)
                    if not z2:
                        continue
                    for y in iter_bits(y2):
                        z3 = z2 & ~adj[y] & ~(1 << y)
                        if not z3:
                            continue
                        if which != "tent-iso":
                            return [a, b, c, x, y, next(iter_bits(z3))]
                        for z in iter_bits(z3):
                            m = full & ~used & ~adj[x] & ~adj[y] & ~adj[z]
                            m &= ~(1 << x) & ~(1 << y) & ~(1 << z)
                            m &= ~adj[a] & ~adj[b] & ~adj[c]
                            if m:
                                return [a, b, c, x, y, z,
                                        next(iter_bits(m))]
    return None


def _cycle_search(g, l, mode):
    """Induced l-cycle search, optionally extended by an attachment.

    mode 'plain': the cycle itself.  'nonadj': plus a vertex with no
    neighbor on the cycle (CStar).  'hub': plus a vertex adjacent to all
    cycle vertices (Wheel).  Prunes by distance-to-start balls, which is
    what makes absence checks affordable on a few hundred vertices.
    """
    n = g.n
    if l < 3 or n < l + (0 if mode == "plain" else 1):
        return None
    adj = g.adj
    full = (1 << n) - 1
    path = [0] * l

    for v0 in range(n):
        if adj[v0] == 0:
            continue
        # balls[r] = vertices within distance r of v0; used to prune
        # partial paths that cannot close back to v0 in the steps left
        balls = [1 << v0]
        for _ in range(l - 2):
            cur = balls[-1]
            for x in iter_bits(balls[-1]):
                cur |= adj[x]
            balls.append(cur)
        gt = full >> (v0 + 1) << (v0 + 1)   # vertices > v0
        path[0] = v0
        found = _cycle_attach(g, l, v0, gt, balls, path, mode)
        if found is not None:
            return found
    return None


def _cycle_attach(g, l, v0, gt, balls, path, mode):
    """DFS for an induced l-cycle rooted at v0; in the attachment modes it
    keeps searching when a cycle has no fitting extra vertex."""
    n = g.n
    adj = g.adj
    full = (1 << n) - 1

    def extend(i):
        if i == l:
            if mode == "plain":
                return path[:l]
            used = 0
            for v in path[:l]:
                used |= 1 << v
            m = full & ~used
            if mode == "nonadj":
                for v in path[:l]:
                    m &= ~adj[v]
            else:
                for v in path[:l]:
                    m &= adj[v]
            if m:
                return path[:l] + [next(iter_bits(m))]
            return None
        last = path[i - 1]
        cand = adj[last] & gt
        if i == l - 1:
            cand &= adj[v0]
            lo = 1          # v0 adjacency is required, not forbidden
        else:
            lo = 0
            r = l - i       # edges still needed to close back to v0
            if r < len(balls):
                cand &= balls[r]
        for j in range(lo, i - 1):
            cand &= ~adj[path[j]]
        for j in range(i):
            cand &= ~(1 << path[j])
        for v in iter_bits(cand):
            path[i] = v
            got = extend(i + 1)
            if got is not None:
                return got
        return None

    return extend(1)


# ---------------------------------------------------------------------------
# hole-to-pattern refinement


def refine_cl_star(g, hole, v):
    """Given a hole (length >= 5) and a vertex v with no neighbor on it,
    produce a Claw or Net witness.

    Walks a shortest path from v to the hole; y is the last vertex off the
    hole, x its predecessor.  y's neighbors on the hole decide the case:
    one neighbor gives a claw centered there, two consecutive neighbors
    give a net, anything else contains a non-consecutive pair giving a
    claw centered at y.
    """
    t = len(hole)
    if t < 5:
        raise ValueError("hole too short for refinement")
    hset = set(hole)
    if v in hset or any(g.has_edge(v, h) for h in hole):
        raise ValueError("v must have no neighbor on the hole")
    # BFS from v until we hit the hole
    parent = {v: None}
    queue = [v]
    reach = None
    while queue and reach is None:
        nq = []
        for x in queue:
            for y in iter_bits(g.adj[x]):
                if y in parent:
                    continue
                parent[y] = x
                if y in hset:
                    reach = y
                    break
                nq.append(y)
            if reach is not None:
                break
        queue = nq
    if reach is None:
        raise ValueError("v cannot reach the hole; graph not connected")
    walk = [reach]
    while parent[walk[-1]] is not None:
        walk.append(parent[walk[-1]])
    walk.reverse()   # v ... y, hole vertex
    y = walk[-2]
    x = walk[-3] if len(walk) >= 3 else None
    nbrs = [i for i in range(t) if g.has_edge(y, hole[i])]
    if len(nbrs) == 1:
        i = nbrs[0]
        w = Witness(claw(), (hole[i], y, hole[i - 1], hole[(i + 1) % t]))
    else:
        cons = None
        if len(nbrs) == 2:
            i, j = nbrs
            if (j - i) % t == 1:
                cons = i
            elif (i - j) % t == 1:
                cons = j
        if cons is not None:
            i = cons
            w = Witness(net(), (y, hole[i], hole[(i + 1) % t],
                                x, hole[i - 1], hole[(i + 2) % t]))
        else:
            pair = None
            for a in range(len(nbrs)):
                for b in range(a + 1, len(nbrs)):
                    i, j = nbrs[a], nbrs[b]
                    if (j - i) % t != 1 and (i - j) % t != 1:
                        pair = (i, j)
                        break
                if pair:
                    break
            i, j = pair
            w = Witness(claw(), (y, x, hole[i], hole[j]))
    if not verify_witness(g, w):
        raise AssertionError("refinement produced an invalid witness")
    return w
