"""Shared helpers for the branching solvers.

All solvers walk a DFS tree whose states are (kept vertices, dropped
edges) over the input graph, so witnesses can be stored once in input
ids and reused: an induced obstruction stays induced as long as all its
vertices survive and none of its internal edges was dropped.  Disjoint
stored witnesses double as a cheap lower bound for pruning.
"""

from . import patterns as pt
from .graphs import find_hole


def edges_inside(dropped, verts):
    """The dropped edges with both endpoints among verts."""
    vmask = 0
    for v in verts:
        vmask |= 1 << v
    return frozenset(e for e in dropped if vmask >> e[0] & 1 and vmask >> e[1] & 1)


def alive(vmask, req, keep, dropped):
    """Is a stored witness still an induced copy in state (keep, dropped)?

    It was induced when found with exactly `req` dropped inside it, so
    it survives iff its vertices are kept and the dropped edges inside
    it are again exactly `req`: anything extra removes a witness edge,
    anything missing revives a witness non-edge.
    """
    if vmask & keep != vmask:
        return False
    for e in req:
        if e not in dropped:
            return False
    for e in dropped:
        if vmask >> e[0] & 1 and vmask >> e[1] & 1 and e not in req:
            return False
    return True


class WitnessPool:
    def __init__(self):
        self.patterns = []
        self.holes = []

    def add(self, verts, kind=None, hole=False, req=frozenset()):
        vmask = 0
        for v in verts:
            vmask |= 1 << v
        (self.holes if hole else self.patterns).append((vmask, tuple(verts), req, kind))

    def find_pattern(self, keep, dropped=()):
        """First live pattern witness as (verts, kind), or None."""
        for vmask, verts, req, kind in self.patterns:
            if alive(vmask, req, keep, dropped):
                return verts, kind
        return None

    def find_hole(self, keep, dropped=()):
        for vmask, verts, req, _ in self.holes:
            if alive(vmask, req, keep, dropped):
                return verts
        return None

    def packing(self, keep, dropped=()):
        """Greedy count of pairwise disjoint live witnesses."""
        taken = 0
        count = 0
        for lst in (self.patterns, self.holes):
            for vmask, _, req, _ in lst:
                if vmask & taken:
                    continue
                if alive(vmask, req, keep, dropped):
                    taken |= vmask
                    count += 1
        return count


def greedy_disjoint(g, kinds, pool, include_holes=True, cap=None):
    """Count vertex-disjoint obstructions by wholesale removal.

    Every find lands in the pool.  Stops once the count exceeds cap,
    which is all a lower-bound user cares about.
    """
    cur, ids = g, tuple(range(g.n))
    count = 0
    while cap is None or count <= cap:
        w = pt.find_any(cur, kinds)
        if w is None:
            break
        verts = tuple(ids[v] for v in w.vertices)
        pool.add(verts, kind=w.kind)
        count += 1
        cur, sub = cur.delete_vertices(w.vertices)
        ids = tuple(ids[i] for i in sub)
    if include_holes:
        while cap is None or count <= cap:
            h = find_hole(cur)
            if h is None:
                break
            verts = tuple(ids[v] for v in h)
            pool.add(verts, hole=True)
            count += 1
            cur, sub = cur.delete_vertices(h)
            ids = tuple(ids[i] for i in sub)
    return count


def witness_edges(g, verts):
    """Edges of g among verts, normalized and sorted."""
    out = []
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if g.has_edge(u, v):
                out.append((u, v) if u < v else (v, u))
    out.sort()
    return out


def cycle_edges(verts):
    """Consecutive pairs of a cycle given in traversal order."""
    out = []
    for i, u in enumerate(verts):
        v = verts[(i + 1) % len(verts)]
        out.append((u, v) if u < v else (v, u))
    return out


class ParetoFail:
    """Failure memo over multi-dimensional budgets.

    Records per state the maximal budget vectors that already failed;
    a new attempt is hopeless when dominated by a recorded one.
    """

    def __init__(self):
        self.table = {}

    def covered(self, key, budget):
        for old in self.table.get(key, ()):
            if all(b <= o for b, o in zip(budget, old)):
                return True
        return False

    def record(self, key, budget):
        lst = self.table.setdefault(key, [])
        lst[:] = [old for old in lst if not all(o <= b for o, b in zip(old, budget))]
        lst.append(budget)
