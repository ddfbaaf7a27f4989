"""Brute-force ground truth for membership and editing.

Everything here decides by exhaustive enumeration over vertex subsets,
independent of the production recognizers and solvers: the two sides are
compared in the test suite.  The forbidden families are spelled out
locally on purpose; do not import them from the catalog module.

Membership is decided by scanning every vertex subset for a forbidden
induced structure:

  PI     claw, tent, net, any cycle of length >= 4
  PHCAG  claw, tent, net, W4, W5, prism, any (cycle >= 4) + isolated vertex
  PCA    (tent|cycle>=4) + isolated vertex, net, and complements of
         F1..F4, even cycles >= 6, (odd cycle + isolated vertex)
  BP     F1, F2, F3, odd cycles, even cycles >= 6

Caps keep runtimes sane: membership n <= 12, editing n <= 9 with total
budget <= 4, both liftable via the ARCFIX_ORACLE_CAP environment variable
or explicit arguments.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

from .graphs import Graph, iter_bits

PI = "pi"
PHCAG = "phcag"
PCA = "pca"
BP = "bp"
CLASSES = (PI, PHCAG, PCA, BP)

MEMBER_CAP = 12
EDIT_N_CAP = 9
EDIT_BUDGET_CAP = 4


class OracleCapError(Exception):
    pass


def _env_cap(default):
    raw = os.environ.get("ARCFIX_ORACLE_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


# ---------------------------------------------------------------------------
# fixed pattern tables: adjacency masks under the canonical numbering

def _masks(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


_CLAW = _masks(4, [(0, 1), (0, 2), (0, 3)])
_TENT = _masks(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])
_NET = _masks(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)])
_W4 = _masks(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
_W5 = _masks(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)])
_PRISM = _masks(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
_F1 = _masks(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
_F2 = _masks(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (0, 3), (2, 6)])
_F3 = _masks(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (6, 0)])
_F4 = _masks(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (6, 0), (6, 3)])


def _degs(rows):
    return tuple(sorted(r.bit_count() for r in rows))


_FIXED = {
    name: (rows, _degs(rows))
    for name, rows in [
        ("claw", _CLAW), ("tent", _TENT), ("net", _NET), ("w4", _W4),
        ("w5", _W5), ("prism", _PRISM), ("f1", _F1), ("f2", _F2),
        ("f3", _F3), ("f4", _F4),
    ]
}


def _iso(rows, pat):
    """Induced isomorphism test between equal-sized compact adjacency rows."""
    n = len(rows)
    deg = [r.bit_count() for r in rows]
    pdeg = [r.bit_count() for r in pat]
    image = [-1] * n   # pattern vertex -> subset vertex
    used = [False] * n

    def place(i):
        if i == n:
            return True
        for c in range(n):
            if used[c] or deg[c] != pdeg[i]:
                continue
            ok = True
            for j in range(i):
                want = pat[i] >> j & 1
                have = rows[c] >> image[j] & 1
                if want != have:
                    ok = False
                    break
            if ok:
                image[i] = c
                used[c] = True
                if place(i + 1):
                    return True
                used[c] = False
        return False

    return place(0)


def _rows_connected(rows):
    n = len(rows)
    if n == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def _is_cycle(rows):
    n = len(rows)
    if n < 3:
        return False
    if any(r.bit_count() != 2 for r in rows):
        return False
    return _rows_connected(rows)


def _cycle_plus_isolated(rows):
    """Return the cycle length if rows = one isolated vertex + a cycle."""
    iso = [i for i, r in enumerate(rows) if r == 0]
    if len(iso) != 1:
        return 0
    rest = [i for i in range(len(rows)) if i != iso[0]]
    sub = [_compact(rows[i], rest) for i in rest]
    return len(rest) if _is_cycle(sub) else 0


def _tent_plus_isolated(rows):
    iso = [i for i, r in enumerate(rows) if r == 0]
    if len(iso) != 1 or len(rows) != 7:
        return False
    rest = [i for i in range(7) if i != iso[0]]
    sub = [_compact(rows[i], rest) for i in rest]
    return _degs(sub) == _FIXED["tent"][1] and _iso(sub, _TENT)


def _compact(mask, verts):
    out = 0
    for j, w in enumerate(verts):
        if mask >> w & 1:
            out |= 1 << j
    return out


# ---------------------------------------------------------------------------
# the subset sweep

def _subset_rows(adj, verts):
    return [_compact(adj[v], verts) for v in verts]


def _co_rows(rows):
    n = len(rows)
    full = (1 << n) - 1
    return [full & ~rows[i] & ~(1 << i) for i in range(n)]


def _scan(n, adj):
    """Find, for each class, whether some forbidden structure is induced."""
    hit = {c: False for c in CLASSES}
    want = set(CLASSES)
    for verts in itertools.chain.from_iterable(
        itertools.combinations(range(n), s) for s in range(3, n + 1)
    ):
        if not want:
            break
        s = len(verts)
        rows = _subset_rows(adj, verts)
        ds = _degs(rows)

        if _is_cycle(rows):
            if s >= 4 and not hit[PI]:
                hit[PI] = True
                want.discard(PI)
            if (s % 2 == 1 or s >= 6) and not hit[BP]:
                hit[BP] = True
                want.discard(BP)

        if PI in want or PHCAG in want:
            small = (
                (s == 4 and ds == _FIXED["claw"][1] and _iso(rows, _CLAW))
                or (s == 6 and ds == _FIXED["tent"][1] and _iso(rows, _TENT))
                or (s == 6 and ds == _FIXED["net"][1] and _iso(rows, _NET))
            )
            if small:
                hit[PI] = hit[PHCAG] = True
                want.discard(PI)
                want.discard(PHCAG)

        if PHCAG in want:
            if (
                (s == 5 and ds == _FIXED["w4"][1] and _iso(rows, _W4))
                or (s == 6 and ds == _FIXED["w5"][1] and _iso(rows, _W5))
                or (s == 6 and ds == _FIXED["prism"][1] and _iso(rows, _PRISM))
                or _cycle_plus_isolated(rows) >= 4
            ):
                hit[PHCAG] = True
                want.discard(PHCAG)

        if BP in want and s == 7:
            if (
                (ds == _FIXED["f1"][1] and _iso(rows, _F1))
                or (ds == _FIXED["f2"][1] and _iso(rows, _F2))
                or (ds == _FIXED["f3"][1] and _iso(rows, _F3))
            ):
                hit[BP] = True
                want.discard(BP)

        if PCA in want:
            found = False
            if s == 6 and ds == _FIXED["net"][1] and _iso(rows, _NET):
                found = True
            elif s == 7 and _tent_plus_isolated(rows):
                found = True
            elif _cycle_plus_isolated(rows) >= 4:
                found = True
            else:
                co = _co_rows(rows)
                cds = _degs(co)
                col = _cycle_plus_isolated(co)
                if s >= 6 and s % 2 == 0 and _is_cycle(co):
                    found = True
                elif col >= 3 and col % 2 == 1:
                    found = True
                elif s == 7 and (
                    (cds == _FIXED["f1"][1] and _iso(co, _F1))
                    or (cds == _FIXED["f2"][1] and _iso(co, _F2))
                    or (cds == _FIXED["f3"][1] and _iso(co, _F3))
                    or (cds == _FIXED["f4"][1] and _iso(co, _F4))
                ):
                    found = True
            if found:
                hit[PCA] = True
                want.discard(PCA)

    return hit


@lru_cache(maxsize=250_000)
def _scan_cached(n, adj):
    return _scan(n, adj)


def member_oracle(g, cls, cap=None):
    """Exact membership of g in cls, by exhaustive subset search."""
    if cls not in CLASSES:
        raise ValueError("unknown class %r" % cls)
    if cap is None:
        cap = _env_cap(MEMBER_CAP)
    if g.n > cap:
        raise OracleCapError("n=%d exceeds membership cap %d" % (g.n, cap))
    return not _scan_cached(g.n, tuple(g.adj))[cls]


def member_all(g, cap=None):
    """Membership in all four classes at once (single subset sweep)."""
    if cap is None:
        cap = _env_cap(MEMBER_CAP)
    if g.n > cap:
        raise OracleCapError("n=%d exceeds membership cap %d" % (g.n, cap))
    hits = _scan_cached(g.n, tuple(g.adj))
    return {c: not hits[c] for c in CLASSES}


# ---------------------------------------------------------------------------
# brute-force editing

def brute_edit(g, cls, k1=0, k2=0, k3=0, n_cap=None, budget_cap=None):
    """Minimum-cardinality modification of g into cls within the budgets.

    Deletes at most k1 vertices and k2 edges and adds at most k3 edges.
    Returns (deleted_vertices, deleted_edges, added_edges) as frozensets,
    the lexicographically smallest optimum, or None when the budgets do
    not suffice.  Edge sets refer to original vertex ids; edges incident
    to deleted vertices disappear for free and are never listed.
    """
    if cls not in CLASSES:
        raise ValueError("unknown class %r" % cls)
    if n_cap is None:
        n_cap = _env_cap(EDIT_N_CAP)
    if budget_cap is None:
        budget_cap = EDIT_BUDGET_CAP if _env_cap(None) is None else k1 + k2 + k3
    if g.n > n_cap:
        raise OracleCapError("n=%d exceeds editing cap %d" % (g.n, n_cap))
    if k1 + k2 + k3 > budget_cap:
        raise OracleCapError("total budget %d exceeds cap %d" % (k1 + k2 + k3, budget_cap))

    for cost in range(k1 + k2 + k3 + 1):
        for a in range(min(cost, k1) + 1):
            for svs in itertools.combinations(range(g.n), a):
                gs, ids = g.delete_vertices(svs)
                sub_edges = sorted(gs.edges())
                sub_non = sorted(gs.non_edges())
                for b in range(min(cost - a, k2) + 1):
                    c = cost - a - b
                    if c > k3:
                        continue
                    for dels in itertools.combinations(sub_edges, b):
                        gd = gs.without_edges(dels)
                        for adds in itertools.combinations(sub_non, c):
                            ga = gd.with_edges(adds)
                            if not _scan_cached(ga.n, tuple(ga.adj))[cls]:
                                def back(p):
                                    x, y = ids[p[0]], ids[p[1]]
                                    return (x, y) if x < y else (y, x)
                                return (
                                    frozenset(svs),
                                    frozenset(back(e) for e in dels),
                                    frozenset(back(e) for e in adds),
                                )
    return None


def brute_opt(g, cls, k1=0, k2=0, k3=0, **kw):
    """Optimal modification cost within budgets, or None."""
    res = brute_edit(g, cls, k1, k2, k3, **kw)
    if res is None:
        return None
    return sum(len(part) for part in res)
