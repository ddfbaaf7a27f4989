"""Instance builders.

Catalog graphs come straight from the pattern kinds.  The planted builders
produce seeded benchmark instances with a known repair: a base graph that
the target recognizer accepts, plus k defect vertices whose removal restores
the base.  Defect placement is randomized, the base is not.
"""

import itertools
from random import Random

from . import patterns as pt
from .graphs import Graph


def named(name):
    """Build a catalog graph from its textual name ('tent', 'cycle:7')."""
    return pt.build(pt.parse_kind(name))


def cocktail_party(p):
    """K_{p x 2}: complete graph on 2p vertices minus a perfect matching."""
    edges = [(u, v) for u in range(2 * p) for v in range(u + 1, 2 * p)
             if v != (u ^ 1)]
    return Graph(2 * p, edges)


def circulant(n, s):
    """Vertices on a circle, adjacent iff circular distance is at most s."""
    if n <= 2 * s + 1:
        return Graph(n, itertools.combinations(range(n), 2))
    edges = []
    for i in range(n):
        for d in range(1, s + 1):
            edges.append((i, (i + d) % n))
    return Graph(n, edges)


def _spread_triple(rng, free, m, s, tries=2000):
    """Three unused circle positions, pairwise more than s apart."""
    pool = sorted(free)
    for _ in range(tries):
        a, b, c = rng.sample(pool, 3)
        ok = True
        for x, y in ((a, b), (a, c), (b, c)):
            d = abs(x - y)
            if min(d, m - d) <= s:
                ok = False
                break
        if ok:
            return a, b, c
    raise ValueError("could not place a defect; base too small for k")


def planted_phcag(n, k, seed=0):
    """A proper-Helly base with k claw defects; returns (graph, defects).

    The base is a circulant on n - k vertices whose arcs are short uniform
    windows, so it is accepted as proper Helly circular-arc outright.  Each
    defect vertex is attached to three pairwise-distant circle positions,
    which centres a claw on it; the k defects are vertex disjoint, so the
    deletion optimum is exactly k and `defects` is one optimal solution.
    """
    if k < 0 or n < k:
        raise ValueError("need 0 <= k <= n")
    m = n - k
    s = max(2, min(10, m // 8))
    if m < 4 * s or (k and m < 3 * (s + 1)):
        need = max(4 * s, 3 * (s + 1)) if k else 4 * s
        raise ValueError("base too small: n - k is %d, need %d" % (m, need))
    rng = Random(seed)
    base = circulant(m, s)
    edges = list(base.edges())
    free = set(range(m))
    for j in range(k):
        a, b, c = _spread_triple(rng, free, m, s)
        free -= {a, b, c}
        w = m + j
        edges += [(w, a), (w, b), (w, c)]
    return Graph(n, edges), frozenset(range(m, n))


def planted_pca(n, k, seed=0):
    """A co-bipartite base with k triangle defects; returns (graph, defects).

    Built in the complement: a path on n - k vertices is a bipartite
    permutation graph, and each defect vertex is attached to both ends of
    one path edge, forming a triangle there.  The defect positions are
    spread out so the defects stay vertex disjoint.  The returned graph is
    the complement; deleting `defects` leaves a co-bipartite-permutation
    graph, which is proper circular-arc.
    """
    if k < 0 or n < k:
        raise ValueError("need 0 <= k <= n")
    m = n - k
    if m < 8 or (k and m < 6 * k + 8):
        raise ValueError("path too short for %d defects" % k)
    rng = Random(seed)
    edges = [(i, i + 1) for i in range(m - 1)]
    for _ in range(5000):
        spots = sorted(rng.sample(range(2, m - 4), k))
        if all(y - x >= 6 for x, y in zip(spots, spots[1:])):
            break
    else:
        raise ValueError("could not spread %d defects" % k)
    for j, p in enumerate(spots):
        w = m + j
        edges += [(w, p), (w, p + 1)]
    return Graph(n, edges).complement(), frozenset(range(m, n))


def planted_completion(hole_len, extras=1, comp_size=1, seed=0):
    """A long hole plus `extras` small outside components.

    The components are cliques of size at most `comp_size`, the shape of
    instance the window table behind the completion solver is evaluated on.
    """
    if hole_len < 4:
        raise ValueError("hole needs at least 4 vertices")
    rng = Random(seed)
    edges = [(i, (i + 1) % hole_len) for i in range(hole_len)]
    v = hole_len
    for _ in range(extras):
        size = rng.randint(1, max(1, comp_size))
        group = list(range(v, v + size))
        edges += list(itertools.combinations(group, 2))
        v += size
    return Graph(v, edges)
