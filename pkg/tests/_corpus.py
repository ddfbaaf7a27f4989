"""Shared instance builders for the test suite."""

import itertools

from arcfix.graphs import Graph

PAIRS = {n: tuple(itertools.combinations(range(n), 2)) for n in range(11)}


def mask_graph(n, mask):
    pairs = PAIRS[n]
    return Graph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def all_graphs(n):
    for mask in range(1 << len(PAIRS[n])):
        yield mask_graph(n, mask)


def graph_count(n):
    return 1 << len(PAIRS[n])


def random_graph(rng, n, p=0.5):
    return Graph(n, (e for e in itertools.combinations(range(n), 2)
                     if rng.random() < p))


def cyc(l, extra=0):
    return Graph(l + extra, ((i, (i + 1) % l) for i in range(l)))


def path(l, extra=0):
    return Graph(l + extra, ((i, i + 1) for i in range(l - 1)))


def union(*parts):
    n = 0
    edges = []
    for g in parts:
        edges += [(u + n, v + n) for u, v in g.edges()]
        n += g.n
    return Graph(n, edges)


def isomorphic(a, b):
    """Exact isomorphism by permutation search; only for tiny graphs."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(map(a.degree, range(a.n))) != sorted(map(b.degree, range(b.n))):
        return False
    if a.n > 9:
        raise ValueError("too large for permutation search")
    for perm in itertools.permutations(range(a.n)):
        if all(a.has_edge(u, v) == b.has_edge(perm[u], perm[v])
               for u, v in PAIRS[a.n]):
            return True
    return False
