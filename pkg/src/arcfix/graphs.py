"""Small dense graphs stored as bitmask adjacency rows.

Vertices are 0..n-1.  adj[v] is an int whose bit u is set exactly when uv
is an edge.  Graph objects are treated as immutable; every editing helper
returns a fresh Graph.  This keeps memoization and certificate translation
honest at the cost of some copying, which is fine at the sizes we solve.
"""

from __future__ import annotations


class GraphParseError(ValueError):
    pass


def iter_bits(mask):
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def norm_edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "adj", "_key")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("negative vertex count")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d,%d) out of range" % (u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = adj
        self._key = None

    # -- construction helpers ------------------------------------------

    @classmethod
    def from_adj(cls, adj):
        g = cls(len(adj))
        g.adj = list(adj)
        return g

    def key(self):
        """Hashable identity used for memo tables."""
        if self._key is None:
            self._key = (self.n, tuple(self.adj))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Graph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Graph(%d, %r)" % (self.n, sorted(self.edges()))

    # -- basic queries --------------------------------------------------

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    def neighbors(self, v):
        return list(iter_bits(self.adj[v]))

    def edges(self):
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(m):
                yield (u, v)

    def edge_count(self):
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def non_edges(self):
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    yield (u, v)

    # -- editing (all return new graphs) ---------------------------------

    def with_edges(self, pairs):
        g = Graph.from_adj(self.adj)
        for u, v in pairs:
            if u == v:
                raise ValueError("self-loop")
            g.adj[u] |= 1 << v
            g.adj[v] |= 1 << u
        return g

    def without_edges(self, pairs):
        g = Graph.from_adj(self.adj)
        for u, v in pairs:
            g.adj[u] &= ~(1 << v)
            g.adj[v] &= ~(1 << u)
        return g

    def subgraph(self, keep):
        """Induced subgraph on `keep` (iterable of vertex ids).

        Returns (graph, ids) where ids[new_id] = old_id, ids sorted
        increasing, so certificates can be translated back.
        """
        ids = sorted(set(keep))
        pos = {v: i for i, v in enumerate(ids)}
        sub = Graph(len(ids))
        for i, v in enumerate(ids):
            row = 0
            m = self.adj[v]
            for w in ids:
                if m >> w & 1:
                    row |= 1 << pos[w]
            sub.adj[i] = row
        return sub, ids

    def delete_vertices(self, drop):
        dropset = set(drop)
        return self.subgraph(v for v in range(self.n) if v not in dropset)

    def complement(self):
        g = Graph(self.n)
        full = self.full_mask
        for v in range(self.n):
            g.adj[v] = full & ~self.adj[v] & ~(1 << v)
        return g

    # -- connectivity ----------------------------------------------------

    def component_masks(self):
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def components(self):
        return [list(iter_bits(m)) for m in self.component_masks()]

    def is_connected(self):
        if self.n <= 1:
            return True
        return len(self.component_masks()) == 1


# ---------------------------------------------------------------------------
# text format


def parse_graph(text):
    """Parse the `n m` / `u v` text format. `#` starts a comment line."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise GraphParseError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphParseError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphParseError("non-integer header") from None
    if n < 0 or m < 0:
        raise GraphParseError("negative header values")
    if len(lines) - 1 != m:
        raise GraphParseError("expected %d edge lines, got %d" % (m, len(lines) - 1))
    g = Graph(n)
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError("bad edge line %r" % line)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("non-integer edge %r" % line) from None
        if not (0 <= u < v < n):
            raise GraphParseError("edge (%d,%d) violates 0 <= u < v < n" % (u, v))
        if g.adj[u] >> v & 1:
            raise GraphParseError("duplicate edge (%d,%d)" % (u, v))
        g.adj[u] |= 1 << v
        g.adj[v] |= 1 << u
    return g


def format_graph(g, comment=None):
    out = []
    if comment:
        for line in comment.splitlines():
            out.append("# " + line)
    edges = sorted(g.edges())
    out.append("%d %d" % (g.n, len(edges)))
    for u, v in edges:
        out.append("%d %d" % (u, v))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# bipartiteness with odd-cycle witness


def is_bipartite(g):
    """Return (True, (side0, side1)) or (False, odd_cycle_vertex_list)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            nq = []
            for u in queue:
                for v in iter_bits(g.adj[u]):
                    if color[v] == -1:
                        color[v] = color[u] ^ 1
                        parent[v] = u
                        nq.append(v)
                    elif color[v] == color[u]:
                        return False, _odd_cycle(parent, u, v)
            queue = nq
    side0 = {v for v in range(g.n) if color[v] == 0}
    side1 = {v for v in range(g.n) if color[v] == 1}
    return True, (side0, side1)


def _odd_cycle(parent, u, v):
    # walk both vertices up the BFS tree to their lowest common ancestor
    pu, pv = [u], [v]
    su, sv = {u}, {v}
    while True:
        if parent[pu[-1]] != -1:
            pu.append(parent[pu[-1]])
            if pu[-1] in sv:
                break
            su.add(pu[-1])
        if parent[pv[-1]] != -1:
            pv.append(parent[pv[-1]])
            if pv[-1] in su:
                break
            sv.add(pv[-1])
    if pu[-1] in sv:
        meet = pu[-1]
        pv = pv[: pv.index(meet) + 1]
    else:
        meet = pv[-1]
        pu = pu[: pu.index(meet) + 1]
    cycle = pu[:-1] + [meet] + list(reversed(pv[:-1]))
    assert len(cycle) % 2 == 1
    return cycle


def induced_odd_cycle(g, cycle):
    """Shrink an odd cycle (vertex list) to an induced odd cycle.

    Any chord splits the cycle into an odd and an even subcycle; recursing
    into the odd one terminates at an induced odd cycle (possibly a
    triangle).
    """
    cyc = list(cycle)
    while True:
        t = len(cyc)
        chord = None
        for i in range(t):
            for j in range(i + 2, t):
                if i == 0 and j == t - 1:
                    continue
                if g.has_edge(cyc[i], cyc[j]):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return cyc
        i, j = chord
        inner = cyc[i : j + 1]          # closed by chord
        outer = cyc[j:] + cyc[: i + 1]  # closed by chord
        cyc = inner if len(inner) % 2 == 1 else outer


# ---------------------------------------------------------------------------
# hole detection (certifying chordality)


def mcs_order(g):
    """Maximum cardinality search visit order, ties to smallest id."""
    n = g.n
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best == -1 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in iter_bits(g.adj[best]):
            if not visited[w]:
                weight[w] += 1
    return order


def is_hole(g, cycle):
    """Check the Hole invariants: induced cycle, length >= 4, distinct."""
    t = len(cycle)
    if t < 4 or len(set(cycle)) != t:
        return False
    for i in range(t):
        for j in range(i + 1, t):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = j - i == 1 or (i == 0 and j == t - 1)
            if adjacent != consecutive:
                return False
    return True


def find_hole(g):
    """Return some hole of g (induced cycle, length >= 4) or None.

    None means g is chordal: the reverse of a maximum cardinality search
    order is then a perfect elimination ordering and the fill check below
    accepts.  When the check fails at (v, u, w) we recover a hole through
    v: u, w are non-adjacent neighbors of v, and a shortest u-w path in
    the graph minus (N[v] minus {u, w}) is chordless and avoids N(v) in
    its interior, so closing it through v gives an induced cycle.
    """
    order = mcs_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    failed = False
    # eliminate in reverse visit order
    for v in reversed(order):
        later = [w for w in iter_bits(g.adj[v]) if pos[w] < pos[v]]
        if not later:
            continue
        u = max(later, key=lambda w: pos[w])
        for w in later:
            if w != u and not g.has_edge(u, w):
                failed = True
                hole = _hole_through(g, v, u, w)
                if hole is not None:
                    return hole
    if failed:
        raise AssertionError("elimination check failed but no hole extracted")
    return None


def _hole_through(g, v, u, w):
    banned = g.adj[v] & ~(1 << u) & ~(1 << w)
    banned |= 1 << v
    # BFS from u to w avoiding banned vertices
    parent = {u: None}
    queue = [u]
    while queue:
        nq = []
        for x in queue:
            for y in iter_bits(g.adj[x] & ~banned):
                if y in parent:
                    continue
                parent[y] = x
                if y == w:
                    path = [y]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    cycle = [v] + list(reversed(path))
                    assert is_hole(g, cycle), "hole extraction failed"
                    return cycle
                nq.append(y)
        queue = nq
    return None
