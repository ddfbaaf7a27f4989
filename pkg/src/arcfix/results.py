"""Shared solver result and budget types."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Budget:
    """Separate vertex- and edge-deletion allowances."""

    k1: int
    k2: int

    def __post_init__(self):
        if self.k1 < 0 or self.k2 < 0:
            raise ValueError("budgets must be nonnegative")


class Stats:
    """Mutable search counters; one instance per solver call."""

    __slots__ = ("nodes_explored", "max_depth")

    def __init__(self):
        self.nodes_explored = 0
        self.max_depth = 0

    def enter(self, depth):
        self.nodes_explored += 1
        if depth > self.max_depth:
            self.max_depth = depth

    def as_dict(self):
        return {"nodesExplored": self.nodes_explored, "maxDepth": self.max_depth}


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a modification solver.

    Vertex ids and edge pairs refer to the input graph's labeling; edges
    are normalized with the smaller endpoint first.  On a yes answer,
    deleting/adding the listed items lands the input in the target class.
    """

    answer: bool
    deleted_vertices: frozenset = frozenset()
    deleted_edges: frozenset = frozenset()
    added_edges: frozenset = frozenset()
    stats: Stats = field(default_factory=Stats)

    @property
    def cost(self):
        return len(self.deleted_vertices) + len(self.deleted_edges) + len(self.added_edges)


def no_result(stats):
    return SolveResult(False, stats=stats)


def yes_result(stats, vertices=(), edges=(), additions=()):
    return SolveResult(
        True,
        deleted_vertices=frozenset(vertices),
        deleted_edges=frozenset(tuple(sorted(e)) for e in edges),
        added_edges=frozenset(tuple(sorted(e)) for e in additions),
        stats=stats,
    )
