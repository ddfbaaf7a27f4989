import itertools
import random

from arcfix.pq import circular_ones, consecutive_ones


def _linear_ok(order, rows):
    pos = {c: i for i, c in enumerate(order)}
    for row in rows:
        if not row:
            continue
        idx = sorted(pos[c] for c in row)
        if idx[-1] - idx[0] != len(idx) - 1:
            return False
    return True


def _circular_ok(order, rows):
    n = len(order)
    pos = {c: i for i, c in enumerate(order)}
    for row in rows:
        if not 0 < len(row) < n:
            continue
        hits = sorted(pos[c] for c in row)
        gaps = sum(1 for a, b in zip(hits, hits[1:]) if b - a > 1)
        if hits[0] + n - hits[-1] > 1:
            gaps += 1
        if gaps > 1:
            return False
    return True


def test_interval_instance():
    rows = [{0, 1}, {1, 2}, {2, 3}, {1, 2, 3}]
    order = consecutive_ones(rows, 4)
    assert order is not None
    assert _linear_ok(order, rows)


def test_tucker_obstruction():
    # pairwise overlapping triple that cannot be linearized
    rows = [{0, 1}, {1, 2}, {0, 2}]
    assert consecutive_ones(rows, 3) is None
    assert circular_ones(rows, 3) is not None  # fine on a circle of 3


def test_degenerate_sizes():
    assert consecutive_ones([], 0) == []
    assert consecutive_ones([], 1) == [0]
    assert consecutive_ones([{0, 1, 2}], 3) is not None
    assert sorted(circular_ones([], 2)) == [0, 1]


def test_circular_wraps():
    # cycle cliques: edges of C5 as rows over its vertices
    rows = [{i, (i + 1) % 5} for i in range(5)]
    order = circular_ones(rows, 5)
    assert order is not None
    assert _circular_ok(order, rows)
    assert consecutive_ones(rows, 5) is None


def test_circular_infeasible():
    # all six pairs of four columns cannot be pairwise adjacent on a circle
    rows = [{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}]
    assert circular_ones(rows, 4) is None
    assert not _brute_circular(rows, 4)


def _brute_linear(rows, ncols):
    for perm in itertools.permutations(range(ncols)):
        if _linear_ok(list(perm), rows):
            return True
    return False


def _brute_circular(rows, ncols):
    for perm in itertools.permutations(range(1, ncols)):
        if _circular_ok([0] + list(perm), rows):
            return True
    return False


def test_randomized_against_brute():
    rng = random.Random(97)
    for trial in range(300):
        ncols = rng.randint(1, 6)
        rows = [set(rng.sample(range(ncols), rng.randint(1, ncols)))
                for _ in range(rng.randint(0, 6))]
        order = consecutive_ones(rows, ncols)
        if order is None:
            assert not _brute_linear(rows, ncols), (rows, ncols)
        else:
            assert sorted(order) == list(range(ncols))
            assert _linear_ok(order, rows)
        circ = circular_ones(rows, ncols)
        if circ is None:
            assert not _brute_circular(rows, ncols), (rows, ncols)
        elif ncols > 3:
            assert _circular_ok(circ, rows)
