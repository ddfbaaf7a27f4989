"""Consecutive-ones and circular-ones column orderings.

A PQ-tree over the columns is narrowed one row at a time.  P nodes allow
any child order, Q nodes a fixed order up to reversal; every subtree
occupies a contiguous block of the leaf frontier.

Each row is applied at its pertinent root: the deepest node whose
subtree contains the whole row.  Below that node a subtree can only
report EMPTY (no row column), FULL (all row columns), or PART (row
columns can be pushed to one end of the block; returned as a node whose
children are each wholly in or out, the in-block first).  At the
pertinent root the row must come together as one run, with the node's
remaining children left free.

Circular ones reduces to consecutive ones: complement every row that
contains column 0, then read the linear order as a circle.
"""

from __future__ import annotations


class _Fail(Exception):
    pass


EMPTY, FULL, PART = range(3)


class _Leaf:
    __slots__ = ("col",)

    def __init__(self, col):
        self.col = col


class _P:
    __slots__ = ("kids",)

    def __init__(self, kids):
        self.kids = kids


class _Q:
    __slots__ = ("kids",)

    def __init__(self, kids):
        self.kids = kids


def _mkp(kids):
    if len(kids) == 1:
        return kids[0]
    return _P(kids)


def _mkq(kids):
    if len(kids) == 1:
        return kids[0]
    if len(kids) == 2:
        return _P(kids)      # two children: order freedom equals a P node
    return _Q(kids)


def _count(node, cols, out):
    if isinstance(node, _Leaf):
        c = 1 if node.col in cols else 0
    else:
        c = sum(_count(k, cols, out) for k in node.kids)
    out[id(node)] = c
    return c


def _arrange(node, cols):
    """Non-root states: EMPTY, FULL, or PART with the full block first."""
    if isinstance(node, _Leaf):
        return (FULL if node.col in cols else EMPTY), node
    pairs = [_arrange(k, cols) for k in node.kids]
    states = [s for s, _ in pairs]
    kids = [k for _, k in pairs]
    if all(s == EMPTY for s in states):
        return EMPTY, node
    if all(s == FULL for s in states):
        return FULL, node
    if isinstance(node, _P):
        fulls = [k for k, s in zip(kids, states) if s == FULL]
        empties = [k for k, s in zip(kids, states) if s == EMPTY]
        parts = [k for k, s in zip(kids, states) if s == PART]
        if len(parts) > 1:
            raise _Fail
        head = [_mkp(fulls)] if fulls else []
        tail = [_mkp(empties)] if empties else []
        mid = parts[0].kids if parts else []
        return PART, _mkq(head + mid + tail)
    m = len(kids)
    nonempty = [x for x, s in enumerate(states) if s != EMPTY]
    i, j = nonempty[0], nonempty[-1]
    for x in range(i, j + 1):
        if states[x] == EMPTY:
            raise _Fail
        if states[x] == PART and i < x < j:
            raise _Fail
    # the block must reach one end of the child list, full side outward
    if j == m - 1 and (states[j] == FULL or i == j):
        kids = kids[::-1]
        states = states[::-1]
        i, j = m - 1 - j, m - 1 - i
    if not (i == 0 and (states[0] == FULL or i == j)):
        raise _Fail
    tail = kids[j].kids if states[j] == PART else [kids[j]]
    return PART, _mkq(kids[i:j] + tail + kids[j + 1:])


def _root_arrange(node, cols):
    """Apply a row at its pertinent root; other children stay free."""
    pairs = [_arrange(k, cols) for k in node.kids]
    states = [s for s, _ in pairs]
    kids = [k for _, k in pairs]
    if all(s == FULL for s in states):
        return node
    if isinstance(node, _P):
        fulls = [k for k, s in zip(kids, states) if s == FULL]
        empties = [k for k, s in zip(kids, states) if s == EMPTY]
        parts = [k for k, s in zip(kids, states) if s == PART]
        if len(parts) > 2:
            raise _Fail
        if not parts:
            return _mkp(empties + [_mkp(fulls)])
        if len(parts) == 1:
            head = [_mkp(fulls)] if fulls else []
            run = _mkq(head + parts[0].kids)
            return _mkp(empties + [run])
        mid = [_mkp(fulls)] if fulls else []
        run = _mkq(list(reversed(parts[0].kids)) + mid + parts[1].kids)
        return _mkp(empties + [run])
    m = len(kids)
    nonempty = [x for x, s in enumerate(states) if s != EMPTY]
    i, j = nonempty[0], nonempty[-1]
    for x in range(i, j + 1):
        if states[x] == EMPTY:
            raise _Fail
        if states[x] == PART and i < x < j:
            raise _Fail
    mid = []
    for x in range(i, j + 1):
        if states[x] == PART:
            mid += list(reversed(kids[x].kids)) if x == i else kids[x].kids
        else:
            mid.append(kids[x])
    return _mkq(kids[:i] + mid + kids[j + 1:])


def _reduce(tree, cols):
    want = len(cols)
    cnt = {}
    _count(tree, cols, cnt)
    cur, above = tree, None
    while True:
        down = None
        for x, k in enumerate(cur.kids):
            c = cnt[id(k)]
            if c == want and not isinstance(k, _Leaf):
                down = x
                break
            if c:
                break
        if down is None:
            break
        above = (cur, down)
        cur = cur.kids[down]
    new = _root_arrange(cur, cols)
    if new is not cur:
        if above is not None:
            parent, x = above
            parent.kids[x] = new
        else:
            tree = new
    return tree


def _frontier(node, out):
    if isinstance(node, _Leaf):
        out.append(node.col)
        return
    for k in node.kids:
        _frontier(k, out)


def consecutive_ones(rows, ncols):
    """A column order making every row's set contiguous, or None."""
    if ncols == 0:
        return []
    if ncols == 1:
        return [0]
    tree = _P([_Leaf(c) for c in range(ncols)])
    for row in rows:
        s = frozenset(row)
        if len(s) <= 1 or len(s) >= ncols:
            continue
        try:
            tree = _reduce(tree, s)
        except _Fail:
            return None
    out = []
    _frontier(tree, out)
    return out


def circular_ones(rows, ncols):
    """A circular column order making every row's set contiguous on the
    circle, or None.  Rows through column 0 are complemented; a set is
    circularly contiguous exactly when its complement is."""
    if ncols <= 3:
        return list(range(ncols))
    allc = frozenset(range(ncols))
    fixed = []
    for row in rows:
        s = frozenset(row)
        fixed.append(allc - s if 0 in s else s)
    return consecutive_ones(fixed, ncols)
