"""Decomposition trees over CNF clauses.

Nodes live in parallel lists, children before parents, root last. The width
of a dtree is the largest cluster over its internal nodes, where

* ``cutset(N)``  = separator(N) minus every ancestor's cutset,
* ``context(N)`` = atoms(N) intersected with the union of ancestor cutsets,
* ``cluster(N)`` = cutset(N) | context(N).

The compiler case-splits on ``cutset(N)`` and keys its cache on
``context(N)``, so a node is entered at most ``2**width`` times per parent.
"""

from __future__ import annotations

from .errors import InputFormatError

STRATEGIES = ("balanced", "min-fill")


class Dtree:
    def __init__(self, clauses):
        self.clauses = [tuple(c) for c in clauses]
        self.left = []
        self.right = []
        self.clause = []
        self.atoms = []

    def add_leaf(self, index):
        self.left.append(-1)
        self.right.append(-1)
        self.clause.append(index)
        self.atoms.append(frozenset(abs(l) for l in self.clauses[index]))
        return len(self.clause) - 1

    def add_internal(self, left, right):
        self.left.append(left)
        self.right.append(right)
        self.clause.append(-1)
        self.atoms.append(self.atoms[left] | self.atoms[right])
        return len(self.clause) - 1

    @property
    def root(self):
        return len(self.clause) - 1

    @property
    def node_count(self):
        return len(self.clause)

    def is_leaf(self, node):
        return self.clause[node] >= 0

    def leaves(self):
        return [n for n in range(self.node_count) if self.is_leaf(n)]

    def parents(self):
        parent = [-1] * self.node_count
        for n in range(self.node_count):
            if not self.is_leaf(n):
                parent[self.left[n]] = n
                parent[self.right[n]] = n
        return parent

    def clusters(self):
        """Per-node (cutset, context); leaves get an empty cutset."""
        cutsets = [frozenset()] * self.node_count
        contexts = [frozenset()] * self.node_count
        above = [frozenset()] * self.node_count  # union of ancestor cutsets
        for n in range(self.node_count - 1, -1, -1):
            contexts[n] = self.atoms[n] & above[n]
            if not self.is_leaf(n):
                cutsets[n] = separator(self, n) - above[n]
                below = above[n] | cutsets[n]
                above[self.left[n]] = below
                above[self.right[n]] = below
        return cutsets, contexts


def separator(dtree, node):
    if dtree.is_leaf(node):
        raise ValueError("node %d is a leaf and has no separator" % node)
    return dtree.atoms[dtree.left[node]] & dtree.atoms[dtree.right[node]]


def compute_width(dtree):
    cutsets, contexts = dtree.clusters()
    return max((len(cutsets[n] | contexts[n]) for n in range(dtree.node_count)
                if not dtree.is_leaf(n)), default=0)


def min_fill_order(clauses):
    """Min-fill elimination order over the atom interaction graph, ties to lowest atom."""
    adj = {}
    for c in clauses:
        atoms = {abs(l) for l in c}
        for a in atoms:
            adj.setdefault(a, set()).update(atoms - {a})
    order = []
    while adj:
        best = None
        for a in sorted(adj):
            nbrs = sorted(adj[a])
            fill = 0
            for i, u in enumerate(nbrs):
                for v in nbrs[i + 1:]:
                    if v not in adj[u]:
                        fill += 1
            if best is None or fill < best[0]:
                best = (fill, a)
                if fill == 0:
                    break
        a = best[1]
        nbrs = adj.pop(a)
        for u in nbrs:
            adj[u].discard(a)
            adj[u].update(nbrs - {u})
        order.append(a)
    return order


def _compose(dtree, nodes):
    acc = nodes[0]
    for n in nodes[1:]:
        acc = dtree.add_internal(acc, n)
    return acc


def dtree_from_order(clauses, order):
    """Group subtrees by the first atom of ``order`` they mention, left-deep."""
    dt = Dtree(clauses)
    alive = set()
    pending = {}  # tree -> atoms not yet eliminated
    index = {}  # atom -> trees that mentioned it (possibly merged away since)
    for i in range(len(clauses)):
        t = dt.add_leaf(i)
        alive.add(t)
        pending[t] = set(dt.atoms[t])
        for x in dt.atoms[t]:
            index.setdefault(x, []).append(t)
    for a in order:
        group = sorted({t for t in index.pop(a, ()) if t in alive})
        if len(group) > 1:
            merged = _compose(dt, group)
            alive.difference_update(group)
            alive.add(merged)
            pending[merged] = set().union(*(pending.pop(t) for t in group))
            for x in pending[merged]:
                index.setdefault(x, []).append(merged)
            group = [merged]
        for t in group:
            pending[t].discard(a)
    _compose(dt, sorted(alive))
    return dt


def _balanced(dt, lo, hi):
    if hi - lo == 1:
        return dt.add_leaf(lo)
    mid = (lo + hi) // 2
    left = _balanced(dt, lo, mid)
    right = _balanced(dt, mid, hi)
    return dt.add_internal(left, right)


def build_dtree(cnf, strategy="min-fill"):
    clauses = cnf.clauses if hasattr(cnf, "clauses") else list(cnf)
    if not clauses:
        raise ValueError("a dtree needs at least one clause")
    if strategy in ("min-fill", "elimination-order"):
        return dtree_from_order(clauses, min_fill_order(clauses))
    if strategy == "balanced":
        dt = Dtree(clauses)
        _balanced(dt, 0, len(clauses))
        return dt
    raise ValueError("unknown dtree strategy %r" % strategy)


def write_dtree(dtree):
    lines = ["dtree %d" % dtree.node_count]
    for n in range(dtree.node_count):
        if dtree.is_leaf(n):
            lines.append("L %d" % dtree.clause[n])
        else:
            lines.append("I %d %d" % (dtree.left[n], dtree.right[n]))
    return "\n".join(lines) + "\n"


def read_dtree(text, clauses):
    rows = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not rows or rows[0][1][0] != "dtree" or len(rows[0][1]) != 2:
        raise InputFormatError("expected header 'dtree <node-count>'", rows[0][0] if rows else None)
    count = int(rows[0][1][1])
    if len(rows) - 1 != count:
        raise InputFormatError("header announces %d nodes, found %d" % (count, len(rows) - 1), 1)
    dt = Dtree(clauses)
    for node, (no, toks) in enumerate(rows[1:]):
        if toks[0] == "L" and len(toks) == 2:
            idx = int(toks[1])
            if not 0 <= idx < len(clauses):
                raise InputFormatError("clause index %d out of range" % idx, no)
            dt.add_leaf(idx)
        elif toks[0] == "I" and len(toks) == 3:
            left, right = int(toks[1]), int(toks[2])
            if not (0 <= left < node and 0 <= right < node):
                raise InputFormatError("child must name an earlier node", no)
            dt.add_internal(left, right)
        else:
            raise InputFormatError("bad dtree line", no)
    return dt
