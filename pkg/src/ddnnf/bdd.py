"""Binary decision diagrams: parsing, free/ordered classification, FBDD to d-DNNF."""

from __future__ import annotations

import enum
from graphlib import CycleError, TopologicalSorter
from typing import NamedTuple

from ._stack import drive
from .errors import InputFormatError, NotFreeError
from .nnf import NnfBuilder


class BddNode(NamedTuple):
    var: int   # 0 for leaves
    low: int
    high: int
    value: int  # leaf label, -1 for inner nodes


class BddClass(enum.Enum):
    GENERAL = "general"
    FREE = "free"
    ORDERED = "ordered"

    @property
    def is_free(self):
        return self is not BddClass.GENERAL


class Bdd:
    def __init__(self, nodes, root, var_count):
        self.nodes = list(nodes)
        self.root = root
        self.var_count = var_count
        self._validate()

    def _validate(self):
        n = len(self.nodes)
        labels = [nd.value for nd in self.nodes if nd.var == 0]
        if len(labels) != len(set(labels)):
            raise ValueError("duplicate leaf labels")
        for i, nd in enumerate(self.nodes):
            if nd.var:
                if not (0 <= nd.low < n and 0 <= nd.high < n):
                    raise ValueError("node %d has a dangling child reference" % i)
                if not 1 <= nd.var <= self.var_count:
                    raise ValueError("node %d tests variable %d outside 1..%d" % (i, nd.var, self.var_count))
        if not 0 <= self.root < n:
            raise ValueError("root %d out of range" % self.root)
        graph = {i: {nd.low, nd.high} if nd.var else set() for i, nd in enumerate(self.nodes)}
        try:
            self.order = list(TopologicalSorter(graph).static_order())  # children first
        except CycleError:
            raise ValueError("BDD contains a cycle") from None

    @property
    def size(self):
        return len(self.reachable())

    def reachable(self):
        seen = {self.root}
        stack = [self.root]
        while stack:
            nd = self.nodes[stack.pop()]
            if nd.var:
                for c in (nd.low, nd.high):
                    if c not in seen:
                        seen.add(c)
                        stack.append(c)
        return seen

    def vars_below(self):
        """For each node, the set of variables tested at it or below it."""
        out = {}
        for i in self.order:
            nd = self.nodes[i]
            if nd.var:
                out[i] = out[nd.low] | out[nd.high] | {nd.var}
            else:
                out[i] = frozenset()
        return out


def parse_bdd(text):
    """Parse ``bdd <node-count> <var-count>`` followed by ``0``/``1``/``N v lo hi`` lines."""
    if isinstance(text, bytes):
        text = text.decode()
    rows = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    rows = [(no, t) for no, t in rows if t and t[0] != "c"]
    if not rows:
        raise InputFormatError("empty BDD input")
    no, head = rows[0]
    if len(head) != 3 or head[0] != "bdd":
        raise InputFormatError("expected header 'bdd <node-count> <var-count>'", no)
    try:
        count, var_count = int(head[1]), int(head[2])
    except ValueError:
        raise InputFormatError("non-integer header field", no) from None
    body = rows[1:]
    if len(body) != count:
        raise InputFormatError("header announces %d nodes, found %d" % (count, len(body)), no)
    nodes = []
    for no, toks in body:
        try:
            if toks in (["0"], ["1"]):
                nodes.append(BddNode(0, -1, -1, int(toks[0])))
            elif toks[0] == "N" and len(toks) == 4:
                var, low, high = (int(x) for x in toks[1:])
                if not (0 <= low < count and 0 <= high < count):
                    raise InputFormatError("child reference beyond node count", no)
                nodes.append(BddNode(var, low, high, -1))
            else:
                raise InputFormatError("bad BDD line %r" % " ".join(toks), no)
        except ValueError:
            raise InputFormatError("non-integer field", no) from None
    try:
        return Bdd(nodes, len(nodes) - 1, var_count)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def write_bdd(bdd):
    lines = ["bdd %d %d" % (len(bdd.nodes), bdd.var_count)]
    for nd in bdd.nodes:
        lines.append(str(nd.value) if not nd.var else "N %d %d %d" % (nd.var, nd.low, nd.high))
    if bdd.root != len(bdd.nodes) - 1:
        raise ValueError("the text format requires the root to be the last node")
    return "\n".join(lines) + "\n"


def free_violation(bdd):
    """First reachable node whose variable is tested again below it, or None."""
    below = bdd.vars_below()
    for i in sorted(bdd.reachable()):
        nd = bdd.nodes[i]
        if nd.var and (nd.var in below[nd.low] or nd.var in below[nd.high]):
            return i
    return None


def classify(bdd):
    if free_violation(bdd) is not None:
        return BddClass.GENERAL
    precedes = {}
    for i in bdd.reachable():
        nd = bdd.nodes[i]
        if nd.var:
            precedes.setdefault(nd.var, set())
            for c in (nd.low, nd.high):
                cv = bdd.nodes[c].var
                if cv:
                    precedes.setdefault(cv, set()).add(nd.var)
    try:
        list(TopologicalSorter(precedes).static_order())
    except CycleError:
        return BddClass.FREE
    return BddClass.ORDERED


def bdd_semantics(bdd, assignment):
    """Follow the computation path for a total assignment (literal iterable or dict var->0/1)."""
    if isinstance(assignment, dict):
        values = assignment
    else:
        values = {abs(l): int(l > 0) for l in assignment}
    node = bdd.nodes[bdd.root]
    while node.var:
        if node.var not in values:
            raise ValueError("assignment does not cover variable %d" % node.var)
        node = bdd.nodes[node.high if values[node.var] else node.low]
    return node.value


class FbddConverter:
    """Linear-time FBDD to d-DNNF translation with one cache entry per BDD node."""

    def __init__(self, bdd):
        self.bdd = bdd
        self.builder = NnfBuilder()
        self.cache = {}
        self.calls = 0
        self.misses = 0

    def translate(self, m):
        return drive(self._visit(m), self._visit)

    def _visit(self, m):
        self.calls += 1
        if m in self.cache:
            return self.cache[m]
        self.misses += 1
        b = self.builder
        nd = self.bdd.nodes[m]
        if not nd.var:
            gamma = b.true() if nd.value == 1 else b.false()
        else:
            low = yield (nd.low,)
            high = yield (nd.high,)
            gamma = b.disjoin([b.conjoin([low, b.literal(-nd.var)]),
                               b.conjoin([high, b.literal(nd.var)])])
        self.cache[m] = gamma
        return gamma

    def run(self):
        bad = free_violation(self.bdd)
        if bad is not None:
            raise NotFreeError(bad, self.bdd.nodes[bad].var)
        root = self.translate(self.bdd.root)
        return self.builder.build(root, self.bdd.var_count, decomposable=True, deterministic=True)


def fbdd2ddnnf(bdd):
    return FbddConverter(bdd).run()
