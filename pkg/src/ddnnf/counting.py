"""Counting graphs of smooth d-DNNFs: values, partial derivatives, and the
assertion / retraction / flipping counts read off them.

The sweeps run in ``_ckernels`` when the extension is built and fall back to
``_pykernels`` otherwise (or when ``DDNNF_PURE_PYTHON`` is set).
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass

from .errors import InconsistentContextError, NotSmoothError, StaleStateError
from .literals import instantiation
from .nnf import FALSE, LIT
from .smoothing import is_smooth

if os.environ.get("DDNNF_PURE_PYTHON"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

KERNEL = kernels.IMPLEMENTATION


class CountingGraph:
    """Arithmetic mirror of a smooth d-DNNF: ``*`` per And, ``+`` per Or, one
    variable node per literal. Immutable; evaluation state lives outside it.
    """

    def __init__(self, dag, vocabulary=None, kernel=None):
        if vocabulary is None:
            vocabulary = dag.vocabulary
        self.vocabulary = frozenset(vocabulary)
        self.dag = dag
        self.kernel = kernel or kernels
        n = dag.node_count
        self.kind = array("b", dag.kinds)
        ptr = [0]
        flat = []
        for kids in dag.children:
            flat.extend(kids)
            ptr.append(len(flat))
        self.ptr = array("q", ptr)
        self.idx = array("q", flat)
        # a literal may label several leaves (e.g. a file without sharing)
        self.nodes_of = {}
        for i in range(n):
            if dag.kinds[i] == LIT:
                self.nodes_of.setdefault(dag.lits[i], []).append(i)
        self._leaf_template = [0 if k == FALSE else 1 for k in dag.kinds]

    @property
    def size(self):
        return len(self.idx)

    @property
    def node_count(self):
        return len(self.kind)

    def _check_literal(self, lit):
        if abs(lit) not in self.vocabulary:
            raise ValueError("literal %d outside the vocabulary" % lit)

    def evaluate(self, context=()):
        """First sweep: node values under ``context``; the root value is the model count."""
        context = instantiation(context)
        for lit in context:
            self._check_literal(lit)
        val = list(self._leaf_template)
        for lit in context:
            for node in self.nodes_of.get(-lit, ()):
                val[node] = 0
        visits = self.kernel.evaluate(self.kind, self.ptr, self.idx, val)
        return EvaluationState(self, context, val, node_visits=visits)

    def differentiate(self, state):
        """Second sweep: partial derivative of the root value w.r.t. every node."""
        if state.graph is not self:
            raise StaleStateError("state belongs to another counting graph")
        pd, edges = self.kernel.differentiate(self.kind, self.ptr, self.idx, state.val)
        state.pd = pd
        state.edge_visits = edges
        return state

    def query(self, context=()):
        """Both sweeps."""
        return self.differentiate(self.evaluate(context))

    def count(self, context=()):
        return self.evaluate(context).count


@dataclass(eq=False)
class EvaluationState:
    graph: CountingGraph
    context: frozenset
    val: list
    pd: list = None
    node_visits: int = 0
    edge_visits: int = 0

    @property
    def count(self):
        return self.val[-1]

    def derivative(self, lit):
        """``dG/dV_lit``, summed over the leaves labelled ``lit`` (0 if there are none)."""
        if self.pd is None:
            raise StaleStateError("differentiate() has not run on this state")
        self.graph._check_literal(lit)
        return sum(self.pd[node] for node in self.graph.nodes_of.get(lit, ()))


def build_counting_graph(dag, vocabulary=None):
    if vocabulary is None:
        vocabulary = dag.vocabulary
    if not is_smooth(dag, vocabulary):
        raise NotSmoothError("counting graphs need a smooth d-DNNF; run smoothing.smooth first")
    return CountingGraph(dag, vocabulary)


def count_assert(state, lit):
    """Models of Delta + S + {lit}, for lit and its negation both outside S."""
    if lit in state.context or -lit in state.context:
        raise InconsistentContextError("assertion needs %d and %d outside the context" % (lit, -lit))
    return state.derivative(lit)


def count_retract(state, lit):
    """Models of Delta + S - {lit}, for lit in S."""
    if lit not in state.context:
        raise ValueError("literal %d is not in the context" % lit)
    return state.derivative(lit) + state.derivative(-lit)


def count_flip(state, lit):
    """Models of Delta + S - {lit} + {-lit}, for lit in S."""
    if lit not in state.context:
        raise ValueError("literal %d is not in the context" % lit)
    return state.count - state.derivative(lit) + state.derivative(-lit)
