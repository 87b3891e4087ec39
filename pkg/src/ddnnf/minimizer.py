"""Sigma-cardinality and minimization of smooth d-DNNFs."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotSmoothError
from .nnf import FALSE, LIT, OR, TRUE, NnfBuilder
from .smoothing import is_smooth

INF = math.inf


@dataclass
class CardinalityAnnotation:
    values: list
    sigma: frozenset

    @property
    def root(self):
        return self.values[-1]


def assign_cardinalities(dag, sigma):
    """Per-node minimum number of Sigma atoms set false; False leaves get INF."""
    sigma = frozenset(sigma)
    card = []
    for node, kind in enumerate(dag.kinds):
        if kind == LIT:
            lit = dag.lits[node]
            card.append(1 if lit < 0 and -lit in sigma else 0)
        elif kind == TRUE:
            card.append(0)
        elif kind == FALSE:
            card.append(INF)
        elif kind == OR:
            card.append(min(card[c] for c in dag.children[node]))
        else:
            card.append(sum(card[c] for c in dag.children[node]))
    return CardinalityAnnotation(card, sigma)


def _require_smooth(dag, sigma, vocabulary):
    if vocabulary is None:
        vocabulary = dag.vocabulary
    vocabulary = frozenset(vocabulary)
    if not frozenset(sigma) <= vocabulary:
        raise ValueError("sigma atoms %s lie outside the vocabulary" % sorted(frozenset(sigma) - vocabulary))
    if not is_smooth(dag, vocabulary):
        raise NotSmoothError("minimization needs a smooth d-DNNF")
    return vocabulary


def min_cardinality(dag, sigma, vocabulary=None):
    """Minimum Sigma-cardinality over all models; INF for an inconsistent theory."""
    _require_smooth(dag, sigma, vocabulary)
    return assign_cardinalities(dag, sigma).root


def minimize(dag, sigma, vocabulary=None, collapse=False):
    """Drop every Or edge whose child is costlier than the Or itself.

    The result keeps exactly the minimum-cardinality models. Unary Or nodes
    are kept unless ``collapse`` is set. A literal whose complement disappears
    with the deleted edges gets the ``l | (-l & False)`` gadget back, so the
    output is smooth over the same vocabulary.
    """
    vocabulary = _require_smooth(dag, sigma, vocabulary)
    card = assign_cardinalities(dag, sigma).values
    keep = _surviving(dag, card)
    present = {dag.lits[n] for n in range(dag.node_count) if keep[n] and dag.kinds[n] == LIT}
    b = NnfBuilder()
    mapping = [None] * dag.node_count
    for node, kind in enumerate(dag.kinds):
        if not keep[node]:
            continue
        if kind == LIT:
            lit = dag.lits[node]
            if -lit in present:
                mapping[node] = b.literal(lit)
            else:
                dead = b.conjoin([b.literal(-lit), b.false()], simplify=False)
                mapping[node] = b.disjoin([b.literal(lit), dead], simplify=False)
        elif kind == OR:
            kids = [mapping[c] for c in dag.children[node] if card[c] <= card[node]]
            mapping[node] = b.disjoin(kids, simplify=collapse and len(kids) == 1)
        else:
            mapping[node] = b.copy_node(dag, node, mapping)
    return b.build(mapping[dag.root], dag.atom_count, decomposable=dag.decomposable,
                   deterministic=dag.deterministic, smooth=True)


def _surviving(dag, card):
    keep = [False] * dag.node_count
    keep[dag.root] = True
    for node in range(dag.node_count - 1, -1, -1):
        if not keep[node]:
            continue
        kind = dag.kinds[node]
        for c in dag.children[node]:
            if kind != OR or card[c] <= card[node]:
                keep[c] = True
    return keep
