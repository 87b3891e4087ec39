"""Brute-force ground truth over truth tables.

Nothing here touches compilation, smoothing or counting graphs. Each theory
is turned into a truth table by its own semantics (clause satisfaction, NNF
connectives, BDD branching), swept bit-parallel over all assignments.
"""

from __future__ import annotations

import math
import os

from ._tables import TableSpace
from .bdd import Bdd, bdd_semantics
from .cnf import CnfTheory
from .errors import OracleLimitError
from .literals import assignment_from_index, instantiation
from .nnf import AND, FALSE, LIT, TRUE, NnfDag, evaluate

DEFAULT_MAX_ATOMS = 20


def max_atoms():
    return int(os.environ.get("DDNNF_ORACLE_MAX_ATOMS", DEFAULT_MAX_ATOMS))


def default_vocabulary(theory):
    if isinstance(theory, Bdd):
        return range(1, theory.var_count + 1)
    return range(1, theory.atom_count + 1)


def _space(theory, vocabulary):
    if vocabulary is None:
        vocabulary = default_vocabulary(theory)
    vocab = sorted(set(vocabulary))
    cap = max_atoms()
    if len(vocab) > cap:
        raise OracleLimitError("oracle vocabulary of %d atoms exceeds the cap of %d" % (len(vocab), cap))
    return TableSpace(vocab)


def node_tables(dag, space):
    """Truth table of every NNF node over ``space``."""
    tables = []
    for node, kind in enumerate(dag.kinds):
        if kind == LIT:
            tables.append(space.literal(dag.lits[node]))
        elif kind == TRUE:
            tables.append(space.full)
        elif kind == FALSE:
            tables.append(0)
        elif kind == AND:
            t = space.full
            for c in dag.children[node]:
                t &= tables[c]
            tables.append(t)
        else:
            t = 0
            for c in dag.children[node]:
                t |= tables[c]
            tables.append(t)
    return tables


def _bdd_table(bdd, space):
    tables = {}
    for i in bdd.order:
        nd = bdd.nodes[i]
        if nd.var:
            x = space.literal(nd.var)
            tables[i] = (tables[nd.low] & ~x & space.full) | (tables[nd.high] & x)
        else:
            tables[i] = space.full if nd.value else 0
    return tables[bdd.root]


def _cnf_table(cnf, space):
    t = space.full
    for clause in cnf.clauses:
        c = 0
        for lit in clause:
            c |= space.literal(lit)
        t &= c
    return t


def truth_table(theory, space):
    if isinstance(theory, CnfTheory):
        return _cnf_table(theory, space)
    if isinstance(theory, NnfDag):
        return node_tables(theory, space)[theory.root]
    if isinstance(theory, Bdd):
        return _bdd_table(theory, space)
    raise TypeError("unsupported theory type %s" % type(theory).__name__)


def _table(theory, vocabulary, context=()):
    space = _space(theory, vocabulary)
    context = instantiation(context)
    return space, truth_table(theory, space) & space.conjunction(context)


def oracle_models(theory, vocabulary=None, context=()):
    """Models over ``vocabulary`` (sorted literal tuples), optionally restricted by ``context``."""
    space, t = _table(theory, vocabulary, context)
    return list(space.models(t))


def oracle_count(theory, vocabulary=None, context=()):
    return _table(theory, vocabulary, context)[1].bit_count()


def oracle_consistent(theory, vocabulary=None, context=()):
    return _table(theory, vocabulary, context)[1] != 0


def oracle_entails(theory, vocabulary=None, context=(), literal=None):
    space, t = _table(theory, vocabulary, context)
    return t & space.literal(-literal) == 0


def _cardinality(model, sigma):
    return sum(1 for lit in model if lit < 0 and -lit in sigma)


def oracle_min_cardinality(theory, sigma, vocabulary=None, context=()):
    sigma = frozenset(sigma)
    models = oracle_models(theory, vocabulary, context)
    return min((_cardinality(m, sigma) for m in models), default=math.inf)


def oracle_min_models(theory, sigma, vocabulary=None, context=()):
    """Models of minimum Sigma-cardinality."""
    sigma = frozenset(sigma)
    models = oracle_models(theory, vocabulary, context)
    best = min((_cardinality(m, sigma) for m in models), default=math.inf)
    return [m for m in models if _cardinality(m, sigma) == best]


def _satisfies(theory, assignment):
    if isinstance(theory, CnfTheory):
        lits = set(assignment)
        return all(any(l in lits for l in c) for c in theory.clauses)
    if isinstance(theory, NnfDag):
        return evaluate(theory, assignment)
    if isinstance(theory, Bdd):
        return bdd_semantics(theory, assignment) == 1
    raise TypeError("unsupported theory type %s" % type(theory).__name__)


def oracle_models_slow(theory, vocabulary=None):
    """One-assignment-at-a-time sweep; a cross-check for the bit-parallel path."""
    vocab = sorted(set(vocabulary if vocabulary is not None else default_vocabulary(theory)))
    if len(vocab) > max_atoms():
        raise OracleLimitError("oracle vocabulary too large")
    out = []
    for i in range(1 << len(vocab)):
        a = assignment_from_index(i, vocab)
        if _satisfies(theory, a):
            out.append(a)
    return out
