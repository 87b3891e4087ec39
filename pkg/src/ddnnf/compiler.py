"""CNF to d-DNNF compilation by case analysis over a dtree."""

from __future__ import annotations

from itertools import product

from ._stack import drive
from .cnf import clause_nodes, condition_clause
from .dtree import build_dtree, separator
from .nnf import FALSE, NnfBuilder


def project(alpha, atoms):
    return frozenset(lit for lit in alpha if abs(lit) in atoms)


def _restrict(alpha, atoms):
    return {a: lit for a, lit in alpha.items() if a in atoms}


class Compiler:
    """One compilation run: owns the node arena, per-dtree-node caches and counters.

    ``calls`` counts every invocation of :meth:`cnf2ddnnf`, ``misses`` the ones
    that had to compute their result.
    """

    def __init__(self, cnf, dtree, cache=True):
        self.cnf = cnf
        self.dtree = dtree
        self.use_cache = cache
        self.builder = NnfBuilder()
        self.caches = [dict() for _ in range(dtree.node_count)]
        self._separators = [() if dtree.is_leaf(n) else tuple(sorted(separator(dtree, n)))
                            for n in range(dtree.node_count)]
        self.calls = 0
        self.misses = 0

    @property
    def cache_entries(self):
        return sum(len(c) for c in self.caches)

    def cnf2ddnnf(self, node, alpha):
        """Node id of ``(clauses under node) | alpha`` in the shared arena.

        ``alpha`` maps atom -> literal.
        """
        return drive(self._visit(node, alpha), self._visit)

    def _visit(self, node, alpha):
        # generator form of the recursion; ``yield (child, alpha)`` is a recursive call
        # callers hand down alpha already projected on atoms(node), so it is the cache key
        self.calls += 1
        dt = self.dtree
        psi = tuple(sorted(alpha.values(), key=abs))
        cache = self.caches[node]
        if self.use_cache and psi in cache:
            return cache[psi]
        self.misses += 1
        b = self.builder
        if dt.is_leaf(node):
            residue = condition_clause(dt.clauses[dt.clause[node]], frozenset(alpha.values()))
            gamma = b.true() if residue is None else clause_nodes(b, residue)
        else:
            left, right = dt.left[node], dt.right[node]
            split = [a for a in self._separators[node] if a not in alpha]
            disjuncts = []
            for beta in product(*[(-a, a) for a in split]):
                extended = dict(alpha)
                extended.update((abs(l), l) for l in beta)
                lhs = yield left, _restrict(extended, dt.atoms[left])
                if b.kinds[lhs] == FALSE:
                    continue
                rhs = yield right, _restrict(extended, dt.atoms[right])
                disjuncts.append(b.conjoin([lhs, rhs] + [b.literal(l) for l in beta]))
            gamma = b.disjoin(disjuncts)
        cache[psi] = gamma
        return gamma

    def run(self):
        root = self.cnf2ddnnf(self.dtree.root, {})
        return self.builder.build(root, self.cnf.atom_count, decomposable=True, deterministic=True)


def compile_cnf(cnf, dtree=None, strategy="min-fill", cache=True):
    """Compile ``cnf`` into a decomposable, deterministic NNF DAG."""
    if not cnf.clauses:
        b = NnfBuilder()
        return b.build(b.true(), cnf.atom_count, decomposable=True, deterministic=True)
    if dtree is None:
        dtree = build_dtree(cnf, strategy)
    return Compiler(cnf, dtree, cache=cache).run()
