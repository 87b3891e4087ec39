"""NNF sentences as hash-consed, topologically ordered DAGs.

Node ids index parallel arrays (``kinds``, ``lits``, ``children``); every child
id is smaller than its parent's id. Size is measured in edges.
"""

from __future__ import annotations

from itertools import product

from .errors import InputFormatError, NotSmoothError, OracleLimitError
from .literals import instantiation

LIT, TRUE, FALSE, AND, OR = range(5)


class NnfBuilder:
    """Append-only node arena with structural sharing.

    ``conjoin``/``disjoin`` with ``simplify=True`` propagate constants, drop
    duplicate children and collapse unary nodes. With ``simplify=False`` the
    node is created exactly as requested (empty And/Or still map to True/False).
    """

    def __init__(self):
        self.kinds = []
        self.lits = []
        self.children = []
        self._index = {}

    def __len__(self):
        return len(self.kinds)

    def _add(self, kind, lit, children):
        key = (kind, lit, children)
        node = self._index.get(key)
        if node is None:
            node = len(self.kinds)
            self.kinds.append(kind)
            self.lits.append(lit)
            self.children.append(children)
            self._index[key] = node
        return node

    def literal(self, lit):
        if lit == 0:
            raise ValueError("0 is not a literal")
        return self._add(LIT, lit, ())

    def true(self):
        return self._add(TRUE, 0, ())

    def false(self):
        return self._add(FALSE, 0, ())

    def conjoin(self, children, simplify=True):
        children = tuple(children)
        if simplify:
            kept = []
            for c in children:
                k = self.kinds[c]
                if k == FALSE:
                    return self.false()
                if k != TRUE and c not in kept:
                    kept.append(c)
            if len(kept) == 1:
                return kept[0]
            children = tuple(kept)
        if not children:
            return self.true()
        return self._add(AND, 0, children)

    def disjoin(self, children, simplify=True):
        children = tuple(children)
        if simplify:
            kept = []
            for c in children:
                k = self.kinds[c]
                if k == TRUE:
                    return self.true()
                if k != FALSE and c not in kept:
                    kept.append(c)
            if len(kept) == 1:
                return kept[0]
            children = tuple(kept)
        if not children:
            return self.false()
        return self._add(OR, 0, children)

    def copy_node(self, dag, node, mapping):
        """Re-create ``dag``'s ``node`` here, children translated through ``mapping``."""
        kind = dag.kinds[node]
        if kind == LIT:
            return self.literal(dag.lits[node])
        if kind == TRUE:
            return self.true()
        if kind == FALSE:
            return self.false()
        kids = [mapping[c] for c in dag.children[node]]
        if kind == AND:
            return self.conjoin(kids, simplify=False)
        return self.disjoin(kids, simplify=False)

    def build(self, root, atom_count, decomposable=False, deterministic=False, smooth=False):
        """Freeze the sub-DAG reachable from ``root`` into an :class:`NnfDag`."""
        reach = [False] * len(self.kinds)
        reach[root] = True
        for node in range(root, -1, -1):
            if reach[node]:
                for c in self.children[node]:
                    reach[c] = True
        renum = {}
        kinds, lits, children = [], [], []
        for node in range(root + 1):
            if reach[node]:
                renum[node] = len(kinds)
                kinds.append(self.kinds[node])
                lits.append(self.lits[node])
                children.append(tuple(renum[c] for c in self.children[node]))
        return NnfDag(kinds, lits, children, atom_count,
                      decomposable=decomposable, deterministic=deterministic, smooth=smooth)


class NnfDag:
    """Immutable rooted NNF DAG. The root is the last node.

    The ``decomposable``/``deterministic``/``smooth`` flags are certificates set
    by whichever algorithm constructed the DAG; they are not re-verified here.
    """

    def __init__(self, kinds, lits, children, atom_count,
                 decomposable=False, deterministic=False, smooth=False):
        self.kinds = tuple(kinds)
        self.lits = tuple(lits)
        self.children = tuple(children)
        if not self.kinds:
            raise ValueError("an NNF DAG needs at least one node")
        for node, kids in enumerate(self.children):
            for c in kids:
                if not 0 <= c < node:
                    raise ValueError("child %d of node %d breaks topological order" % (c, node))
        self.atom_count = atom_count
        self.decomposable = decomposable
        self.deterministic = deterministic
        self.smooth = smooth
        self._atoms = None

    @property
    def root(self):
        return len(self.kinds) - 1

    @property
    def node_count(self):
        return len(self.kinds)

    @property
    def size(self):
        """Number of edges."""
        return sum(len(k) for k in self.children)

    @property
    def vocabulary(self):
        return frozenset(range(1, self.atom_count + 1))

    def atoms(self):
        """Per-node atom sets, computed once."""
        if self._atoms is None:
            out = []
            empty = frozenset()
            for node, kind in enumerate(self.kinds):
                if kind == LIT:
                    out.append(frozenset((abs(self.lits[node]),)))
                elif kind in (TRUE, FALSE):
                    out.append(empty)
                else:
                    kids = self.children[node]
                    if len(kids) == 1:
                        out.append(out[kids[0]])
                    else:
                        out.append(frozenset().union(*(out[c] for c in kids)))
            self._atoms = out
        return self._atoms

    def reachable_mask(self):
        mask = [False] * len(self.kinds)
        mask[-1] = True
        for node in range(len(self.kinds) - 1, -1, -1):
            if mask[node]:
                for c in self.children[node]:
                    mask[c] = True
        return mask

    def literal_set(self):
        """Literals of leaves reachable from the root."""
        mask = self.reachable_mask()
        return {self.lits[n] for n, k in enumerate(self.kinds) if k == LIT and mask[n]}

    def with_flags(self, **flags):
        params = dict(decomposable=self.decomposable, deterministic=self.deterministic,
                      smooth=self.smooth)
        params.update(flags)
        return NnfDag(self.kinds, self.lits, self.children, self.atom_count, **params)

    def __repr__(self):
        return "NnfDag(nodes=%d, edges=%d, atoms=%d)" % (self.node_count, self.size, self.atom_count)

    def describe(self, node=None):
        """Infix rendering, for debugging small DAGs."""
        if node is None:
            node = self.root
        kind = self.kinds[node]
        if kind == LIT:
            return str(self.lits[node])
        if kind == TRUE:
            return "T"
        if kind == FALSE:
            return "F"
        op = " & " if kind == AND else " | "
        return "(" + op.join(self.describe(c) for c in self.children[node]) + ")"


def atoms_of(dag, node=None):
    if node is None:
        node = dag.root
    return dag.atoms()[node]


def is_decomposable(dag):
    atoms = dag.atoms()
    for node, kind in enumerate(dag.kinds):
        if kind != AND:
            continue
        seen = set()
        for c in dag.children[node]:
            if not seen.isdisjoint(atoms[c]):
                return False
            seen |= atoms[c]
    return True


def is_deterministic_oracle(dag, max_atoms=16):
    """Exhaustively check that the disjuncts of every Or are pairwise inconsistent."""
    from ._tables import TableSpace
    from .oracle import node_tables

    atoms = sorted(atoms_of(dag))
    if len(atoms) > max_atoms:
        raise OracleLimitError("%d atoms exceed the determinism oracle cap of %d"
                               % (len(atoms), max_atoms))
    tables = node_tables(dag, TableSpace(atoms))
    for node, kind in enumerate(dag.kinds):
        if kind != OR:
            continue
        seen = 0
        for c in dag.children[node]:
            if seen & tables[c]:
                return False
            seen |= tables[c]
    return True


def evaluate(dag, assignment):
    """Truth value of ``dag`` under a total assignment (iterable of literals)."""
    lits = set(assignment)
    missing = [a for a in atoms_of(dag) if a not in lits and -a not in lits]
    if missing:
        raise ValueError("assignment does not cover atoms %s" % sorted(missing))
    values = []
    for node, kind in enumerate(dag.kinds):
        if kind == LIT:
            values.append(dag.lits[node] in lits)
        elif kind == TRUE:
            values.append(True)
        elif kind == FALSE:
            values.append(False)
        elif kind == AND:
            values.append(all(values[c] for c in dag.children[node]))
        else:
            values.append(any(values[c] for c in dag.children[node]))
    return values[dag.root]


def condition(dag, gamma):
    """Replace every atom instantiated by ``gamma`` with a constant.

    No further simplification happens, so the node structure is kept apart
    from literal leaves turning into True/False (and merging with each other).
    """
    gamma = instantiation(gamma)
    b = NnfBuilder()
    mapping = []
    for node, kind in enumerate(dag.kinds):
        if kind == LIT:
            lit = dag.lits[node]
            if lit in gamma:
                mapping.append(b.true())
                continue
            if -lit in gamma:
                mapping.append(b.false())
                continue
        mapping.append(b.copy_node(dag, node, mapping))
    return b.build(mapping[dag.root], dag.atom_count,
                   decomposable=dag.decomposable, deterministic=dag.deterministic)


def conjoin_instantiation(dag, alpha):
    """``(dag | alpha) AND alpha`` as one decomposable DAG."""
    alpha = instantiation(alpha)
    conditioned = condition(dag, alpha)
    b = NnfBuilder()
    mapping = []
    for node in range(conditioned.node_count):
        mapping.append(b.copy_node(conditioned, node, mapping))
    leaves = [b.literal(lit) for lit in sorted(alpha, key=abs)]
    root = b.conjoin([mapping[conditioned.root]] + leaves, simplify=True)
    return b.build(root, max(dag.atom_count, max((abs(l) for l in alpha), default=0)),
                   decomposable=dag.decomposable, deterministic=dag.deterministic)


def or_nodes_smooth(dag):
    """Second smoothness condition: each disjunct mentions all atoms of its Or."""
    atoms = dag.atoms()
    for node, kind in enumerate(dag.kinds):
        if kind == OR:
            mine = atoms[node]
            if any(atoms[c] != mine for c in dag.children[node]):
                return False
    return True


def enumerate_models(dag):
    """All models of a smooth d-DNNF, as literal tuples sorted by atom.

    Each model mentions exactly the atoms of the root; determinism makes the
    per-Or unions disjoint, so no deduplication happens.
    """
    if not or_nodes_smooth(dag):
        raise NotSmoothError("model enumeration needs every Or's disjuncts to share its atoms")
    models = []
    for node, kind in enumerate(dag.kinds):
        if kind == LIT:
            models.append([(dag.lits[node],)])
        elif kind == TRUE:
            models.append([()])
        elif kind == FALSE:
            models.append([])
        elif kind == OR:
            acc = []
            for c in dag.children[node]:
                acc.extend(models[c])
            models.append(acc)
        else:
            parts = [models[c] for c in dag.children[node]]
            if any(not p for p in parts):
                models.append([])
            else:
                models.append([sum(combo, ()) for combo in product(*parts)])
    return [tuple(sorted(m, key=abs)) for m in models[dag.root]]


# -- text format -----------------------------------------------------------

def write_nnf(dag):
    lines = ["nnf %d %d %d" % (dag.node_count, dag.size, dag.atom_count)]
    for node, kind in enumerate(dag.kinds):
        if kind == LIT:
            lines.append("L %d" % dag.lits[node])
        elif kind == TRUE:
            lines.append("A 0")
        elif kind == FALSE:
            lines.append("O 0")
        else:
            kids = dag.children[node]
            tag = "A" if kind == AND else "O"
            lines.append("%s %d %s" % (tag, len(kids), " ".join(map(str, kids))))
    return "\n".join(lines) + "\n"


def read_nnf(text):
    """Parse the NNF text format; the last node is the root."""
    if isinstance(text, bytes):
        text = text.decode()
    rows = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    rows = [(no, toks) for no, toks in rows if toks and toks[0] != "c"]
    if not rows:
        raise InputFormatError("empty NNF input")
    head_no, head = rows[0]
    if len(head) != 4 or head[0] != "nnf":
        raise InputFormatError("expected header 'nnf <nodes> <edges> <atoms>'", head_no)
    try:
        n_nodes, n_edges, n_atoms = (int(x) for x in head[1:])
    except ValueError:
        raise InputFormatError("non-integer header field", head_no) from None
    body = rows[1:]
    if len(body) != n_nodes:
        raise InputFormatError("header announces %d nodes, found %d" % (n_nodes, len(body)), head_no)
    kinds, lits, children = [], [], []
    edges = 0
    for node, (no, toks) in enumerate(body):
        try:
            nums = [int(x) for x in toks[1:]]
        except ValueError:
            raise InputFormatError("non-integer field", no) from None
        tag = toks[0]
        if tag == "L":
            if len(nums) != 1 or nums[0] == 0 or abs(nums[0]) > n_atoms:
                raise InputFormatError("bad literal line", no)
            kinds.append(LIT)
            lits.append(nums[0])
            children.append(())
        elif tag in ("A", "O"):
            if not nums or nums[0] != len(nums) - 1:
                raise InputFormatError("child count does not match the listed children", no)
            kids = tuple(nums[1:])
            if any(not 0 <= c < node for c in kids):
                raise InputFormatError("child reference must name an earlier node", no)
            if not kids:
                kinds.append(TRUE if tag == "A" else FALSE)
            else:
                kinds.append(AND if tag == "A" else OR)
            lits.append(0)
            children.append(kids)
            edges += len(kids)
        else:
            raise InputFormatError("unknown node tag %r" % tag, no)
    if edges != n_edges:
        raise InputFormatError("header announces %d edges, found %d" % (n_edges, edges), head_no)
    return NnfDag(kinds, lits, children, n_atoms)


def reachable(dag):
    """Copy of ``dag`` restricted to nodes reachable from its root (flags kept)."""
    b = NnfBuilder()
    mapping = []
    for node in range(dag.node_count):
        mapping.append(b.copy_node(dag, node, mapping))
    return b.build(mapping[dag.root], dag.atom_count, decomposable=dag.decomposable,
                   deterministic=dag.deterministic, smooth=dag.smooth)
