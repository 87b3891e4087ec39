"""Smoothing of d-DNNF DAGs over a declared vocabulary."""

from __future__ import annotations

from .nnf import LIT, OR, NnfBuilder, or_nodes_smooth, reachable


def is_smooth(dag, vocabulary=None):
    """Both literals of every vocabulary atom appear, and every Or is atom-uniform."""
    if vocabulary is None:
        vocabulary = dag.vocabulary
    lits = dag.literal_set()
    if any(a not in lits or -a not in lits for a in vocabulary):
        return False
    return or_nodes_smooth(dag)


def _lone_literal_atoms(lits):
    return sorted({abs(l) for l in lits if -l not in lits})


def smooth(dag, vocabulary=None):
    """Return a smooth equivalent of ``dag`` over ``vocabulary``.

    Three rewrites, in one bottom-up pass:

    1. a literal whose complement never occurs becomes ``l | (-l & False)``;
    2. each disjunct missing Or-atoms ``M`` is conjoined with ``(A | -A)`` for A in M;
    3. vocabulary atoms absent from the DAG are padded in at the root.

    Rule 1 is skipped for atoms that rules 2 and 3 pad somewhere, since the
    padding already supplies both literals. Atom sets are unchanged by rules 1
    and 2, so parents see the same atoms they saw in the input. Padding nodes
    are shared.
    """
    if vocabulary is None:
        vocabulary = dag.vocabulary
    vocabulary = frozenset(vocabulary)
    dag = reachable(dag)
    atoms = dag.atoms()
    if not atoms[dag.root] <= vocabulary:
        raise ValueError("DAG mentions atoms outside the vocabulary: %s"
                         % sorted(atoms[dag.root] - vocabulary))
    padded = set(vocabulary - atoms[dag.root])
    for node, kind in enumerate(dag.kinds):
        if kind == OR:
            for c in dag.children[node]:
                padded |= atoms[node] - atoms[c]
    lits = dag.literal_set()
    lonely = {l for l in lits if -l not in lits and abs(l) not in padded}
    b = NnfBuilder()
    pads = {}

    def pad(a):
        if a not in pads:
            pads[a] = b.disjoin([b.literal(a), b.literal(-a)], simplify=False)
        return pads[a]

    mapping = []
    for node, kind in enumerate(dag.kinds):
        if kind == LIT and dag.lits[node] in lonely:
            lit = dag.lits[node]
            dead = b.conjoin([b.literal(-lit), b.false()], simplify=False)
            mapping.append(b.disjoin([b.literal(lit), dead], simplify=False))
        elif kind == OR:
            mine = atoms[node]
            kids = []
            for c in dag.children[node]:
                missing = sorted(mine - atoms[c])
                if missing:
                    kids.append(b.conjoin([mapping[c]] + [pad(a) for a in missing], simplify=False))
                else:
                    kids.append(mapping[c])
            mapping.append(b.disjoin(kids, simplify=False))
        else:
            mapping.append(b.copy_node(dag, node, mapping))
    root = mapping[dag.root]
    absent = sorted(vocabulary - atoms[dag.root])
    if absent:
        root = b.conjoin([root] + [pad(a) for a in absent], simplify=False)
    return b.build(root, max(dag.atom_count, max(vocabulary, default=0)),
                   decomposable=dag.decomposable, deterministic=dag.deterministic, smooth=True)


def size_bound(dag, vocabulary=None):
    """Edge budget ``smooth`` never exceeds.

    Every Or edge may grow by ``1 + |missing atoms|``, each lone literal adds a
    4-edge gadget, each padding node has 2 edges, and the root wrapper has at
    most ``|V| + 1``. This is at most ``(|V| + 1) * edges + 7 |V| + 1``.
    """
    if vocabulary is None:
        vocabulary = dag.vocabulary
    atoms = dag.atoms()
    grow = 0
    for node, kind in enumerate(dag.kinds):
        if kind == OR:
            for c in dag.children[node]:
                missing = len(atoms[node] - atoms[c])
                if missing:
                    grow += 1 + missing
    n_vocab = len(frozenset(vocabulary) | atoms[dag.root])
    lonely = len(_lone_literal_atoms(dag.literal_set()))
    return dag.size + grow + 4 * lonely + 2 * n_vocab + n_vocab + 1


def linear_factor_bound(dag, vocabulary=None):
    """The coarser O(|V|)-factor form of :func:`size_bound`."""
    if vocabulary is None:
        vocabulary = dag.vocabulary
    n = len(frozenset(vocabulary) | dag.atoms()[dag.root])
    return (n + 1) * dag.size + 7 * n + 1
