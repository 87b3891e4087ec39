"""Truth maintenance, clause tagging, belief revision with defaults, and
minimum-cardinality diagnosis on top of the counting engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cnf import CnfTheory
from .counting import build_counting_graph, count_assert, count_flip, count_retract
from .literals import instantiation
from .minimizer import INF, min_cardinality, minimize
from .nnf import conjoin_instantiation, enumerate_models
from .smoothing import smooth

MINIMIZE_JOINT = "minimize-joint"
MINIMIZE_FIRST = "minimize-first"


class TmsSession:
    """Complete truth maintenance over one counting graph.

    Every context change re-runs both sweeps; all queries afterwards are
    constant-time lookups.
    """

    def __init__(self, graph, context=()):
        self.graph = graph
        self.set_context(context)

    @property
    def vocabulary(self):
        return self.graph.vocabulary

    @property
    def context(self):
        return self.state.context

    def set_context(self, context):
        self.state = self.graph.query(context)

    def add(self, lit):
        self.set_context(self.context | {lit})

    def remove(self, lit):
        if lit not in self.context:
            raise ValueError("literal %d is not in the context" % lit)
        self.set_context(self.context - {lit})

    @property
    def count(self):
        return self.state.count

    def count_assert(self, lit):
        return count_assert(self.state, lit)

    def count_retract(self, lit):
        return count_retract(self.state, lit)

    def count_flip(self, lit):
        return count_flip(self.state, lit)

    def entails(self, lit):
        if abs(lit) not in self.vocabulary:
            raise ValueError("literal %d outside the vocabulary" % lit)
        if self.count == 0 or lit in self.context:
            return True
        if -lit in self.context:
            return False
        return self.state.derivative(-lit) == 0

    def retract_consistent(self, lit):
        return self.count_retract(lit) > 0

    def flip_consistent(self, lit):
        return self.count_flip(lit) > 0

    def entailed_literals(self):
        return frozenset(l for a in sorted(self.vocabulary) for l in (a, -a) if self.entails(l))


def unit_closure(cnf, literals=()):
    """Close ``cnf`` plus ``literals`` under unit resolution.

    Returns ``(derived, conflict)``: the literal set reached and whether an
    empty clause was derived.
    """
    derived = set(literals)
    changed = True
    while changed:
        changed = False
        for clause in cnf.clauses:
            if any(l in derived for l in clause):
                continue
            open_lits = [l for l in clause if -l not in derived]
            if not open_lits:
                return frozenset(derived), True
            if len(open_lits) == 1:
                derived.add(open_lits[0])
                changed = True
    return frozenset(derived), False


@dataclass
class TaggedTheory:
    original: CnfTheory
    cnf: CnfTheory
    tags: list  # tags[i] is the atom standing for original clause i

    @property
    def initial_context(self):
        return frozenset(self.tags)


def tag_clauses(cnf):
    """Replace each clause ``alpha`` with ``C_alpha <-> alpha`` over fresh atoms."""
    n = cnf.atom_count
    clauses = []
    tags = []
    for i, clause in enumerate(cnf.clauses):
        tag = n + 1 + i
        tags.append(tag)
        clauses.append((-tag,) + tuple(clause))
        clauses.extend((-lit, tag) for lit in clause)
    return TaggedTheory(cnf, CnfTheory(n + len(cnf.clauses), clauses), tags)


@dataclass
class DefaultSet:
    """Default (or health) atoms, each assumed true until revised."""
    atoms: frozenset

    def __post_init__(self):
        self.atoms = frozenset(self.atoms)

    @property
    def assumed(self):
        return frozenset(self.atoms)


def _dedupe_projections(models, atoms, cap):
    seen = []
    index = set()
    truncated = False
    for m in models:
        proj = frozenset(l for l in m if abs(l) in atoms)
        if proj in index:
            continue
        if len(seen) >= cap:
            truncated = True
            break
        index.add(proj)
        seen.append(proj)
    return seen, truncated


@dataclass
class RevisionReport:
    mode: str
    min_cardinality: float
    count: int
    entailed: frozenset
    revised_defaults: list
    truncated: bool
    session: TmsSession = field(repr=False)

    @property
    def consistent(self):
        return self.count > 0


def revise(theory, defaults, observation, mode=MINIMIZE_JOINT, vocabulary=None, cap=1024):
    """Revise the defaults of smooth d-DNNF ``theory`` in light of ``observation``.

    ``minimize-joint`` minimizes theory AND observation; ``minimize-first``
    minimizes the theory alone and then evaluates under the observation. The
    session in the report answers assert/retract/flip counts.
    """
    if isinstance(defaults, DefaultSet):
        defaults = defaults.atoms
    defaults = frozenset(defaults)
    observation = instantiation(observation)
    if vocabulary is None:
        vocabulary = theory.vocabulary
    vocabulary = frozenset(vocabulary)
    outside = {abs(l) for l in observation} - vocabulary
    if outside:
        raise ValueError("observation atoms %s lie outside the vocabulary" % sorted(outside))
    if mode == MINIMIZE_JOINT:
        joint = smooth(conjoin_instantiation(theory, observation), vocabulary)
        mini = minimize(joint, defaults, vocabulary)
        context = frozenset()
    elif mode == MINIMIZE_FIRST:
        mini = minimize(theory, defaults, vocabulary)
        context = observation
    else:
        raise ValueError("unknown revision mode %r" % mode)
    session = TmsSession(build_counting_graph(mini, vocabulary), context)
    card = min_cardinality(mini, defaults, vocabulary)
    revised, truncated = [], False
    if session.count:
        models = enumerate_models(smooth(conjoin_instantiation(mini, context), vocabulary)) \
            if context else enumerate_models(mini)
        revised, truncated = _dedupe_projections(models, defaults, cap)
    return RevisionReport(mode, card, session.count, session.entailed_literals(),
                          revised, truncated, session)


@dataclass
class DiagnosisReport:
    min_cardinality: float
    diagnoses: list  # each a frozenset of health literals
    truncated: bool
    model_count: int
    predicted: frozenset  # literals entailed under every minimum-fault explanation

    @property
    def consistent(self):
        return self.model_count > 0


def diagnose(device, health, observation, vocabulary=None, cap=1024):
    """Minimum-cardinality diagnoses of smooth d-DNNF ``device`` and the behaviour
    they predict.

    ``diagnoses`` lists up to ``cap`` distinct health assignments; ``truncated``
    tells whether more exist.
    """
    if isinstance(health, DefaultSet):
        health = health.atoms
    health = frozenset(health)
    if vocabulary is None:
        vocabulary = device.vocabulary
    vocabulary = frozenset(vocabulary)
    if not health <= vocabulary:
        raise ValueError("health atoms must belong to the device vocabulary")
    observation = instantiation(observation)
    joint = smooth(conjoin_instantiation(device, observation), vocabulary)
    mini = minimize(joint, health, vocabulary)
    session = TmsSession(build_counting_graph(mini, vocabulary))
    if session.count == 0:
        return DiagnosisReport(INF, [], False, 0, frozenset())
    diagnoses, truncated = _dedupe_projections(enumerate_models(mini), health, cap)
    diagnoses.sort(key=lambda d: sorted(d, key=abs))
    return DiagnosisReport(min_cardinality(mini, health, vocabulary), diagnoses, truncated,
                           session.count, session.entailed_literals())
