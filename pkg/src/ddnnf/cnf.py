"""DIMACS CNF input and the clause-to-d-DNNF primitive."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import InputFormatError
from .nnf import NnfBuilder

log = logging.getLogger(__name__)


@dataclass
class CnfTheory:
    atom_count: int
    clauses: list = field(default_factory=list)

    def __post_init__(self):
        self.clauses = [tuple(c) for c in self.clauses]
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.atom_count:
                    raise ValueError("literal %d outside atoms 1..%d" % (lit, self.atom_count))

    @property
    def vocabulary(self):
        return frozenset(range(1, self.atom_count + 1))

    def to_dimacs(self):
        lines = ["p cnf %d %d" % (self.atom_count, len(self.clauses))]
        lines += [" ".join(map(str, c + (0,))) for c in self.clauses]
        return "\n".join(lines) + "\n"


def _clean_clause(lits, line):
    seen = []
    for lit in lits:
        if -lit in seen:
            log.warning("line %s: dropping tautological clause %s", line, lits)
            return None
        if lit not in seen:
            seen.append(lit)
    return tuple(seen)


def parse_dimacs(text):
    """Parse DIMACS CNF text (str or bytes).

    Duplicate literals are merged; tautologies are dropped after the clause
    count has been checked against the header.
    """
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    raw = []
    current = []
    current_line = None
    for no, line in enumerate(text.splitlines(), 1):
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "%":
            break
        if toks[0] == "p":
            if header is not None:
                raise InputFormatError("duplicate problem line", no)
            if len(toks) != 4 or toks[1] != "cnf":
                raise InputFormatError("expected 'p cnf <atoms> <clauses>'", no)
            try:
                header = (int(toks[2]), int(toks[3]))
            except ValueError:
                raise InputFormatError("non-integer problem line field", no) from None
            if header[0] < 0 or header[1] < 0:
                raise InputFormatError("negative count in problem line", no)
            continue
        if header is None:
            raise InputFormatError("clause before problem line", no)
        for tok in toks:
            try:
                lit = int(tok)
            except ValueError:
                raise InputFormatError("non-integer token %r" % tok, no) from None
            if lit == 0:
                raw.append((current, current_line or no))
                current = []
                current_line = None
                continue
            if abs(lit) > header[0]:
                raise InputFormatError("atom %d exceeds declared count %d" % (abs(lit), header[0]), no)
            if current_line is None:
                current_line = no
            current.append(lit)
    if header is None:
        raise InputFormatError("missing problem line")
    if current:
        raise InputFormatError("clause not terminated by 0", current_line)
    if len(raw) != header[1]:
        raise InputFormatError("header announces %d clauses, found %d" % (header[1], len(raw)))
    clauses = []
    for lits, no in raw:
        c = _clean_clause(lits, no)
        if c is not None:
            clauses.append(c)
    return CnfTheory(header[0], clauses)


def condition_clause(clause, alpha):
    """Condition a clause on instantiation ``alpha``.

    Returns None when some literal of the clause is in ``alpha`` (satisfied),
    otherwise the residue with falsified literals removed (``()`` is false).
    """
    residue = []
    for lit in clause:
        if lit in alpha:
            return None
        if -lit not in alpha:
            residue.append(lit)
    return tuple(residue)


def clause_nodes(builder, clause):
    """Add the Shannon chain ``l1 | (-l1 & l2) | (-l1 & -l2 & l3) | ...``."""
    if not clause:
        return builder.false()
    disjuncts = []
    negated = []
    for lit in clause:
        leaf = builder.literal(lit)
        disjuncts.append(builder.conjoin(negated + [leaf]) if negated else leaf)
        negated.append(builder.literal(-lit))
    return builder.disjoin(disjuncts)


def clause_to_ddnnf(clause, atom_count=None):
    if atom_count is None:
        atom_count = max((abs(l) for l in clause), default=0)
    b = NnfBuilder()
    root = clause_nodes(b, tuple(clause))
    return b.build(root, atom_count, decomposable=True, deterministic=True)
