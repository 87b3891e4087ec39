"""Literal and instantiation primitives.

Literals are DIMACS-style signed integers: ``3`` is atom 3, ``-3`` its negation.
An instantiation is a frozenset of literals mentioning each atom at most once.
"""

from .errors import InconsistentContextError


def atom(lit):
    return lit if lit > 0 else -lit


def instantiation(literals):
    """Return ``literals`` as a frozenset, rejecting 0 and complementary pairs."""
    lits = frozenset(literals)
    for lit in lits:
        if lit == 0:
            raise ValueError("0 is not a literal")
        if -lit in lits:
            raise InconsistentContextError("atom %d appears in both polarities" % atom(lit))
    return lits


def parse_literals(text):
    """Parse a comma/space separated list like ``"1,-2, 3"``."""
    if text is None:
        return frozenset()
    parts = text.replace(",", " ").split()
    return instantiation(int(p) for p in parts)


def format_literal(lit):
    return str(lit)


def assignment_from_index(index, vocabulary):
    """Total assignment whose i-th atom (in ``vocabulary`` order) is bit i of ``index``."""
    return tuple(a if (index >> i) & 1 else -a for i, a in enumerate(vocabulary))
