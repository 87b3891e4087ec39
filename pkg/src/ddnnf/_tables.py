"""Bit-parallel truth tables.

A truth table over ``n`` ordered atoms is a Python int with ``2**n`` bits; bit
``i`` is the value under the assignment that sets atom ``j`` true iff bit ``j``
of ``i`` is set (see ``literals.assignment_from_index``).
"""


def full_mask(n):
    return (1 << (1 << n)) - 1


def atom_table(position, n):
    """Table of the positive literal of the atom at ``position``."""
    half = 1 << position
    period = half << 1
    unit = ((1 << half) - 1) << half
    return unit * (full_mask(n) // ((1 << period) - 1))


class TableSpace:
    """Literal tables over a fixed ordered vocabulary."""

    def __init__(self, vocabulary):
        self.vocabulary = tuple(vocabulary)
        self.n = len(self.vocabulary)
        self.full = full_mask(self.n)
        self.position = {a: i for i, a in enumerate(self.vocabulary)}
        self._pos = [atom_table(i, self.n) for i in range(self.n)]

    def literal(self, lit):
        t = self._pos[self.position[abs(lit)]]
        return t if lit > 0 else self.full ^ t

    def conjunction(self, literals):
        t = self.full
        for lit in literals:
            t &= self.literal(lit)
        return t

    def models(self, table):
        """Yield the set bits of ``table`` as sorted literal tuples."""
        vocab = self.vocabulary
        while table:
            low = table & -table
            i = low.bit_length() - 1
            yield tuple(a if (i >> k) & 1 else -a for k, a in enumerate(vocab))
            table ^= low
