import pytest

from ddnnf.errors import InconsistentContextError, InputFormatError
from ddnnf.literals import assignment_from_index, atom, instantiation, parse_literals


def test_literal_helpers():
    assert atom(-3) == atom(3) == 3
    assert parse_literals("1,-2 3") == {1, -2, 3}
    assert parse_literals(None) == frozenset()
    assert assignment_from_index(0b101, [1, 2, 3]) == (1, -2, 3)


def test_instantiation_validation():
    with pytest.raises(InconsistentContextError):
        instantiation([1, -1])
    with pytest.raises(ValueError):
        instantiation([0])


def test_error_message_carries_line():
    assert str(InputFormatError("bad", 4)) == "line 4: bad"
    assert InputFormatError("bad").line is None
