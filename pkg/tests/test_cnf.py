import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddnnf.cnf import CnfTheory, clause_to_ddnnf, condition_clause, parse_dimacs
from ddnnf.errors import InputFormatError
from ddnnf.nnf import LIT, FALSE, condition, is_decomposable, is_deterministic_oracle
from ddnnf.oracle import oracle_models


def test_parse_basic():
    cnf = parse_dimacs("p cnf 2 1\n1 -2 0")
    assert cnf.atom_count == 2
    assert cnf.clauses == [(1, -2)]


def test_parse_chain_with_comments_and_bytes():
    cnf = parse_dimacs(b"c chain\np cnf 4 3\n-1 2 0\n-2 3 0\nc mid\n-3 4 0\n")
    assert cnf.clauses == [(-1, 2), (-2, 3), (-3, 4)]


def test_parse_empty_clause():
    cnf = parse_dimacs("p cnf 1 1\n0")
    assert cnf.clauses == [()]
    assert oracle_models(cnf) == []


def test_clause_may_span_lines():
    assert parse_dimacs("p cnf 3 1\n1 2\n3 0\n").clauses == [(1, 2, 3)]


def test_duplicates_merged_and_tautologies_dropped(caplog):
    with caplog.at_level(logging.WARNING):
        cnf = parse_dimacs("p cnf 2 2\n1 1 -2 0\n1 -1 0\n")
    assert cnf.clauses == [(1, -2)]
    assert "tautological" in caplog.text


@pytest.mark.parametrize("text, line", [
    ("1 2 0\n", 1),
    ("p cnf x 1\n", 1),
    ("p dnf 1 1\n1 0\n", 1),
    ("p cnf 2 1\n1 3 0\n", 2),
    ("p cnf 2 1\n1 2\n", 2),
    ("p cnf 2 2\n1 0\n", None),
    ("c nothing\n", None),
    ("p cnf 2 1\n1 a 0\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(InputFormatError) as info:
        parse_dimacs(text)
    assert info.value.line == line


def test_to_dimacs_round_trip():
    cnf = CnfTheory(3, [(1, -2), (3,), ()])
    assert parse_dimacs(cnf.to_dimacs()) == cnf


def test_condition_clause():
    a, b = 1, 2
    assert condition_clause((a, -b), {a}) is None
    assert condition_clause((a, -b), {-a}) == (-b,)
    assert condition_clause((a, -b), {-a, b}) == ()


def test_clause_two_literals():
    dag = clause_to_ddnnf((1, 2))
    assert dag.describe() == "(1 | (-1 & 2))"
    assert len(oracle_models(dag, [1, 2])) == 3


def test_clause_edge_cases():
    assert clause_to_ddnnf((1,)).kinds == (LIT,)
    assert clause_to_ddnnf(()).kinds == (FALSE,)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=12, unique=True), st.data())
def test_shannon_chain_properties(atoms, data):
    signs = data.draw(st.lists(st.booleans(), min_size=len(atoms), max_size=len(atoms)))
    clause = tuple(a if s else -a for a, s in zip(atoms, signs))
    dag = clause_to_ddnnf(clause, 12)
    assert is_decomposable(dag)
    assert is_deterministic_oracle(dag)
    vocab = sorted(atoms)
    assert oracle_models(dag, vocab) == oracle_models(CnfTheory(12, [clause]), vocab)
    alpha = frozenset(data.draw(st.sets(st.sampled_from(clause), max_size=3)))
    alpha = frozenset(-l for l in alpha)
    residue = condition_clause(clause, alpha)
    cond_models = oracle_models(condition(dag, alpha), vocab)
    if residue is None:
        assert len(cond_models) == 2 ** len(vocab)
    else:
        assert cond_models == oracle_models(CnfTheory(12, [residue]), vocab)
