import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _gen
from _gen import A, B, C
from ddnnf.compiler import compile_cnf
from ddnnf.nnf import NnfBuilder, is_decomposable, is_deterministic_oracle
from ddnnf.oracle import oracle_models
from ddnnf.smoothing import is_smooth, linear_factor_bound, size_bound, smooth


def test_parity_already_smooth():
    dag = _gen.parity_dag()
    assert is_smooth(dag)
    out = smooth(dag, {1, 2, 3, 4})
    assert (out.kinds, out.lits, out.children) == (dag.kinds, dag.lits, dag.children)


def test_unsmooth_examples():
    b = NnfBuilder()
    L = b.literal
    missing_b = b.build(b.disjoin([b.conjoin([L(A), L(B)]), L(-A)]), 2)
    assert not is_smooth(missing_b)
    b = NnfBuilder()
    positive = b.build(b.conjoin([b.literal(A), b.literal(B)]), 2)
    assert not is_smooth(positive)


def test_pad_or_disjuncts():
    b = NnfBuilder()
    L = b.literal
    dag = b.build(b.disjoin([b.conjoin([L(A), L(B)]), b.conjoin([L(-A), L(C)])]), 3)
    out = smooth(dag, {A, B, C})
    assert is_smooth(out, {A, B, C})
    assert out.describe() == "(((1 & 2) & (3 | -3)) | ((-1 & 3) & (2 | -2)))"
    assert len(oracle_models(out, [A, B, C])) == len(oracle_models(dag, [A, B, C])) == 4


def test_lone_literal_gadget():
    b = NnfBuilder()
    out = smooth(b.build(b.literal(A), 1), {A})
    assert out.describe() == "(1 | (-1 & F))"
    assert oracle_models(out, [A]) == [(A,)]


def test_absent_vocabulary_atom_doubles_count():
    dag = compile_cnf(_gen.chain_cnf())
    out = smooth(dag, range(1, 6))
    assert is_smooth(out, range(1, 6))
    assert len(oracle_models(out, range(1, 6))) == 10


def test_vocabulary_must_cover_dag():
    with pytest.raises(ValueError):
        smooth(_gen.parity_dag(), {1, 2})


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2))
def test_smoothing_properties(seed, extra):
    rng = _gen.rng_for(seed)
    cnf = _gen.random_cnf(rng, max_atoms=10)
    dag = compile_cnf(cnf)
    vocab = range(1, cnf.atom_count + extra + 1)
    out = smooth(dag, vocab)
    assert is_smooth(out, vocab)
    assert oracle_models(out, vocab) == oracle_models(dag, vocab)
    assert is_decomposable(out) and is_deterministic_oracle(out)
    assert out.smooth and out.decomposable and out.deterministic
    assert out.size <= size_bound(dag, vocab) <= linear_factor_bound(dag, vocab)


def test_unreachable_leaves_do_not_count():
    from ddnnf.nnf import read_nnf

    # node 1 (-1) is dangling; the root is just literal 1
    dag = read_nnf("nnf 3 1 1\nL 1\nL -1\nO 1 0\n")
    assert not is_smooth(dag)
    out = smooth(dag)
    assert is_smooth(out) and oracle_models(out) == [(1,)]
