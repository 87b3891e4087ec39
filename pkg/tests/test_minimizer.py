import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _gen
from _gen import A, B, C, D
from ddnnf.compiler import compile_cnf
from ddnnf.errors import NotSmoothError
from ddnnf.minimizer import INF, assign_cardinalities, min_cardinality, minimize
from ddnnf.nnf import OR, NnfBuilder, enumerate_models, is_decomposable, is_deterministic_oracle
from ddnnf.oracle import oracle_min_cardinality, oracle_min_models, oracle_models
from ddnnf.smoothing import is_smooth, smooth


def smooth_literal(lit):
    b = NnfBuilder()
    return smooth(b.build(b.literal(lit), abs(lit)))


def test_parity_cardinality(parity):
    assert assign_cardinalities(parity, {A, B, C, D}).root == 1
    assert min_cardinality(parity, {A, B, C, D}) == 1


def test_parity_minimized_models(parity):
    mini = minimize(parity, {A, B, C, D})
    assert set(enumerate_models(mini)) == {(-A, B, C, D), (A, -B, C, D), (A, B, -C, D), (A, B, C, -D)}
    assert is_smooth(mini) and is_decomposable(mini) and is_deterministic_oracle(mini)


def test_small_cases():
    assert min_cardinality(smooth_literal(-A), {A}) == 1
    assert min_cardinality(smooth_literal(A), {A}) == 0
    b = NnfBuilder()
    taut = b.build(b.disjoin([b.literal(A), b.literal(-A)]), 1)
    assert min_cardinality(taut, {A}) == 0
    b = NnfBuilder()
    dead = b.build(b.conjoin([b.false(), b.disjoin([b.literal(A), b.literal(-A)])],
                             simplify=False), 1)
    assert min_cardinality(dead, {A}) == INF == math.inf


def test_uniform_cardinality_keeps_models(parity):
    # over Sigma = {A} half the models have A false; restrict to one polarity first
    sigma = set()
    assert oracle_models(minimize(parity, sigma)) == oracle_models(parity)


def test_unary_or_kept_unless_collapsed(parity):
    kept = minimize(parity, {A, B, C, D})
    collapsed = minimize(parity, {A, B, C, D}, collapse=True)
    unary = [n for n in range(kept.node_count) if kept.kinds[n] == OR and len(kept.children[n]) == 1]
    assert unary
    assert collapsed.size < kept.size
    assert oracle_models(collapsed, [A, B, C, D]) == oracle_models(kept, [A, B, C, D])


def test_rejects_unsmooth_and_foreign_sigma(parity):
    with pytest.raises(NotSmoothError):
        minimize(compile_cnf(_gen.chain_cnf()), {1})
    with pytest.raises(ValueError):
        minimize(parity, {9})


def test_lost_complement_gets_gadget():
    # (A & B) | (-A & -B) with Sigma={A,B}: only A&B survives, so -A and -B vanish
    b = NnfBuilder()
    L = b.literal
    dag = b.build(b.disjoin([b.conjoin([L(A), L(B)]), b.conjoin([L(-A), L(-B)])]), 2)
    mini = minimize(dag, {A, B})
    assert is_smooth(mini)
    assert oracle_models(mini, [A, B]) == [(A, B)]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_minimizer_matches_oracle(seed):
    rng = _gen.rng_for(seed)
    cnf = _gen.random_cnf(rng, max_atoms=10)
    vocab = cnf.vocabulary
    dag = smooth(compile_cnf(cnf), vocab)
    sigma = frozenset(rng.sample(sorted(vocab), rng.randint(0, len(vocab))))
    assert min_cardinality(dag, sigma, vocab) == oracle_min_cardinality(cnf, sigma)
    mini = minimize(dag, sigma, vocab)
    best = oracle_min_models(cnf, sigma)
    assert oracle_models(mini, vocab) == best
    assert is_smooth(mini, vocab) and is_decomposable(mini) and is_deterministic_oracle(mini)
    again = minimize(mini, sigma, vocab)
    assert oracle_models(again, vocab) == best
