from hypothesis import given, settings
from hypothesis import strategies as st

import _gen
from ddnnf.cnf import CnfTheory, clause_to_ddnnf
from ddnnf.compiler import Compiler, compile_cnf, project
from ddnnf.counting import build_counting_graph
from ddnnf.dtree import build_dtree, compute_width
from ddnnf.nnf import AND, OR, is_decomposable, is_deterministic_oracle
from ddnnf.oracle import oracle_count, oracle_models
from ddnnf.smoothing import smooth


def test_project():
    assert project({1, -2, 3}, {1, 2}) == {1, -2}
    assert project({1}, set()) == frozenset()
    assert project(set(), {1, 2}) == frozenset()


def test_chain_has_five_models(chain):
    dag = compile_cnf(chain)
    assert oracle_count(dag, chain.vocabulary) == oracle_count(chain) == 5
    assert dag.decomposable and dag.deterministic


def test_single_clause():
    cnf = CnfTheory(2, [(1, 2)])
    dag = compile_cnf(cnf)
    assert oracle_count(dag) == 3
    ref = clause_to_ddnnf((1, 2), 2)
    assert (dag.kinds, dag.lits, dag.children) == (ref.kinds, ref.lits, ref.children)


def test_contradiction_and_empty_theory():
    assert oracle_count(compile_cnf(CnfTheory(1, [(1,), (-1,)]))) == 0
    assert oracle_count(compile_cnf(CnfTheory(3, []))) == 8


def test_case_split_order_negative_first(chain):
    comp = Compiler(chain, build_dtree(chain, "balanced"))
    dag = comp.run()
    root = dag.children[dag.root]
    assert dag.kinds[dag.root] == OR
    first_betas = [[dag.lits[c] for c in dag.children[d] if dag.kinds[c] != AND and dag.lits[c]]
                   for d in root]
    assert first_betas[0][-1] < 0 < first_betas[1][-1]


def test_random_3cnf_count_matches_oracle():
    rng = _gen.rng_for(8)
    clauses = [tuple(a if rng.random() < .5 else -a for a in rng.sample(range(1, 9), 3))
               for _ in range(12)]
    cnf = CnfTheory(8, clauses)
    dag = compile_cnf(cnf)
    assert build_counting_graph(smooth(dag, cnf.vocabulary)).count() == oracle_count(cnf)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["balanced", "min-fill"]))
def test_compiler_properties(seed, strategy):
    rng = _gen.rng_for(seed)
    cnf = _gen.random_cnf(rng)
    dt = build_dtree(cnf, strategy)
    comp = Compiler(cnf, dt)
    dag = comp.run()
    vocab = cnf.vocabulary
    assert oracle_models(dag, vocab) == oracle_models(cnf)
    assert is_decomposable(dag)
    assert is_deterministic_oracle(dag)
    assert comp.calls <= dt.node_count * 2 ** compute_width(dt)
    assert comp.cache_entries == comp.misses
    uncached = compile_cnf(cnf, dt, cache=False)
    assert oracle_models(uncached, vocab) == oracle_models(dag, vocab)


def test_deep_dtree_does_not_hit_the_recursion_limit():
    k = 3000
    dag = compile_cnf(_gen.chain_cnf(k))
    assert build_counting_graph(smooth(dag)).count() == k + 1
