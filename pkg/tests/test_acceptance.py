"""Acceptance gate: one test per criterion, summarised per criterion at the end of the run.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import itertools
import time

import pytest

import _gen
from _gen import A, B, C, D
from ddnnf import counting
from ddnnf.bdd import FbddConverter
from ddnnf.compiler import Compiler, compile_cnf
from ddnnf.counting import build_counting_graph, count_assert, count_flip, count_retract
from ddnnf.dtree import build_dtree
from ddnnf.minimizer import min_cardinality, minimize
from ddnnf.nnf import enumerate_models, is_decomposable, is_deterministic_oracle
from ddnnf.oracle import oracle_count, oracle_min_cardinality, oracle_min_models, oracle_models
from ddnnf.reasoning import MINIMIZE_FIRST, TmsSession, diagnose, revise, unit_closure
from ddnnf.smoothing import is_smooth, linear_factor_bound, size_bound, smooth

N_CNF, N_BDD, N_CONTEXTS = 500, 200, 20
SEED = 20021


class Instance:
    __slots__ = ("source", "raw", "smooth", "vocab", "graph", "contexts")


def _instances():
    rng = _gen.rng_for(SEED)
    out = []
    for i in range(N_CNF + N_BDD):
        inst = Instance()
        if i < N_CNF:
            inst.source = _gen.random_cnf(rng)
            inst.raw = compile_cnf(inst.source)
            inst.vocab = frozenset(range(1, inst.source.atom_count + 1))
        else:
            inst.source = _gen.random_free_bdd(rng)
            inst.raw = FbddConverter(inst.source).run()
            inst.vocab = frozenset(range(1, inst.source.var_count + 1))
        inst.smooth = smooth(inst.raw, inst.vocab)
        inst.graph = build_counting_graph(inst.smooth, inst.vocab)
        inst.contexts = [_gen.random_context(rng, inst.vocab) for _ in range(N_CONTEXTS)]
        out.append(inst)
    return out


@pytest.fixture(scope="module")
def suite():
    start = time.perf_counter()
    instances = _instances()
    return instances, time.perf_counter() - start


def _literals(vocab):
    return [l for a in sorted(vocab) for l in (a, -a)]


@pytest.mark.criterion(1, "odd-parity counts and derivative answers")
def test_criterion_01_parity_regression():
    start = time.perf_counter()
    graph = build_counting_graph(_gen.parity_dag())
    assert graph.count() == 8
    assert graph.count({A, -B}) == 2
    s = graph.query({A, -B, C})
    assert s.count == 1
    assert count_assert(s, D) == 1
    assert count_assert(s, -D) == 0
    for lit in (A, -B, C):
        assert count_retract(s, lit) == 2
        assert count_flip(s, lit) == 1
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(2, "odd-parity minimization and revision")
def test_criterion_02_minimization_regression():
    dag = _gen.parity_dag()
    sigma = {A, B, C, D}
    assert min_cardinality(dag, sigma) == 1
    mini = minimize(dag, sigma)
    expected = {(-A, B, C, D), (A, -B, C, D), (A, B, -C, D), (A, B, C, -D)}
    assert set(enumerate_models(mini)) == expected

    session = TmsSession(build_counting_graph(mini), {-A})
    assert {l for l in (B, C, D) if session.entails(l)} == {B, C, D}
    assert session.count_retract(-A) == 4
    assert session.count_flip(-A) == 3

    report = revise(dag, sigma, {-A}, mode=MINIMIZE_FIRST)
    assert {B, C, D} <= report.entailed
    assert report.session.count_retract(-A) == 4
    assert report.session.count_flip(-A) == 3


@pytest.mark.criterion(3, "FBDD conversion equivalence and one miss per node")
def test_criterion_03_fbdd_conversion():
    bdd = _gen.free_bdd()
    conv = FbddConverter(bdd)
    dag = conv.run()
    target = [m for m in itertools.product(*[(-a, a) for a in (1, 2, 3)])
              if (m[1] > 0 and m[2] > 0) or (m[0] > 0 and m[1] < 0 and m[2] < 0)]
    assert sorted(oracle_models(dag, [1, 2, 3])) == sorted(target)
    assert len(target) == 3
    assert is_decomposable(dag) and is_deterministic_oracle(dag)
    assert conv.misses == len(bdd.nodes) == bdd.size == 8


@pytest.mark.criterion(4, "500 CNFs + 200 FBDDs: certificates and counts vs oracle, < 60 s")
def test_criterion_04_oracle_equivalence(suite):
    start = time.perf_counter()
    instances, build_time = suite
    mismatches = 0
    for inst in instances:
        assert is_decomposable(inst.raw)
        assert is_deterministic_oracle(inst.raw)
        for ctx in inst.contexts:
            if inst.graph.count(ctx) != oracle_count(inst.source, inst.vocab, ctx):
                mismatches += 1
    elapsed = build_time + time.perf_counter() - start
    print("criterion 4: %d instances, %.2f s, kernel %s" % (len(instances), elapsed, counting.KERNEL))
    assert mismatches == 0
    assert elapsed < 60.0


@pytest.mark.criterion(5, "assert/retract/flip equal re-evaluation on every literal")
def test_criterion_05_derivative_identities(suite):
    instances, _ = suite
    mismatches = 0
    for inst in instances:
        g = inst.graph
        lits = _literals(inst.vocab)
        for ctx in inst.contexts:
            state = g.query(ctx)
            for lit in lits:
                if lit in ctx:
                    rest = ctx - {lit}
                    mismatches += count_retract(state, lit) != g.count(rest)
                    mismatches += count_flip(state, lit) != g.count(rest | {-lit})
                elif -lit not in ctx:
                    mismatches += count_assert(state, lit) != g.count(ctx | {lit})
    assert mismatches == 0


@pytest.mark.criterion(6, "smoothing keeps counts, certificates and the size bound")
def test_criterion_06_smoothing(suite):
    instances, _ = suite
    for inst in instances:
        out = inst.smooth
        assert is_smooth(out, inst.vocab)
        assert oracle_count(out, inst.vocab) == oracle_count(inst.raw, inst.vocab)
        assert is_decomposable(out)
        assert is_deterministic_oracle(out)
        assert out.size <= size_bound(inst.raw, inst.vocab) <= linear_factor_bound(inst.raw, inst.vocab)


@pytest.mark.criterion(7, "minimizer matches the oracle argmin")
def test_criterion_07_minimizer(suite):
    instances, _ = suite
    rng = _gen.rng_for(SEED + 7)
    for inst in instances:
        vocab = sorted(inst.vocab)
        sigma = frozenset(rng.sample(vocab, rng.randint(0, len(vocab))))
        assert min_cardinality(inst.smooth, sigma, inst.vocab) == \
            oracle_min_cardinality(inst.source, sigma, inst.vocab)
        mini = minimize(inst.smooth, sigma, inst.vocab)
        assert sorted(oracle_models(mini, inst.vocab)) == \
            sorted(oracle_min_models(inst.source, sigma, inst.vocab))


def _slopes(ks, ys):
    return [(y2 - y1) / (k2 - k1) for (k1, y1), (k2, y2) in zip(zip(ks, ys), zip(ks[1:], ys[1:]))]


@pytest.mark.criterion(8, "implication chains compile in linear size and work")
def test_criterion_08_complexity_smoke():
    ks = [10, 20, 40, 80]
    edges, misses = [], []
    for k in ks:
        cnf = _gen.chain_cnf(k)
        comp = Compiler(cnf, build_dtree(cnf, "min-fill"))
        dag = comp.run()
        edges.append(dag.size)
        misses.append(comp.misses)
        sm = smooth(dag)
        state = build_counting_graph(sm).evaluate()
        assert state.count == k + 1
        assert state.node_visits == sm.node_count
    for series in (edges, misses):
        slopes = _slopes(ks, series)
        assert min(slopes) > 0
        assert max(slopes) <= 2 * min(slopes), series


@pytest.mark.criterion(9, "complete entailment where unit resolution stops")
def test_criterion_09_tms_completeness():
    from ddnnf.cnf import CnfTheory

    theory = CnfTheory(2, [(A, B), (A, -B)])
    derived, conflict = unit_closure(theory, ())
    assert A not in derived and not conflict
    session = TmsSession(build_counting_graph(smooth(compile_cnf(theory))))
    assert session.entails(A)
    assert not session.entails(B) and not session.entails(-B)


@pytest.mark.criterion(10, "two-gate diagnosis matches the oracle")
def test_criterion_10_diagnosis():
    cnf = _gen.device_cnf()
    health = {_gen.OK1, _gen.OK2}
    obs = {_gen.IN_, -_gen.OUT}
    device = smooth(compile_cnf(cnf))
    report = diagnose(device, health, obs)

    best = oracle_min_models(cnf, health, context=obs)
    assert report.min_cardinality == oracle_min_cardinality(cnf, health, context=obs) == 1
    oracle_diagnoses = {frozenset(l for l in m if abs(l) in health) for m in best}
    assert set(report.diagnoses) == oracle_diagnoses
    assert len(report.diagnoses) == 2
    assert report.predicted == frozenset.intersection(*(frozenset(m) for m in best))
    assert _gen.P in report.predicted
    assert not report.predicted & {_gen.OK1, -_gen.OK1, _gen.OK2, -_gen.OK2, _gen.M, -_gen.M}


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
