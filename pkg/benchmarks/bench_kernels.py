"""Compare the compiled and pure-Python counting kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--scale S]

Each workload is a smooth d-DNNF; one query is a full evaluate + differentiate
under a random context. The "wide" workload has counts beyond 64 bits, so the
compiled kernel takes its exact-integer fallback there.
"""

import argparse
import random
import statistics
import sys
import time

from ddnnf import _pykernels
from ddnnf.bdd import Bdd, BddNode, fbdd2ddnnf
from ddnnf.cnf import CnfTheory
from ddnnf.compiler import compile_cnf
from ddnnf.counting import CountingGraph
from ddnnf.nnf import NnfBuilder
from ddnnf.smoothing import smooth

try:
    from ddnnf import _ckernels
except ImportError:
    _ckernels = None


def chain(k):
    cnf = CnfTheory(k, [(-i, i + 1) for i in range(1, k)])
    return smooth(compile_cnf(cnf))


def layered_bdd(n_vars, width, seed=0):
    """An OBDD-like layered diagram: ``width`` nodes per variable, random wiring."""
    rng = random.Random(seed)
    nodes = [BddNode(0, -1, -1, 0), BddNode(0, -1, -1, 1)]
    below = [0, 1]
    for var in range(n_vars, 0, -1):
        layer = []
        for _ in range(width if var > 1 else 1):
            lo, hi = rng.sample(below, 2) if len(below) > 1 else (0, 1)
            nodes.append(BddNode(var, lo, hi, -1))
            layer.append(len(nodes) - 1)
        below = layer
    return smooth(fbdd2ddnnf(Bdd(nodes, len(nodes) - 1, n_vars)))


def wide(n):
    b = NnfBuilder()
    pads = [b.disjoin([b.literal(a), b.literal(-a)]) for a in range(1, n + 1)]
    return b.build(b.conjoin(pads), n, decomposable=True, deterministic=True, smooth=True)


def time_kernel(dag, kernel, contexts):
    graph = CountingGraph(dag, kernel=kernel)
    times = []
    results = []
    for ctx in contexts:
        t0 = time.perf_counter()
        state = graph.query(ctx)
        times.append(time.perf_counter() - t0)
        results.append((state.count, state.pd))
    return statistics.median(times), results


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20, help="queries per workload")
    ap.add_argument("--scale", type=int, default=1, help="multiply workload sizes")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernel not built; only the Python kernel is available", file=sys.stderr)

    s = args.scale
    workloads = [
        ("chain-%d" % (2000 * s), chain(2000 * s)),
        ("layered-bdd-%dx%d" % (60, 200 * s), layered_bdd(60, 200 * s)),
        ("wide-%d" % (300 * s), wide(300 * s)),
    ]
    rng = random.Random(1)
    kernels = [_pykernels] + ([_ckernels] if _ckernels else [])
    print("%-24s %8s %8s %12s %12s %8s" % ("workload", "nodes", "edges", "python ms",
                                           "cython ms", "speedup"))
    for name, dag in workloads:
        vocab = sorted(dag.vocabulary)
        contexts = [frozenset(a if rng.random() < 0.5 else -a
                              for a in rng.sample(vocab, rng.randint(0, min(8, len(vocab)))))
                    for _ in range(args.repeat)]
        timings = []
        reference = None
        for kernel in kernels:
            t, results = time_kernel(dag, kernel, contexts)
            if reference is None:
                reference = results
            elif results != reference:
                raise SystemExit("kernels disagree on %s" % name)
            timings.append(t)
        py = timings[0] * 1e3
        cy = timings[1] * 1e3 if len(timings) > 1 else float("nan")
        print("%-24s %8d %8d %12.2f %12.2f %7.1fx" % (name, dag.node_count, dag.size, py, cy, py / cy))


if __name__ == "__main__":
    main()
