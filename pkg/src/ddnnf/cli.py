"""Command-line interface.

Exit codes: 0 success (UNSAT included), 1 usage error, 2 input-format or
precondition error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .bdd import classify, fbdd2ddnnf, parse_bdd
from .cnf import parse_dimacs
from .compiler import Compiler, compile_cnf
from .counting import KERNEL, build_counting_graph
from .dtree import STRATEGIES, build_dtree, compute_width, read_dtree, write_dtree
from .errors import DdnnfError, InconsistentContextError, InputFormatError, NotSmoothError
from .literals import format_literal, instantiation, parse_literals
from .minimizer import min_cardinality, minimize
from .nnf import is_decomposable, is_deterministic_oracle, read_nnf, write_nnf
from .reasoning import TmsSession, diagnose
from .smoothing import is_smooth, smooth

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3

log = logging.getLogger("ddnnf")


class InvariantViolation(DdnnfError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputFormatError("cannot read %s: %s" % (path, exc.strerror)) from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def _lits(text):
    if not text:
        return frozenset()
    try:
        return instantiation(parse_literals(text))
    except ValueError as exc:
        raise InconsistentContextError(str(exc)) from None


def _yes(flag):
    return "yes" if flag else "no"


def _oracle():
    from . import oracle
    return oracle


def cmd_compile(args):
    cnf = parse_dimacs(_read(args.cnf))
    if args.dtree_file:
        dt = read_dtree(_read(args.dtree_file), cnf.clauses)
    elif cnf.clauses:
        dt = build_dtree(cnf, args.dtree)
    else:
        dt = None
    if dt is None:
        dag, calls, misses, width = compile_cnf(cnf), 0, 0, 0
    else:
        comp = Compiler(cnf, dt)
        dag = comp.run()
        calls, misses, width = comp.calls, comp.misses, compute_width(dt)
    if not is_decomposable(dag):
        raise InvariantViolation("compiler output is not decomposable")
    smoothed = smooth(dag)
    if args.smooth_vocab:
        dag = smoothed
    count = build_counting_graph(smoothed).count()
    if args.out:
        _write(args.out, write_nnf(dag))
    if args.dtree_out and dt is not None:
        _write(args.dtree_out, write_dtree(dt))
    print("SIZE %d" % dag.size)
    print("NODES %d" % dag.node_count)
    print("WIDTH %d" % width)
    print("CALLS %d" % calls)
    print("MISSES %d" % misses)
    print("COUNT %d" % count)
    if count == 0:
        print("UNSAT")
    if args.oracle:
        expected = _oracle().oracle_count(cnf)
        print("ORACLE COUNT %d" % expected)
        if expected != count:
            raise InvariantViolation("count %d disagrees with oracle %d" % (count, expected))
    return EXIT_OK


def cmd_convert(args):
    bdd = parse_bdd(_read(args.bdd))
    dag = fbdd2ddnnf(bdd)
    if args.out:
        _write(args.out, write_nnf(dag))
    print("BDD SIZE %d" % bdd.size)
    print("CLASS %s" % classify(bdd).name.lower())
    print("SIZE %d" % dag.size)
    print("NODES %d" % dag.node_count)
    count = build_counting_graph(smooth(dag)).count()
    print("COUNT %d" % count)
    if args.oracle:
        expected = _oracle().oracle_count(bdd)
        print("ORACLE COUNT %d" % expected)
        if expected != count:
            raise InvariantViolation("count %d disagrees with oracle %d" % (count, expected))
    return EXIT_OK


def cmd_check(args):
    dag = read_nnf(_read(args.nnf))
    dec = is_decomposable(dag)
    det = is_deterministic_oracle(dag, max_atoms=_oracle().max_atoms()) if dec else False
    print("decomposable: %s, deterministic(oracle): %s, smooth: %s"
          % (_yes(dec), _yes(det), _yes(is_smooth(dag))))
    return EXIT_OK


def cmd_smooth(args):
    dag = read_nnf(_read(args.nnf))
    out = smooth(dag)
    _write(args.out, write_nnf(out))
    if args.out not in (None, "-"):
        print("SIZE %d -> %d" % (dag.size, out.size))
    return EXIT_OK


def _load_smooth(path):
    dag = read_nnf(_read(path))
    if not is_smooth(dag):
        raise NotSmoothError("%s is not smooth; run the smooth subcommand first" % path)
    return dag


def cmd_count(args):
    graph = build_counting_graph(_load_smooth(args.nnf))
    print("COUNT %d" % graph.count(_lits(args.context)))
    return EXIT_OK


def _report(session, oracle_dag=None):
    print("COUNT %d" % session.count)
    ctx = session.context
    for a in sorted(session.vocabulary):
        for lit in (a, -a):
            if lit not in ctx and -lit not in ctx:
                print("ASSERT %s %d" % (format_literal(lit), session.count_assert(lit)))
    for lit in sorted(ctx, key=lambda l: (abs(l), l)):
        print("RETRACT %s %d" % (format_literal(lit), session.count_retract(lit)))
        print("FLIP %s %d" % (format_literal(lit), session.count_flip(lit)))
    for a in sorted(session.vocabulary):
        for lit in (a, -a):
            print("ENTAILS %s %s" % (format_literal(lit), "true" if session.entails(lit) else "false"))
    if oracle_dag is not None:
        _oracle_report(session, oracle_dag)


def _oracle_report(session, dag):
    oracle = _oracle()
    ctx = session.context
    mismatches = 0

    def line(label, got, expected):
        nonlocal mismatches
        mismatches += got != expected
        print("ORACLE %s %s" % (label, expected))

    line("COUNT", session.count, oracle.oracle_count(dag, context=ctx))
    for a in sorted(session.vocabulary):
        for lit in (a, -a):
            if lit not in ctx and -lit not in ctx:
                line("ASSERT %d" % lit, session.count_assert(lit), oracle.oracle_count(dag, context=ctx | {lit}))
    for lit in sorted(ctx, key=lambda l: (abs(l), l)):
        rest = ctx - {lit}
        line("RETRACT %d" % lit, session.count_retract(lit), oracle.oracle_count(dag, context=rest))
        line("FLIP %d" % lit, session.count_flip(lit), oracle.oracle_count(dag, context=rest | {-lit}))
    if mismatches:
        raise InvariantViolation("%d values disagree with the oracle" % mismatches)


def _session_line(session, line):
    toks = line.split()
    if not toks or toks[0].startswith("#"):
        return None
    cmd, rest = toks[0].lower(), toks[1:]
    if cmd == "count" and not rest:
        return "COUNT %d" % session.count
    if cmd == "context" and not rest:
        return "CONTEXT %s" % " ".join(format_literal(l) for l in sorted(session.context, key=abs))
    if len(rest) != 1:
        return "ERROR expected one literal"
    try:
        lit = int(rest[0])
        if lit == 0:
            raise ValueError
    except ValueError:
        return "ERROR bad literal %r" % rest[0]
    try:
        if cmd == "assert":
            return "ASSERT %s %d" % (format_literal(lit), session.count_assert(lit))
        if cmd == "retract":
            return "RETRACT %s %d" % (format_literal(lit), session.count_retract(lit))
        if cmd == "flip":
            return "FLIP %s %d" % (format_literal(lit), session.count_flip(lit))
        if cmd == "entails":
            return "ENTAILS %s %s" % (format_literal(lit), "true" if session.entails(lit) else "false")
        if cmd == "add":
            session.add(lit)
            return "COUNT %d" % session.count
        if cmd == "remove":
            session.remove(lit)
            return "COUNT %d" % session.count
    except ValueError as exc:
        return "ERROR %s" % exc
    return "ERROR unknown command %r" % cmd


def cmd_query(args):
    dag = _load_smooth(args.nnf)
    session = TmsSession(build_counting_graph(dag), _lits(args.context))
    if not args.interactive:
        _report(session, dag if args.oracle else None)
        return EXIT_OK
    for line in sys.stdin:
        out = _session_line(session, line)
        if out is not None:
            print(out, flush=True)
    return EXIT_OK


def cmd_minimize(args):
    dag = _load_smooth(args.nnf)
    sigma = frozenset(abs(l) for l in parse_literals(args.sigma)) if args.sigma else dag.vocabulary
    card = min_cardinality(dag, sigma)
    mini = minimize(dag, sigma, collapse=args.collapse)
    if args.out:
        _write(args.out, write_nnf(mini))
    print("MINCARD %s" % ("inf" if card == float("inf") else "%d" % card))
    count = build_counting_graph(mini).count()
    print("COUNT %d" % count)
    if args.oracle:
        oracle = _oracle()
        expected = oracle.oracle_min_cardinality(dag, sigma)
        n_min = len(oracle.oracle_min_models(dag, sigma))
        print("ORACLE MINCARD %s" % ("inf" if expected == float("inf") else "%d" % expected))
        print("ORACLE COUNT %d" % n_min)
        if (expected, n_min) != (card, count):
            raise InvariantViolation("minimization disagrees with the oracle")
    return EXIT_OK


def cmd_diagnose(args):
    dag = read_nnf(_read(args.nnf))
    health = frozenset(abs(l) for l in parse_literals(args.health))
    if not is_smooth(dag):
        dag = smooth(dag)
    report = diagnose(dag, health, _lits(args.observation), cap=args.cap)
    if not report.consistent:
        print("INCONSISTENT")
        return EXIT_OK
    print("MINCARD %d" % report.min_cardinality)
    print("MODELS %d" % report.model_count)
    for d in report.diagnoses:
        faults = sorted((-l for l in d if l < 0))
        print("DIAGNOSIS %s" % (" ".join("-%d" % a for a in faults) or "none"))
    if report.truncated:
        print("TRUNCATED")
    print("PREDICTED %s" % " ".join(format_literal(l) for l in sorted(report.predicted, key=lambda l: (abs(l), l))))
    return EXIT_OK


def cmd_stats(args):
    text = _read(args.path)
    head = next((ln.split() for ln in text.splitlines() if ln.split() and ln.split()[0] != "c"), [])
    if head[:2] == ["p", "cnf"]:
        cnf = parse_dimacs(text)
        print("ATOMS %d" % cnf.atom_count)
        print("CLAUSES %d" % len(cnf.clauses))
        if cnf.clauses:
            for strategy in STRATEGIES:
                print("WIDTH %s %d" % (strategy, compute_width(build_dtree(cnf, strategy))))
    elif head[:1] == ["nnf"]:
        dag = read_nnf(text)
        print("NODES %d" % dag.node_count)
        print("SIZE %d" % dag.size)
        print("ATOMS %d" % dag.atom_count)
        print("SMOOTH %s" % _yes(is_smooth(dag)))
    elif head[:1] == ["bdd"]:
        bdd = parse_bdd(text)
        print("NODES %d" % bdd.size)
        print("VARS %d" % bdd.var_count)
        print("CLASS %s" % classify(bdd).name.lower())
    else:
        raise InputFormatError("unrecognised file header in %s" % args.path)
    print("KERNEL %s" % KERNEL)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="ddnnf", description="Compile to smooth d-DNNF and query model counts.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compile", help="compile a DIMACS CNF")
    c.add_argument("cnf")
    c.add_argument("--dtree", choices=STRATEGIES, default="min-fill")
    c.add_argument("--dtree-file", help="read the dtree instead of building one")
    c.add_argument("--dtree-out")
    c.add_argument("--out")
    c.add_argument("--smooth-vocab", action="store_true", help="write the smoothed dag")
    c.add_argument("--oracle", action="store_true")
    c.set_defaults(func=cmd_compile)

    c = sub.add_parser("convert", help="convert a free BDD")
    c.add_argument("bdd")
    c.add_argument("--out")
    c.add_argument("--oracle", action="store_true")
    c.set_defaults(func=cmd_convert)

    c = sub.add_parser("check", help="report structural properties of an NNF file")
    c.add_argument("nnf")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("smooth")
    c.add_argument("nnf")
    c.add_argument("--out")
    c.set_defaults(func=cmd_smooth)

    c = sub.add_parser("count")
    c.add_argument("nnf")
    c.add_argument("--context", default="")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("query", help="counts and entailments under a context")
    c.add_argument("nnf")
    c.add_argument("--context", default="", help="e.g. --context=1,-2,3")
    c.add_argument("--interactive", action="store_true", help="read session commands from stdin")
    c.add_argument("--oracle", action="store_true")
    c.set_defaults(func=cmd_query)

    c = sub.add_parser("minimize")
    c.add_argument("nnf")
    c.add_argument("--sigma", default="", help="default atoms; all atoms when omitted")
    c.add_argument("--out")
    c.add_argument("--collapse", action="store_true", help="collapse unary Or nodes")
    c.add_argument("--oracle", action="store_true")
    c.set_defaults(func=cmd_minimize)

    c = sub.add_parser("diagnose")
    c.add_argument("nnf")
    c.add_argument("--health", required=True)
    c.add_argument("--observation", default="", help="e.g. --observation=1,-2")
    c.add_argument("--cap", type=int, default=1024)
    c.set_defaults(func=cmd_diagnose)

    c = sub.add_parser("stats")
    c.add_argument("path")
    c.set_defaults(func=cmd_stats)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVARIANT
    except (DdnnfError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
