"""Knowledge compilation into smooth deterministic DNNF, with model counting
under assertion, retraction and flipping of literals.
"""

from .bdd import Bdd, BddClass, classify, fbdd2ddnnf, parse_bdd
from .cnf import CnfTheory, clause_to_ddnnf, parse_dimacs
from .compiler import compile_cnf
from .counting import KERNEL, CountingGraph, build_counting_graph, count_assert, count_flip, count_retract
from .dtree import build_dtree, compute_width
from .minimizer import min_cardinality, minimize
from .nnf import (NnfBuilder, NnfDag, condition, conjoin_instantiation, enumerate_models,
                  is_decomposable, is_deterministic_oracle, read_nnf, write_nnf)
from .reasoning import TmsSession, diagnose, revise, tag_clauses
from .smoothing import is_smooth, smooth

__version__ = "0.1.0"

__all__ = [
    "Bdd",
    "BddClass",
    "classify",
    "fbdd2ddnnf",
    "parse_bdd",
    "CnfTheory",
    "clause_to_ddnnf",
    "parse_dimacs",
    "compile_cnf",
    "KERNEL",
    "CountingGraph",
    "build_counting_graph",
    "count_assert",
    "count_flip",
    "count_retract",
    "build_dtree",
    "compute_width",
    "min_cardinality",
    "minimize",
    "NnfBuilder",
    "NnfDag",
    "condition",
    "conjoin_instantiation",
    "enumerate_models",
    "is_decomposable",
    "is_deterministic_oracle",
    "read_nnf",
    "write_nnf",
    "TmsSession",
    "diagnose",
    "revise",
    "tag_clauses",
    "is_smooth",
    "smooth",
]
