"""Heuristic and exact search for magic and antimagic graph labellings."""

from .annealer import AnnealOutcome, AnnealParams, anneal, multi_start, propose_swap
from .graph import Cls, Graph, GraphError, build_graph
from .labelling import (EDGE_ONLY, TOTAL, VERTEX_ONLY, DomainSelector, Kind, Labelling, TargetKind,
                        VerifyReport, random_labelling, verify, weight, weights_of)
from .objectives import Family, Objective, eval_after_swap, eval_f, eval_g, eval_h, evaluate

__all__ = [
    "AnnealOutcome", "AnnealParams", "anneal", "multi_start", "propose_swap",
    "Cls", "Graph", "GraphError", "build_graph",
    "EDGE_ONLY", "TOTAL", "VERTEX_ONLY", "DomainSelector", "Kind", "Labelling", "TargetKind",
    "VerifyReport", "random_labelling", "verify", "weight", "weights_of",
    "Family", "Objective", "eval_after_swap", "eval_f", "eval_g", "eval_h", "evaluate",
]
