"""Exact propagation times, capture times and throttling numbers for small graphs."""

from .config import RunConfig
from .errors import (
    BadArity,
    BadMatching,
    BadParams,
    BadTrace,
    BudgetExceeded,
    EmptySet,
    GraphError,
    ParseError,
    Undefined,
    UnknownCheck,
    UnsupportedOrder,
)
from .graph import INF, Graph, encode_graph6, parse_graph6
from .propagation import PropagationTrace, Rule, propagate, propagation_time
from .pursuit import GameTable, capt_k, capture_time_from, cop_number, solve_game
from .throttling import ParamKind, ThrottlingReport, Variant, k_for_pt, pt_param, throttle, throttle_curve

__all__ = [
    "BadArity", "BadMatching", "BadParams", "BadTrace", "BudgetExceeded", "EmptySet", "GameTable", "Graph",
    "GraphError", "INF", "ParamKind", "ParseError", "PropagationTrace", "Rule", "RunConfig", "ThrottlingReport",
    "Undefined", "UnknownCheck", "UnsupportedOrder", "Variant", "capt_k", "capture_time_from", "cop_number",
    "encode_graph6", "k_for_pt", "parse_graph6", "propagate", "propagation_time", "pt_param", "solve_game",
    "throttle", "throttle_curve",
]
