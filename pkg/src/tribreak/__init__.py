"""Pick the nodes or edges whose removal breaks the most triangles."""

from .baselines import evaluate_set
from .bucketqueue import DecrementMaxQueue
from .edge_breaker import bound_edge, dak_e, min_break_edge, simple_greedy_edge
from .errors import (
    DatasetMissingError,
    GraphFormatError,
    InfeasibleError,
    InstanceTooLargeError,
    PlanMismatchError,
    TriBreakError,
)
from .graph import Graph, RelabelMap, parse_edge_list, read_edge_list
from .node_breaker import bound_node, dak_n, min_break_node, simple_greedy_node
from .oracle import brute_force_min_break, brute_force_opt_edges, brute_force_opt_nodes
from .plan import BoundReport, RemovalPlan
from .triangles import count_forward, count_naive, list_triangles

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "DatasetMissingError", "DecrementMaxQueue", "Graph", "GraphFormatError",
    "InfeasibleError", "InstanceTooLargeError", "PlanMismatchError", "RelabelMap", "RemovalPlan",
    "TriBreakError", "bound_edge", "bound_node", "brute_force_min_break", "brute_force_opt_edges",
    "brute_force_opt_nodes", "count_forward", "count_naive", "dak_e", "dak_n", "evaluate_set",
    "list_triangles", "min_break_edge", "min_break_node", "parse_edge_list", "read_edge_list",
    "simple_greedy_edge", "simple_greedy_node",
]
