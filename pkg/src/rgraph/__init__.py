"""Exact invariant R(L) of links and 4-valent embedded graphs."""

from .bracket import kauffman_bracket
from .diagram import (
    Diagram,
    DiagramError,
    MoveSpec,
    Node,
    Side,
    apply_move,
    applicable_moves,
    braid_closure,
    disjoint_union,
    insert_twist,
    is_planar,
    mirror,
    parse_diagram,
    random_diagram,
    random_walk,
    remove_edges,
    render,
    validate,
)
from .invariant import InvariantReport, evaluate, r_graph, r_link, specialize
from .polyring import INFINITY, LambdaRational, LaurentPoly, format_value

__all__ = [
    "Diagram",
    "DiagramError",
    "MoveSpec",
    "Node",
    "Side",
    "parse_diagram",
    "render",
    "validate",
    "mirror",
    "disjoint_union",
    "is_planar",
    "apply_move",
    "applicable_moves",
    "random_walk",
    "random_diagram",
    "remove_edges",
    "insert_twist",
    "braid_closure",
    "kauffman_bracket",
    "r_link",
    "r_graph",
    "specialize",
    "evaluate",
    "InvariantReport",
    "LaurentPoly",
    "LambdaRational",
    "INFINITY",
    "format_value",
]
