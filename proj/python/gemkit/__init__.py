"""Colored graphs, crystallizations and tensor-model Gaussian means."""

import json
from fractions import Fraction

from ._core import (
    BudgetExceeded,
    GemError,
    Graph,
    NotABubble,
    connected_sum,
    gaussian_mean_text,
    isomorphic,
    quadratic_bubble_json,
    quartic_bubble_json,
    run_cli,
)
from . import _core

__all__ = [
    "BudgetExceeded", "GemError", "Graph", "NotABubble", "connected_sum", "enumerate", "gaussian_mean",
    "gaussian_mean_text", "info", "isomorphic", "literal_mean", "quadratic_bubble", "quartic_bubble", "run_cli",
]


def _bubble_text(bubble):
    return bubble if isinstance(bubble, str) else json.dumps(bubble)


def quadratic_bubble(d):
    return json.loads(quadratic_bubble_json(d))


def quartic_bubble(d, m=1):
    return json.loads(quartic_bubble_json(d, m))


def gaussian_mean(bubble):
    """Exponent of N -> integer coefficient."""
    return _core.gaussian_mean(_bubble_text(bubble))


def literal_mean(bubble, n):
    return Fraction(*_core.literal_mean(_bubble_text(bubble), n))


def info(graph):
    if not isinstance(graph, Graph):
        graph = Graph.parse(graph)
    return json.loads(graph.info_json())


def enumerate(dimension, max_order, bipartite=False, crystallizations=False):
    return json.loads(_core.enumerate_json(dimension, max_order, bipartite, crystallizations))
