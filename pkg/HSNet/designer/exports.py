"""
Serialisation of design results for the CLI.
"""
from __future__ import annotations

from graph_core.formats import graph_to_dict, graph_to_dot
from payoff_engine.rationals import format_rational

from .services import DesignResult


def design_to_dict(result: DesignResult) -> dict:
    """JSON-ready design; rationals as reduced "p/q" strings unless the utility is inexact."""
    exact = result.exact
    data = {
        "n": result.graph.node_count,
        "s_star": result.s_star,
        "topology": result.topology,
        "graph": graph_to_dict(result.graph),
        "hider": result.hider.to_list(exact),
        "seeker": result.seeker.to_list(exact),
        "predicted_value": format_rational(result.predicted_value, exact),
    }
    if result.network.middle_orphan is not None:
        data["middle_orphan"] = result.network.middle_orphan
    if not exact:
        data["float"] = True
    return data


def design_to_dot(result: DesignResult) -> str:
    name = f"{result.topology}_{result.graph.node_count}"
    return graph_to_dot(result.graph, result.network.roles(), name=name)
