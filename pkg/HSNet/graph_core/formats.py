"""
Graph serialisation.

Text format::

    # comment
    n 4
    e 0 1
    e 1 2

JSON format: ``{"n": 4, "edges": [[0, 1], [1, 2]]}``. DOT output is produced
with the graphviz package and only used for visualisation.
"""
from __future__ import annotations

import json
from typing import Mapping

import graphviz
from django.core.exceptions import ValidationError

from .graphs import Graph

ROLE_COLORS = {
    "core": "lightblue",
    "periphery": "lightyellow",
    "orphan": "lightcoral",
    "middle_orphan": "orange",
    "designated": "palegreen",
    "singleton": "lightgrey",
}


def _format_error(line_no: int, message: str) -> ValidationError:
    return ValidationError(
        "line %(line)s: %(message)s",
        code="graph_format",
        params={"line": line_no, "message": message},
    )


def parse_graph_text(text: str) -> Graph:
    """
    Parse the line-oriented graph format.

    Raises:
        ValidationError: naming the offending line number
    """
    node_count: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if node_count is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise _format_error(line_no, f"expected 'n <node_count>', got {line!r}")
            node_count = int(parts[1])
            continue
        if len(parts) != 3 or parts[0] != "e" or not (parts[1].isdigit() and parts[2].isdigit()):
            raise _format_error(line_no, f"expected 'e <i> <j>', got {line!r}")
        i, j = int(parts[1]), int(parts[2])
        if not i < j:
            raise _format_error(line_no, f"edge endpoints must satisfy i < j, got {i} {j}")
        if j >= node_count:
            raise _format_error(line_no, f"node {j} out of range for {node_count} nodes")
        if (i, j) in seen:
            raise _format_error(line_no, f"duplicate edge {i} {j}")
        seen.add((i, j))
        edges.append((i, j))
    if node_count is None:
        raise _format_error(1, "missing 'n <node_count>' header")
    return Graph.from_edges(node_count, edges)


def graph_to_text(g: Graph) -> str:
    lines = [f"n {g.node_count}"]
    lines.extend(f"e {i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.node_count, "edges": [[i, j] for i, j in g.sorted_edges()]}


def graph_from_dict(data: Mapping) -> Graph:
    try:
        node_count = int(data["n"])
        edges = [(int(e[0]), int(e[1])) for e in data.get("edges", [])]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ValidationError("Malformed graph JSON: %(err)s", code="graph_format", params={"err": exc}) from exc
    return Graph.from_edges(node_count, edges)


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _format_error(exc.lineno, exc.msg) from exc
    return graph_from_dict(data)


def load_graph(text: str) -> Graph:
    """Accept either the text or the JSON format."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def graph_to_dot(g: Graph, roles: Mapping[int, str] | None = None, name: str = "G") -> str:
    roles = roles or {}
    dot = graphviz.Graph(name=name, comment="hider-seeker network")
    dot.attr("node", shape="circle", style="filled", fillcolor="white")
    for node in g.nodes:
        role = roles.get(node)
        if role:
            dot.node(str(node), str(node), fillcolor=ROLE_COLORS.get(role, "white"), tooltip=role)
        else:
            dot.node(str(node), str(node))
    for i, j in g.sorted_edges():
        dot.edge(str(i), str(j))
    return dot.source
