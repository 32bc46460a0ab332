"""
Convert a graph file between the text, JSON and DOT formats.

Usage:
    python manage.py export GRAPH_FILE --format dot [--roles] [--output graph.dot]
"""
from pathlib import Path

from cli.base import HsnetCommand
from cli.reporting import to_json
from graph_core.formats import graph_to_dict, graph_to_dot, graph_to_text, load_graph
from graph_core.graphs import Graph
from graph_core.structure import is_maximal_core_periphery, non_singleton_part


def recognised_roles(g: Graph) -> dict[int, str]:
    """Roles of a maximal core-periphery component plus singletons; empty when g has another shape."""
    part = non_singleton_part(g)
    found = is_maximal_core_periphery(part.graph)
    if found is None:
        return {}
    original = {new: old for old, new in part.mapping.items()}
    roles = {i: "singleton" for i in g.nodes if not g.adjacency[i]}
    for name, nodes in (("core", found.core), ("periphery", found.periphery), ("orphan", found.orphans)):
        roles.update({original[i]: name for i in nodes})
    if found.middle_orphan is not None:
        roles[original[found.middle_orphan]] = "middle_orphan"
    return roles


class Command(HsnetCommand):
    help = "Re-export a graph file as text, JSON or DOT"
    command_name = "export"

    def add_arguments(self, parser):
        parser.add_argument("graph_path", help="Graph in the text or JSON format")
        parser.add_argument("--roles", action="store_true", help="Colour core, periphery and orphans when recognised")
        parser.add_argument("--name", default="G", help="Graph name in DOT output")
        self.add_output_arguments(parser)

    def run(self, options):
        config = self.run_config(graph_path=options["graph_path"], output=options["output"], format=options["format"])
        g = load_graph(Path(config["graph_path"]).read_text())
        roles = recognised_roles(g) if options["roles"] else {}

        if config["format"] == "dot":
            text = graph_to_dot(g, roles, name=options["name"])
        elif config["format"] == "text":
            text = graph_to_text(g)
        else:
            data = graph_to_dict(g)
            if roles:
                data["roles"] = {str(node): role for node, role in sorted(roles.items())}
            text = to_json(data)
        self.emit(text, config["output"], "graph")
