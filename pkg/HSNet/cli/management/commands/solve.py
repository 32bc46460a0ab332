"""
Solve the hider-seeker game on a given graph.

Usage:
    python manage.py solve GRAPH_FILE [--family identity --beta 1] [--output PATH]
"""
from pathlib import Path

from cli.base import HsnetCommand
from cli.reporting import to_json
from graph_core.formats import graph_to_dict, load_graph
from matrix_game.services import solve_zero_sum
from payoff_engine.rationals import format_rational
from payoff_engine.services import capture_probability, payoff_matrix


class Command(HsnetCommand):
    help = "Exact equilibrium value, strategies and capture probability on a graph file"
    command_name = "solve"

    def add_arguments(self, parser):
        parser.add_argument("graph_path", help="Graph in the text ('n 4' / 'e 0 1') or JSON format")
        self.add_utility_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        config = self.run_config(graph_path=options["graph_path"], output=options["output"], format=options["format"])
        u = self.utility(options)
        g = load_graph(Path(config["graph_path"]).read_text())
        solution = solve_zero_sum(payoff_matrix(g, u))

        data = {
            "graph": graph_to_dict(g),
            "utility": u.to_dict(),
            **solution.to_dict(u.exact),
            "capture_probability": format_rational(
                capture_probability(g, solution.row_strategy, solution.col_strategy), u.exact
            ),
        }
        if not u.exact:
            data["float"] = True
        self.emit(to_json(data), config["output"], "solution")
