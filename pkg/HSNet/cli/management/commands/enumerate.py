"""
List every graph on n nodes up to isomorphism.

Usage:
    python manage.py enumerate --n 5 [--values --family square --beta 1]
"""
from cli.base import HsnetCommand
from cli.reporting import to_json
from matrix_game.services import solve_zero_sum
from oracle.services import catalogue
from payoff_engine.rationals import format_rational
from payoff_engine.services import payoff_matrix


class Command(HsnetCommand):
    help = "Canonical edge lists of all graphs on n nodes, optionally with their game values"
    command_name = "enumerate"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="Number of nodes")
        parser.add_argument("--values", action="store_true", help="Solve the game on every graph")
        self.add_utility_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        config = self.run_config(n=options["n"], output=options["output"], format=options["format"])
        entries = catalogue(config["n"])
        u = self.utility(options) if options["values"] else None

        graphs = []
        for entry in entries:
            item = {"edges": [[i, j] for i, j in entry.graph.sorted_edges()]}
            if u is not None:
                value = solve_zero_sum(payoff_matrix(entry.graph, u, entry.sizes)).value
                item["value"] = format_rational(value, u.exact)
            graphs.append(item)

        data = {"n": config["n"], "graph_count": len(graphs), "graphs": graphs}
        if u is not None:
            data["utility"] = u.to_dict()
            if not u.exact:
                data["float"] = True
        self.emit(to_json(data), config["output"], f"{len(graphs)} graphs")
